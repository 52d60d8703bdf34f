//! Data ingestion, experiment sweeps and reporting behind the `twostage`
//! binary.

mod config;
mod experiment;
mod gen;
mod ingest;
mod regions;
mod report;

pub use config::{Algorithm, ExperimentConfig, ObjectiveKind, ReportFormat};
pub use experiment::{build_instance, run_experiment, run_on_instance, Instance};
pub use gen::{synthetic_features, synthetic_points, write_features_csv, write_points_csv};
pub use ingest::{load_features_csv, load_points_csv, FeatureData};
pub use regions::build_regions;
pub use report::{emit_report, read_json_report, write_csv, write_json, write_reports, ReportRow, RowStatus, CSV_COLUMNS};
