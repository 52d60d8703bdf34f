//! Concrete monotone submodular objectives and seeded synthetic instances.

mod coverage;
mod exemplar;
mod facility;
mod modular;
mod synthetic;

pub use coverage::Coverage;
pub use exemplar::{class_members, exemplar_value, ExemplarClustering, FeatureVector};
pub use facility::{facility_convenience, facility_value, manhattan, FacilityLocation, Point, Region};
pub use modular::Modular;
pub use synthetic::{facility_instance, make_synthetic, SyntheticKind};
