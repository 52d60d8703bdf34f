use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::config::ReportFormat;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Ok,
    Skipped,
}

/// One algorithm run at one sweep point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub algorithm: String,
    pub ell: usize,
    pub k: usize,
    pub epsilon: Option<f64>,
    #[serde(rename = "M")]
    pub machines: Option<usize>,
    pub seed: u64,
    pub value: f64,
    pub seconds: f64,
    pub evals: u64,
    pub peak_stored: Option<usize>,
    pub status: RowStatus,
    pub note: Option<String>,
    /// Ascending element ids of `S`.
    pub summary: Vec<u32>,
    /// Ascending element ids of each `T_i`.
    pub per_function: Vec<Vec<u32>>,
}

pub const CSV_COLUMNS: [&str; 10] = [
    "algorithm", "ell", "k", "epsilon", "M", "seed", "value", "seconds", "evals", "peak_stored",
];

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

pub fn write_csv<W: Write>(rows: &[ReportRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    for r in rows {
        w.write_record([
            r.algorithm.clone(),
            r.ell.to_string(),
            r.k.to_string(),
            opt(&r.epsilon),
            opt(&r.machines),
            r.seed.to_string(),
            r.value.to_string(),
            r.seconds.to_string(),
            r.evals.to_string(),
            opt(&r.peak_stored),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(rows: &[ReportRow], mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, rows)?;
    writeln!(out)?;
    Ok(())
}

/// Writes `rows` to `path` in one format (`Both` is not accepted here; see
/// [`write_reports`]).
pub fn emit_report(rows: &[ReportRow], path: impl AsRef<Path>, format: ReportFormat) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::InvalidArgument("no report rows to write".into()));
    }
    let out = BufWriter::new(File::create(path.as_ref())?);
    match format {
        ReportFormat::Csv => write_csv(rows, out),
        ReportFormat::Json => write_json(rows, out),
        ReportFormat::Both => Err(Error::InvalidArgument(
            "emit_report writes one format; use write_reports for both".into(),
        )),
    }
}

/// Writes `<prefix>.csv` and/or `<prefix>.json`; returns the written paths.
pub fn write_reports(rows: &[ReportRow], prefix: impl AsRef<Path>, format: ReportFormat) -> Result<Vec<PathBuf>> {
    let prefix = prefix.as_ref();
    let mut written = Vec::new();
    if matches!(format, ReportFormat::Csv | ReportFormat::Both) {
        let p = prefix.with_extension("csv");
        emit_report(rows, &p, ReportFormat::Csv)?;
        written.push(p);
    }
    if matches!(format, ReportFormat::Json | ReportFormat::Both) {
        let p = prefix.with_extension("json");
        emit_report(rows, &p, ReportFormat::Json)?;
        written.push(p);
    }
    Ok(written)
}

pub fn read_json_report(path: impl AsRef<Path>) -> Result<Vec<ReportRow>> {
    let f = File::open(path)?;
    Ok(serde_json::from_reader(std::io::BufReader::new(f))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row() -> ReportRow {
        ReportRow {
            algorithm: "greedy".into(),
            ell: 3,
            k: 2,
            epsilon: None,
            machines: None,
            seed: 7,
            value: 1.25,
            seconds: 0.0,
            evals: 42,
            peak_stored: None,
            status: RowStatus::Ok,
            note: None,
            summary: vec![0, 4, 9],
            per_function: vec![vec![0, 4], vec![9]],
        }
    }

    #[test]
    fn csv_has_header_and_one_line() {
        let mut buf = Vec::new();
        write_csv(&[row()], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], "algorithm,ell,k,epsilon,M,seed,value,seconds,evals,peak_stored");
        assert_eq!(lines[1], "greedy,3,2,,,7,1.25,0,42,");
    }

    #[test]
    fn json_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let mut r2 = row();
        r2.algorithm = "fast".into();
        r2.epsilon = Some(0.1 + 0.2);
        r2.machines = Some(4);
        r2.peak_stored = Some(17);
        let rows = vec![row(), r2];
        let p = dir.path().join("r.json");
        emit_report(&rows, &p, ReportFormat::Json).unwrap();
        assert_eq!(read_json_report(&p).unwrap(), rows);
        let text = std::fs::read_to_string(&p).unwrap();
        assert!(text.contains("\"M\": 4"));
    }

    #[test]
    fn empty_rows_and_bad_path() {
        let dir = tempfile::tempdir().unwrap();
        assert!(emit_report(&[], dir.path().join("x.csv"), ReportFormat::Csv).is_err());
        let bad = dir.path().join("missing").join("x.csv");
        assert!(matches!(emit_report(&[row()], bad, ReportFormat::Csv), Err(Error::Io(_))));
    }
}
