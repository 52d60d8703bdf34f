//! Experiment configuration: a flat `key = value` text format.
//!
//! ```text
//! # ride-share sweep
//! objective = facility
//! dataset = pickups.csv
//! m = 20
//! ell = 10, 20, 30
//! k = 3
//! epsilon = 0.5
//! machines = 2, 4, 8
//! algorithms = distributed, fast
//! output = report
//! ```
//!
//! List-valued keys take comma-separated values. Blank lines and `#`
//! comments are ignored.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::objectives::SyntheticKind;
use crate::oracle::DEFAULT_ORACLE_BUDGET;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ObjectiveKind {
    /// Facility location; loaded from `dataset` when set, synthetic otherwise.
    Facility,
    /// Exemplar clustering over a feature CSV.
    Exemplar,
    Modular,
    Coverage,
}

impl FromStr for ObjectiveKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "facility" => Ok(ObjectiveKind::Facility),
            "exemplar" => Ok(ObjectiveKind::Exemplar),
            "modular" => Ok(ObjectiveKind::Modular),
            "coverage" => Ok(ObjectiveKind::Coverage),
            other => Err(Error::Config(format!("unknown objective `{other}`"))),
        }
    }
}

impl ObjectiveKind {
    pub fn synthetic_kind(self) -> Option<SyntheticKind> {
        match self {
            ObjectiveKind::Facility => Some(SyntheticKind::Facility),
            ObjectiveKind::Modular => Some(SyntheticKind::Modular),
            ObjectiveKind::Coverage => Some(SyntheticKind::Coverage),
            ObjectiveKind::Exemplar => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Distributed,
    Fast,
    Greedy,
    Oracle,
    Streaming,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Distributed => "distributed",
            Algorithm::Fast => "fast",
            Algorithm::Greedy => "greedy",
            Algorithm::Oracle => "oracle",
            Algorithm::Streaming => "streaming",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "distributed" => Ok(Algorithm::Distributed),
            "fast" => Ok(Algorithm::Fast),
            "greedy" => Ok(Algorithm::Greedy),
            "oracle" => Ok(Algorithm::Oracle),
            "streaming" => Ok(Algorithm::Streaming),
            other => Err(Error::Config(format!("unknown algorithm `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Csv,
    Json,
    Both,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            "both" => Ok(ReportFormat::Both),
            other => Err(Error::Config(format!("unknown report format `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub objective: ObjectiveKind,
    pub dataset: Option<PathBuf>,
    /// Ground-set size for synthetic objectives.
    pub n: usize,
    /// Number of functions (regions, or classes for exemplar data).
    pub m: usize,
    pub ell: Vec<usize>,
    pub k: Vec<usize>,
    pub epsilon: Vec<f64>,
    pub machines: Vec<usize>,
    pub alpha: f64,
    /// Overrides the streaming default `(6+ε)/(1+ε)` when set.
    pub beta: Option<f64>,
    pub seed: u64,
    pub algorithms: Vec<Algorithm>,
    /// Region radius in coordinate degrees (0.009 ≈ 1 km).
    pub radius: f64,
    pub cap: usize,
    pub output: Option<PathBuf>,
    pub format: ReportFormat,
    /// When false, `seconds` is reported as 0 so reports are byte-stable.
    pub timing: bool,
    pub oracle_budget: f64,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            objective: ObjectiveKind::Modular,
            dataset: None,
            n: 10,
            m: 3,
            ell: vec![3],
            k: vec![2],
            epsilon: vec![0.5],
            machines: vec![2],
            alpha: 1.0,
            beta: None,
            seed: 1,
            algorithms: vec![Algorithm::Greedy, Algorithm::Streaming],
            radius: 0.009,
            cap: 10,
            output: None,
            format: ReportFormat::Both,
            timing: true,
            oracle_budget: DEFAULT_ORACLE_BUDGET,
        }
    }
}

fn parse_value<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .trim()
        .parse()
        .map_err(|_| Error::Config(format!("`{key}`: cannot parse `{value}`")))
}

fn parse_list<T: FromStr>(key: &str, value: &str) -> Result<Vec<T>> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_value(key, s))
        .collect()
}

fn parse_bool(key: &str, value: &str) -> Result<bool> {
    match value.trim().to_ascii_lowercase().as_str() {
        "true" | "yes" | "on" | "1" => Ok(true),
        "false" | "no" | "off" | "0" => Ok(false),
        _ => Err(Error::Config(format!("`{key}`: expected a boolean, got `{value}`"))),
    }
}

impl ExperimentConfig {
    /// Applies one `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let key = key.trim();
        let v = value.trim();
        match key {
            "objective" => self.objective = v.parse()?,
            "dataset" => self.dataset = (!v.is_empty()).then(|| PathBuf::from(v)),
            "n" => self.n = parse_value(key, v)?,
            "m" => self.m = parse_value(key, v)?,
            "ell" => self.ell = parse_list(key, v)?,
            "k" => self.k = parse_list(key, v)?,
            "epsilon" => self.epsilon = parse_list(key, v)?,
            "machines" | "M" => self.machines = parse_list(key, v)?,
            "alpha" => self.alpha = parse_value(key, v)?,
            "beta" => self.beta = if v.is_empty() { None } else { Some(parse_value(key, v)?) },
            "seed" => self.seed = parse_value(key, v)?,
            "algorithms" => {
                self.algorithms = v
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(str::parse)
                    .collect::<Result<_>>()?
            }
            "radius" => self.radius = parse_value(key, v)?,
            "cap" => self.cap = parse_value(key, v)?,
            "output" => self.output = (!v.is_empty()).then(|| PathBuf::from(v)),
            "format" => self.format = v.parse()?,
            "timing" => self.timing = parse_bool(key, v)?,
            "oracle_budget" => self.oracle_budget = parse_value(key, v)?,
            other => return Err(Error::Config(format!("unknown key `{other}`"))),
        }
        Ok(())
    }

    /// Parses `key = value` lines on top of the defaults.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = ExperimentConfig::default();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected `key = value`", no + 1)))?;
            cfg.set(key, value)
                .map_err(|e| Error::Config(format!("line {}: {e}", no + 1)))?;
        }
        Ok(cfg)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        let mut cfg = Self::parse(&text)?;
        // dataset paths are relative to the config file
        if let (Some(ds), Some(dir)) = (cfg.dataset.as_mut(), path.parent()) {
            if ds.is_relative() {
                *ds = dir.join(&*ds);
            }
        }
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let nonempty = |name: &str, len: usize| {
            if len == 0 {
                Err(Error::Config(format!("sweep axis `{name}` is empty")))
            } else {
                Ok(())
            }
        };
        nonempty("ell", self.ell.len())?;
        nonempty("k", self.k.len())?;
        nonempty("epsilon", self.epsilon.len())?;
        nonempty("machines", self.machines.len())?;
        nonempty("algorithms", self.algorithms.len())?;
        if self.m == 0 {
            return Err(Error::Config("m must be at least 1".into()));
        }
        if self.ell.contains(&0) || self.k.contains(&0) || self.machines.contains(&0) {
            return Err(Error::Config("budgets and machine counts must be at least 1".into()));
        }
        if self.epsilon.iter().any(|e| !(*e > 0.0 && e.is_finite())) {
            return Err(Error::Config("epsilon values must be positive".into()));
        }
        if !(self.alpha > 0.0 && self.alpha.is_finite()) {
            return Err(Error::Config("alpha must be positive".into()));
        }
        if let Some(b) = self.beta {
            if !(b >= 1.0 && b.is_finite()) {
                return Err(Error::Config("beta must be at least 1".into()));
            }
        }
        match self.objective {
            ObjectiveKind::Exemplar if self.dataset.is_none() => {
                return Err(Error::Config("exemplar objective needs a dataset".into()))
            }
            ObjectiveKind::Modular | ObjectiveKind::Coverage if self.dataset.is_some() => {
                return Err(Error::Config("modular and coverage objectives are synthetic only".into()))
            }
            _ => {}
        }
        if self.dataset.is_none() && self.n == 0 {
            return Err(Error::Config("synthetic objectives need n >= 1".into()));
        }
        if self.objective == ObjectiveKind::Facility && self.dataset.is_some() {
            if !(self.radius > 0.0 && self.radius.is_finite()) {
                return Err(Error::Config("radius must be positive".into()));
            }
            if self.cap == 0 {
                return Err(Error::Config("cap must be at least 1".into()));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lists_and_comments() {
        let cfg = ExperimentConfig::parse(
            "# sweep\nobjective = coverage\nell = 3, 5\nk=2\nepsilon = 0.1,0.5 # trailing\nalgorithms = greedy, oracle\ntiming = false\n",
        )
        .unwrap();
        assert_eq!(cfg.objective, ObjectiveKind::Coverage);
        assert_eq!(cfg.ell, vec![3, 5]);
        assert_eq!(cfg.epsilon, vec![0.1, 0.5]);
        assert_eq!(cfg.algorithms, vec![Algorithm::Greedy, Algorithm::Oracle]);
        assert!(!cfg.timing);
        cfg.validate().unwrap();
    }

    #[test]
    fn empty_axis_is_rejected() {
        let cfg = ExperimentConfig::parse("ell =\n").unwrap();
        assert!(matches!(cfg.validate(), Err(Error::Config(_))));
    }

    #[test]
    fn bad_lines() {
        assert!(ExperimentConfig::parse("ell 3\n").is_err());
        assert!(ExperimentConfig::parse("colour = red\n").is_err());
        assert!(ExperimentConfig::parse("k = two\n").is_err());
    }
}
