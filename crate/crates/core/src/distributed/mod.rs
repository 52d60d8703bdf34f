//! Simulated multi-machine algorithms.
//!
//! Both algorithms split the ground set uniformly at random, solve each part
//! independently, then run replacement greedy over the union of the parts'
//! summaries and keep whichever of (best part solution, merged solution) is
//! better. Workers run as rayon tasks; their outputs are collected in machine
//! order, so results never depend on scheduling.

mod partition;

pub use partition::{partition, PartitionPlan};

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::element::{ElementId, ElementSet};
use crate::family::ObjectiveFamily;
use crate::greedy::{check_budgets, replacement_greedy};
use crate::solution::TwoStageSolution;
use crate::streaming::{LevelSolution, StreamConfig, ThresholdManager};
use crate::{Error, Result};

/// What a worker sends back to the coordinator.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WorkerResult {
    Greedy { solution: TwoStageSolution },
    PseudoStreaming { levels: Vec<LevelSolution> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WorkerOutput {
    pub machine: usize,
    pub result: WorkerResult,
}

impl WorkerOutput {
    pub fn solutions(&self) -> Vec<&TwoStageSolution> {
        match &self.result {
            WorkerResult::Greedy { solution } => vec![solution],
            WorkerResult::PseudoStreaming { levels } => levels.iter().map(|l| &l.solution).collect(),
        }
    }

    /// Canonical wire form for out-of-process workers.
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[derive(Clone, Debug)]
pub struct DistributedRun {
    pub solution: TwoStageSolution,
    pub workers: Vec<WorkerOutput>,
    pub best_worker_value: f64,
    /// Size of the union handed to the merge-stage greedy.
    pub merge_candidates: usize,
    pub merged_value: Option<f64>,
}

/// Streaming over a part in ascending id order, returning every final level.
///
/// The output is a function of the part as a set: enumeration order of
/// `part` does not matter.
pub fn pseudo_streaming(part: &[ElementId], family: &ObjectiveFamily, config: StreamConfig) -> Result<Vec<LevelSolution>> {
    let ordered: ElementSet = part.iter().copied().collect();
    let mut mgr = ThresholdManager::new(family.len(), config)?;
    for u in ordered.iter() {
        mgr.process(family, u)?;
    }
    Ok(mgr.level_solutions())
}

fn greedy_worker(family: &ObjectiveFamily, part: &[ElementId], ell: usize, k: usize) -> Result<TwoStageSolution> {
    if part.is_empty() {
        return Ok(TwoStageSolution::empty(family.len(), ell, k));
    }
    replacement_greedy(family, part, ell, k)
}

fn merge(
    family: &ObjectiveFamily,
    workers: Vec<WorkerOutput>,
    ell: usize,
    k: usize,
) -> Result<DistributedRun> {
    let mut best: Option<&TwoStageSolution> = None;
    let mut union = ElementSet::new();
    for w in &workers {
        for sol in w.solutions() {
            if best.is_none_or(|b| sol.value() > b.value()) {
                best = Some(sol);
            }
            union.union_with(sol.summary());
        }
    }
    let best = best
        .cloned()
        .unwrap_or_else(|| TwoStageSolution::empty(family.len(), ell, k));
    let merge_candidates = union.len();
    let merged = if union.is_empty() {
        None
    } else {
        Some(replacement_greedy(family, union.as_slice(), ell, k)?)
    };
    let merged_value = merged.as_ref().map(|s| s.value());
    let best_worker_value = best.value();
    let solution = match merged {
        Some(m) if m.value() > best.value() => m,
        _ => best,
    };
    Ok(DistributedRun {
        solution,
        workers,
        best_worker_value,
        merge_candidates,
        merged_value,
    })
}

/// Random partition, replacement greedy per machine, greedy merge.
pub fn replacement_distributed(
    family: &ObjectiveFamily,
    ground: &[ElementId],
    machines: usize,
    ell: usize,
    k: usize,
    seed: u64,
) -> Result<DistributedRun> {
    check_budgets(ell, k)?;
    let plan = partition(ground, machines, seed)?;
    let workers = plan
        .parts()
        .into_par_iter()
        .enumerate()
        .map(|(machine, part)| {
            greedy_worker(family, &part, ell, k).map(|solution| WorkerOutput {
                machine,
                result: WorkerResult::Greedy { solution },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    merge(family, workers, ell, k)
}

/// Random partition, pseudo-streaming per machine, greedy merge over every
/// level's summary. Uses `α = 1`, `β = (6+ε)/(1+ε)`.
pub fn distributed_fast(
    family: &ObjectiveFamily,
    ground: &[ElementId],
    machines: usize,
    epsilon: f64,
    ell: usize,
    k: usize,
    seed: u64,
) -> Result<DistributedRun> {
    distributed_fast_with(family, ground, machines, StreamConfig::new(ell, k, epsilon), seed)
}

pub fn distributed_fast_with(
    family: &ObjectiveFamily,
    ground: &[ElementId],
    machines: usize,
    config: StreamConfig,
    seed: u64,
) -> Result<DistributedRun> {
    config.validate()?;
    let plan = partition(ground, machines, seed)?;
    let workers = plan
        .parts()
        .into_par_iter()
        .enumerate()
        .map(|(machine, part)| {
            pseudo_streaming(&part, family, config).map(|levels| WorkerOutput {
                machine,
                result: WorkerResult::PseudoStreaming { levels },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    merge(family, workers, config.ell, config.k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DistributedVariant {
    Distributed,
    Fast,
}

impl FromStr for DistributedVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "distributed" => Ok(DistributedVariant::Distributed),
            "fast" => Ok(DistributedVariant::Fast),
            other => Err(Error::InvalidArgument(format!("unknown variant `{other}`"))),
        }
    }
}

impl fmt::Display for DistributedVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DistributedVariant::Distributed => "distributed",
            DistributedVariant::Fast => "fast",
        })
    }
}

/// Machine count balancing worker and merge cost: `√(n/ℓ)` for the greedy
/// variant, `√n / ℓ` for the streaming one; never below one.
pub fn recommend_machine_count(n: usize, ell: usize, variant: DistributedVariant) -> usize {
    let n = n.max(1) as f64;
    let ell = ell.max(1) as f64;
    let raw = match variant {
        DistributedVariant::Distributed => (n / ell).sqrt(),
        DistributedVariant::Fast => n.sqrt() / ell,
    };
    (raw.round() as usize).max(1)
}
