use std::sync::Arc;
use std::time::Instant;

use super::config::{Algorithm, ExperimentConfig, ObjectiveKind};
use super::ingest::{load_features_csv, load_points_csv};
use super::regions::build_regions;
use super::report::{ReportRow, RowStatus};
use crate::distributed::{distributed_fast_with, replacement_distributed};
use crate::element::ElementId;
use crate::family::{ObjectiveFamily, SetFunction};
use crate::greedy::replacement_greedy;
use crate::objectives::{make_synthetic, ExemplarClustering, FacilityLocation, FeatureVector, Point};
use crate::oracle::brute_force_opt_with_budget;
use crate::solution::TwoStageSolution;
use crate::streaming::{default_beta, run_streaming_detailed, StreamConfig};
use crate::{Error, Result};

/// A loaded objective family plus the ground elements, in stream order.
pub struct Instance {
    pub family: ObjectiveFamily,
    pub ground: Vec<ElementId>,
}

pub fn build_instance(cfg: &ExperimentConfig) -> Result<Instance> {
    let family = match (cfg.objective, &cfg.dataset) {
        (ObjectiveKind::Facility, Some(path)) => {
            let points = load_points_csv(path)?;
            let regions = build_regions(&points, cfg.m, cfg.radius, cfg.cap, cfg.seed)?;
            let n = points.len();
            let sites: Arc<[Point]> = points.into_payloads().into();
            let functions = regions
                .into_iter()
                .map(|r| Box::new(FacilityLocation::new(r, sites.clone())) as Box<dyn SetFunction>)
                .collect();
            ObjectiveFamily::new(n, functions)?
        }
        (ObjectiveKind::Exemplar, Some(path)) => {
            let data = load_features_csv(path, cfg.m)?;
            let n = data.ground.len();
            let features: Arc<[FeatureVector]> = data.ground.into_payloads().into();
            let functions = data
                .classes
                .into_iter()
                .enumerate()
                .map(|(i, members)| {
                    ExemplarClustering::new(features.clone(), members)
                        .map(|f| Box::new(f) as Box<dyn SetFunction>)
                        .map_err(|_| Error::Config(format!("class {i} has no members in the dataset")))
                })
                .collect::<Result<Vec<_>>>()?;
            ObjectiveFamily::new(n, functions)?
        }
        (kind, None) => {
            let synth = kind
                .synthetic_kind()
                .ok_or_else(|| Error::Config(format!("objective {kind:?} needs a dataset")))?;
            make_synthetic(synth, cfg.n, cfg.m, cfg.seed)?
        }
        (kind, Some(_)) => return Err(Error::Config(format!("objective {kind:?} does not take a dataset"))),
    };
    let ground = family.ground_ids();
    Ok(Instance { family, ground })
}

struct Point_ {
    ell: usize,
    k: usize,
    epsilon: Option<f64>,
    machines: Option<usize>,
}

fn row(cfg: &ExperimentConfig, alg: Algorithm, p: &Point_) -> ReportRow {
    ReportRow {
        algorithm: alg.name().to_owned(),
        ell: p.ell,
        k: p.k,
        epsilon: p.epsilon,
        machines: p.machines,
        seed: cfg.seed,
        value: 0.0,
        seconds: 0.0,
        evals: 0,
        peak_stored: None,
        status: RowStatus::Ok,
        note: None,
        summary: Vec::new(),
        per_function: Vec::new(),
    }
}

fn skipped(mut r: ReportRow, why: impl Into<String>) -> ReportRow {
    r.status = RowStatus::Skipped;
    r.note = Some(why.into());
    r
}

fn fill(mut r: ReportRow, sol: &TwoStageSolution, seconds: f64, evals: u64, timing: bool) -> ReportRow {
    r.value = sol.value();
    r.seconds = if timing { seconds } else { 0.0 };
    r.evals = evals;
    r.summary = sol.summary().to_ids();
    r.per_function = sol.per_function().iter().map(|t| t.to_ids()).collect();
    r
}

/// Runs `f`, returning its output with wall-clock seconds and counted
/// evaluations.
fn measured<T>(family: &ObjectiveFamily, f: impl FnOnce() -> Result<T>) -> Result<(T, f64, u64)> {
    let evals0 = family.evaluations();
    let start = Instant::now();
    let out = f()?;
    let seconds = start.elapsed().as_secs_f64();
    Ok((out, seconds, family.evaluations() - evals0))
}

fn run_point(cfg: &ExperimentConfig, inst: &Instance, alg: Algorithm, p: &Point_) -> Result<ReportRow> {
    let base = row(cfg, alg, p);
    if p.k > p.ell {
        return Ok(skipped(base, format!("k = {} exceeds ell = {}", p.k, p.ell)));
    }
    let fam = &inst.family;
    let stream_config = |eps: f64| StreamConfig {
        epsilon: eps,
        alpha: cfg.alpha,
        beta: cfg.beta.unwrap_or_else(|| default_beta(eps)),
        ell: p.ell,
        k: p.k,
    };
    let row = match alg {
        Algorithm::Greedy => {
            let (sol, s, e) = measured(fam, || replacement_greedy(fam, &inst.ground, p.ell, p.k))?;
            fill(base, &sol, s, e, cfg.timing)
        }
        Algorithm::Oracle => {
            match measured(fam, || brute_force_opt_with_budget(fam, &inst.ground, p.ell, p.k, cfg.oracle_budget)) {
                Ok((res, s, e)) => fill(base, &res.solution, s, e, cfg.timing),
                Err(err @ Error::BudgetExceeded { .. }) => skipped(base, err.to_string()),
                Err(err) => return Err(err),
            }
        }
        Algorithm::Streaming => {
            let eps = p.epsilon.expect("streaming points carry epsilon");
            let (run, s, e) = measured(fam, || {
                run_streaming_detailed(inst.ground.iter().copied(), fam, stream_config(eps), false)
            })?;
            let mut r = fill(base, &run.solution, s, e, cfg.timing);
            r.peak_stored = Some(run.peak_stored);
            r
        }
        Algorithm::Distributed => {
            let machines = p.machines.expect("distributed points carry M");
            let (run, s, e) =
                measured(fam, || replacement_distributed(fam, &inst.ground, machines, p.ell, p.k, cfg.seed))?;
            fill(base, &run.solution, s, e, cfg.timing)
        }
        Algorithm::Fast => {
            let eps = p.epsilon.expect("fast points carry epsilon");
            let machines = p.machines.expect("fast points carry M");
            let (run, s, e) =
                measured(fam, || distributed_fast_with(fam, &inst.ground, machines, stream_config(eps), cfg.seed))?;
            fill(base, &run.solution, s, e, cfg.timing)
        }
    };
    Ok(row)
}

fn sweep_points(cfg: &ExperimentConfig, alg: Algorithm) -> Vec<Point_> {
    let mut points = Vec::new();
    let eps_axis: Vec<Option<f64>> = match alg {
        Algorithm::Streaming | Algorithm::Fast => cfg.epsilon.iter().copied().map(Some).collect(),
        _ => vec![None],
    };
    let m_axis: Vec<Option<usize>> = match alg {
        Algorithm::Distributed | Algorithm::Fast => cfg.machines.iter().copied().map(Some).collect(),
        _ => vec![None],
    };
    for &ell in &cfg.ell {
        for &k in &cfg.k {
            for &epsilon in &eps_axis {
                for &machines in &m_axis {
                    points.push(Point_ {
                        ell,
                        k,
                        epsilon,
                        machines,
                    });
                }
            }
        }
    }
    points
}

/// Runs every requested algorithm at every relevant sweep point.
///
/// Axes only apply where they mean something: `epsilon` to streaming and
/// fast, `machines` to distributed and fast. Rows come back sorted by
/// algorithm name, then `(ell, k, epsilon, M)`.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<ReportRow>> {
    cfg.validate()?;
    let inst = build_instance(cfg)?;
    run_on_instance(cfg, &inst)
}

pub fn run_on_instance(cfg: &ExperimentConfig, inst: &Instance) -> Result<Vec<ReportRow>> {
    cfg.validate()?;
    let mut algorithms = cfg.algorithms.clone();
    algorithms.sort();
    algorithms.dedup();
    let mut rows = Vec::new();
    for alg in algorithms {
        for p in sweep_points(cfg, alg) {
            rows.push(run_point(cfg, inst, alg, &p)?);
        }
    }
    rows.sort_by(|a, b| {
        a.algorithm
            .cmp(&b.algorithm)
            .then(a.ell.cmp(&b.ell))
            .then(a.k.cmp(&b.k))
            .then(a.epsilon.unwrap_or(0.0).total_cmp(&b.epsilon.unwrap_or(0.0)))
            .then(a.machines.cmp(&b.machines))
    });
    Ok(rows)
}
