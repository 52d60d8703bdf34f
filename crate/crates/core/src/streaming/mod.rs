//! Single-pass algorithms.
//!
//! [`StreamState::exchange`] is the per-element acceptance rule: an arrival
//! enters `S` when the average of its thresholded gains `∇_i` reaches `τ`.
//! [`run_know_opt`] runs one state with `τ = opt / (βℓ)`; [`run_streaming`]
//! drives a [`ThresholdManager`] that keeps one state per guess of `τ`.

mod audit;
mod state;
mod threshold;

pub use audit::{StreamAudit, Violation, ViolationKind, AUDIT_TOLERANCE};
pub use state::StreamState;
pub use threshold::{active_levels, instance_bound, LevelSolution, ThresholdInstance, ThresholdManager};

use serde::{Deserialize, Serialize};

use crate::element::ElementId;
use crate::family::ObjectiveFamily;
use crate::greedy::check_budgets;
use crate::solution::TwoStageSolution;
use crate::{Error, Result};

/// Parameters of a threshold-guessing streaming run.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct StreamConfig {
    pub epsilon: f64,
    pub alpha: f64,
    pub beta: f64,
    pub ell: usize,
    pub k: usize,
}

impl StreamConfig {
    /// `α = 1` and `β = (6+ε)/(1+ε)`, which gives a `1/(6+ε)` guarantee.
    pub fn new(ell: usize, k: usize, epsilon: f64) -> Self {
        StreamConfig {
            epsilon,
            alpha: 1.0,
            beta: default_beta(epsilon),
            ell,
            k,
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_budgets(self.ell, self.k)?;
        if !(self.epsilon > 0.0 && self.epsilon.is_finite()) {
            return Err(Error::InvalidArgument(format!("epsilon must be positive, got {}", self.epsilon)));
        }
        if !(self.alpha > 0.0 && self.alpha.is_finite()) {
            return Err(Error::InvalidArgument(format!("alpha must be positive, got {}", self.alpha)));
        }
        if !(self.beta >= 1.0 && self.beta.is_finite()) {
            return Err(Error::InvalidArgument(format!("beta must be at least 1, got {}", self.beta)));
        }
        Ok(())
    }
}

pub fn default_beta(epsilon: f64) -> f64 {
    (6.0 + epsilon) / (1.0 + epsilon)
}

/// Approximation factor for a known optimum:
/// `min{ α(β-1) / (β((α+1)² + α)), 1/β }`.
pub fn know_opt_ratio(alpha: f64, beta: f64) -> f64 {
    let swap_bound = alpha * (beta - 1.0) / (beta * ((alpha + 1.0).powi(2) + alpha));
    swap_bound.min(1.0 / beta)
}

/// Approximation factor with guessed thresholds:
/// `min{ α(β-1) / (β((α+1)² + α)), 1/(β(1+ε)) }`.
pub fn streaming_ratio(alpha: f64, beta: f64, epsilon: f64) -> f64 {
    let swap_bound = alpha * (beta - 1.0) / (beta * ((alpha + 1.0).powi(2) + alpha));
    swap_bound.min(1.0 / (beta * (1.0 + epsilon)))
}

/// Result of a streaming pass with its resource counters.
#[derive(Clone, Debug)]
pub struct StreamRun {
    pub solution: TwoStageSolution,
    pub peak_stored: usize,
    pub peak_instances: usize,
    pub audit: Option<StreamAudit>,
}

/// One pass with a known optimum estimate `opt`; `τ = opt / (βℓ)`.
pub fn run_know_opt<I>(
    stream: I,
    family: &ObjectiveFamily,
    opt: f64,
    alpha: f64,
    beta: f64,
    ell: usize,
    k: usize,
) -> Result<TwoStageSolution>
where
    I: IntoIterator<Item = ElementId>,
{
    know_opt_pass(stream, family, opt, alpha, beta, ell, k, false).map(|r| r.solution)
}

/// [`run_know_opt`] with invariant auditing. `δ^t` is tracked with
/// uncounted evaluations so evaluation counts match the plain run.
#[allow(clippy::too_many_arguments)]
pub fn run_know_opt_audited<I>(
    stream: I,
    family: &ObjectiveFamily,
    opt: f64,
    alpha: f64,
    beta: f64,
    ell: usize,
    k: usize,
) -> Result<StreamRun>
where
    I: IntoIterator<Item = ElementId>,
{
    know_opt_pass(stream, family, opt, alpha, beta, ell, k, true)
}

#[allow(clippy::too_many_arguments)]
fn know_opt_pass<I>(
    stream: I,
    family: &ObjectiveFamily,
    opt: f64,
    alpha: f64,
    beta: f64,
    ell: usize,
    k: usize,
    audited: bool,
) -> Result<StreamRun>
where
    I: IntoIterator<Item = ElementId>,
{
    if !(opt > 0.0 && opt.is_finite()) {
        return Err(Error::InvalidArgument(format!("opt must be positive, got {opt}")));
    }
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::InvalidArgument(format!("beta must be positive, got {beta}")));
    }
    let tau = opt / (beta * ell.max(1) as f64);
    let mut state = StreamState::new(family.len(), tau, alpha, ell, k)?;
    let mut audit = audited.then(StreamAudit::default);
    if audited {
        state = state.with_history();
    }
    let mut delta = 0.0f64;
    let mut peak = 0;
    for (t, u) in stream.into_iter().enumerate() {
        family.check_element(u)?;
        let report = state.exchange_unchecked(family, u);
        if let Some(a) = audit.as_mut() {
            let single: f64 = (0..family.len()).map(|i| family.peek(i, &[u])).sum::<f64>() / family.len() as f64;
            delta = delta.max(single);
            a.arrivals = t + 1;
            a.check_exchange(family, &state, &report, delta, t + 1);
        }
        peak = peak.max(state.summary().len());
    }
    Ok(StreamRun {
        solution: state.to_solution(),
        peak_stored: peak,
        peak_instances: 1,
        audit,
    })
}

/// One pass with threshold guessing; returns the best instance.
pub fn run_streaming<I>(stream: I, family: &ObjectiveFamily, config: StreamConfig) -> Result<TwoStageSolution>
where
    I: IntoIterator<Item = ElementId>,
{
    streaming_pass(stream, family, config, false).map(|r| r.solution)
}

/// [`run_streaming`] with counters and, optionally, invariant auditing.
pub fn run_streaming_detailed<I>(
    stream: I,
    family: &ObjectiveFamily,
    config: StreamConfig,
    audited: bool,
) -> Result<StreamRun>
where
    I: IntoIterator<Item = ElementId>,
{
    streaming_pass(stream, family, config, audited)
}

fn streaming_pass<I>(stream: I, family: &ObjectiveFamily, config: StreamConfig, audited: bool) -> Result<StreamRun>
where
    I: IntoIterator<Item = ElementId>,
{
    let mut mgr = ThresholdManager::new(family.len(), config)?;
    if audited {
        mgr = mgr.with_audit();
    }
    for u in stream {
        mgr.process(family, u)?;
    }
    Ok(StreamRun {
        solution: mgr.best(),
        peak_stored: mgr.peak_stored(),
        peak_instances: mgr.peak_instances(),
        audit: mgr.audit().cloned(),
    })
}
