//! Threshold guessing: one streaming run per `τ = (1+ε)^l` on a geometric
//! grid that follows the running singleton maximum `δ`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::audit::StreamAudit;
use super::state::StreamState;
use super::StreamConfig;
use crate::element::ElementId;
use crate::family::ObjectiveFamily;
use crate::solution::TwoStageSolution;
use crate::Result;

/// A streaming run bound to grid level `l`, with `τ = (1+ε)^l`.
#[derive(Clone, Debug)]
pub struct ThresholdInstance {
    pub level: i32,
    pub state: StreamState,
}

impl ThresholdInstance {
    pub fn tau(&self) -> f64 {
        self.state.tau()
    }
}

/// Final solution of one threshold level.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LevelSolution {
    pub level: i32,
    pub tau: f64,
    pub solution: TwoStageSolution,
}

/// Integer levels `l` with `δ / ((1+ε)βℓ) ≤ (1+ε)^l ≤ δ`, or `None` while
/// `δ = 0`.
pub fn active_levels(delta: f64, epsilon: f64, beta: f64, ell: usize) -> Option<(i32, i32)> {
    if !(delta > 0.0 && delta.is_finite()) {
        return None;
    }
    let base = 1.0 + epsilon;
    let lower = delta / (base * beta * ell as f64);
    let ln_base = base.ln();

    let mut lo = (lower.ln() / ln_base).ceil() as i32;
    while base.powi(lo - 1) >= lower {
        lo -= 1;
    }
    while base.powi(lo) < lower {
        lo += 1;
    }
    let mut hi = (delta.ln() / ln_base).floor() as i32;
    while base.powi(hi + 1) <= delta {
        hi += 1;
    }
    while base.powi(hi) > delta {
        hi -= 1;
    }
    (lo <= hi).then_some((lo, hi))
}

/// Upper bound on simultaneously live levels: `⌈log_{1+ε}((1+ε)βℓ)⌉ + 1`.
pub fn instance_bound(epsilon: f64, beta: f64, ell: usize) -> usize {
    let base = 1.0 + epsilon;
    ((base * beta * ell as f64).ln() / base.ln()).ceil() as usize + 1
}

#[derive(Clone, Debug)]
pub struct ThresholdManager {
    config: StreamConfig,
    m: usize,
    delta: f64,
    instances: BTreeMap<i32, ThresholdInstance>,
    arrivals: usize,
    peak_stored: usize,
    peak_instances: usize,
    audit: Option<StreamAudit>,
}

impl ThresholdManager {
    pub fn new(m: usize, config: StreamConfig) -> Result<Self> {
        config.validate()?;
        if m == 0 {
            return Err(crate::Error::InvalidArgument("need at least one function".into()));
        }
        Ok(ThresholdManager {
            config,
            m,
            delta: 0.0,
            instances: BTreeMap::new(),
            arrivals: 0,
            peak_stored: 0,
            peak_instances: 0,
            audit: None,
        })
    }

    /// Records invariant checks for every arrival; see [`StreamAudit`].
    pub fn with_audit(mut self) -> Self {
        self.audit = Some(StreamAudit::default());
        self
    }

    pub fn config(&self) -> &StreamConfig {
        &self.config
    }

    /// The running `δ^t = max_{t' ≤ t} (1/m) Σ_i f_i({u^{t'}})`.
    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn levels(&self) -> Vec<i32> {
        self.instances.keys().copied().collect()
    }

    pub fn taus(&self) -> Vec<f64> {
        self.instances.values().map(ThresholdInstance::tau).collect()
    }

    pub fn instances(&self) -> impl Iterator<Item = &ThresholdInstance> {
        self.instances.values()
    }

    pub fn arrivals(&self) -> usize {
        self.arrivals
    }

    /// Elements currently held across all live instances.
    pub fn stored(&self) -> usize {
        self.instances.values().map(|i| i.state.summary().len()).sum()
    }

    pub fn peak_stored(&self) -> usize {
        self.peak_stored
    }

    pub fn peak_instances(&self) -> usize {
        self.peak_instances
    }

    pub fn instance_bound(&self) -> usize {
        instance_bound(self.config.epsilon, self.config.beta, self.config.ell)
    }

    pub fn audit(&self) -> Option<&StreamAudit> {
        self.audit.as_ref()
    }

    /// Folds `u` into `δ`, drops levels that fell below the grid and opens
    /// empty instances for new levels at the top.
    pub fn update_thresholds(&mut self, family: &ObjectiveFamily, u: ElementId) -> Result<()> {
        family.check_element(u)?;
        self.update_unchecked(family, u)
    }

    fn update_unchecked(&mut self, family: &ObjectiveFamily, u: ElementId) -> Result<()> {
        let avg = family.singleton_average_unchecked(u);
        if avg <= self.delta {
            return Ok(());
        }
        self.delta = avg;
        let c = &self.config;
        let Some((lo, hi)) = active_levels(self.delta, c.epsilon, c.beta, c.ell) else {
            return Ok(());
        };
        self.instances.retain(|&l, _| l >= lo);
        let base = 1.0 + c.epsilon;
        for l in lo..=hi {
            if self.instances.contains_key(&l) {
                continue;
            }
            let mut state = StreamState::new(self.m, base.powi(l), c.alpha, c.ell, c.k)?;
            if self.audit.is_some() {
                state = state.with_history();
            }
            self.instances.insert(l, ThresholdInstance { level: l, state });
        }
        Ok(())
    }

    /// Processes one arrival: threshold update, then an exchange attempt in
    /// every live instance in ascending level order.
    pub fn process(&mut self, family: &ObjectiveFamily, u: ElementId) -> Result<()> {
        family.check_element(u)?;
        if family.len() != self.m {
            return Err(crate::Error::InvalidArgument(format!(
                "manager tracks {} functions, family has {}",
                self.m,
                family.len()
            )));
        }
        self.arrivals += 1;
        self.update_unchecked(family, u)?;
        let delta = self.delta;
        let arrival = self.arrivals;
        for inst in self.instances.values_mut() {
            let report = inst.state.exchange_unchecked(family, u);
            if let Some(audit) = self.audit.as_mut() {
                audit.check_exchange(family, &inst.state, &report, delta, arrival);
            }
        }
        let bound = self.instance_bound();
        if let Some(audit) = self.audit.as_mut() {
            audit.arrivals = arrival;
            audit.check_instance_count(self.instances.len(), bound, arrival);
        }
        self.peak_stored = self.peak_stored.max(self.stored());
        self.peak_instances = self.peak_instances.max(self.instances.len());
        Ok(())
    }

    /// The best live instance; ties go to the lowest level. An empty solution
    /// when no instance was ever opened.
    pub fn best(&self) -> TwoStageSolution {
        let mut best: Option<&ThresholdInstance> = None;
        for inst in self.instances.values() {
            if best.is_none_or(|b| inst.state.value() > b.state.value()) {
                best = Some(inst);
            }
        }
        match best {
            Some(inst) => inst.state.to_solution(),
            None => TwoStageSolution::empty(self.m, self.config.ell, self.config.k),
        }
    }

    /// Every live instance's solution, in ascending level order.
    pub fn level_solutions(&self) -> Vec<LevelSolution> {
        self.instances
            .values()
            .map(|inst| LevelSolution {
                level: inst.level,
                tau: inst.tau(),
                solution: inst.state.to_solution(),
            })
            .collect()
    }
}
