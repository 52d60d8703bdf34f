use crate::element::{ElementId, ElementSet};
use crate::family::ObjectiveFamily;
use crate::gain::Move;
use crate::greedy::check_budgets;
use crate::solution::TwoStageSolution;
use crate::{Error, Result};

/// One single-threshold streaming run: the summary `S`, the per-function
/// solutions `T_i` and their cached values.
#[derive(Clone, Debug)]
pub struct StreamState {
    summary: ElementSet,
    sets: Vec<ElementSet>,
    values: Vec<f64>,
    /// `A_i`: every element that has ever been in `T_i` (audited runs only).
    history: Option<Vec<ElementSet>>,
    alpha: f64,
    tau: f64,
    ell: usize,
    k: usize,
}

/// Outcome of one `exchange` call, with the numbers audits need.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct ExchangeReport {
    pub accepted: bool,
    /// `(1/m) Σ ∇_i(u, T_i)`; absent when the element was skipped without
    /// evaluating (full summary or duplicate).
    pub average_gain: Option<f64>,
    pub value_before: f64,
    pub value_after: f64,
}

impl StreamState {
    pub fn new(m: usize, tau: f64, alpha: f64, ell: usize, k: usize) -> Result<Self> {
        check_budgets(ell, k)?;
        if m == 0 {
            return Err(Error::InvalidArgument("need at least one function".into()));
        }
        if !(tau > 0.0 && tau.is_finite()) {
            return Err(Error::InvalidArgument(format!("threshold must be positive, got {tau}")));
        }
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::InvalidArgument(format!("alpha must be positive, got {alpha}")));
        }
        Ok(StreamState {
            summary: ElementSet::new(),
            sets: vec![ElementSet::new(); m],
            values: vec![0.0; m],
            history: None,
            alpha,
            tau,
            ell,
            k,
        })
    }

    /// Also track `A_i` so the `f_i(T_i) ≥ α/(α+1) f_i(A_i)` bound can be
    /// checked after each step.
    pub fn with_history(mut self) -> Self {
        self.history = Some(vec![ElementSet::new(); self.sets.len()]);
        self
    }

    pub fn summary(&self) -> &ElementSet {
        &self.summary
    }

    pub fn per_function(&self) -> &[ElementSet] {
        &self.sets
    }

    pub fn history(&self) -> Option<&[ElementSet]> {
        self.history.as_deref()
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn is_full(&self) -> bool {
        self.summary.len() >= self.ell
    }

    /// `(1/m) Σ f_i(T_i)` from cached values.
    pub fn value(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    pub(crate) fn function_values(&self) -> &[f64] {
        &self.values
    }

    pub fn to_solution(&self) -> TwoStageSolution {
        TwoStageSolution::from_cached(self.summary.clone(), self.sets.clone(), &self.values, self.ell, self.k)
    }

    /// Offers `u` to this run. Returns whether `u` entered the summary.
    pub fn exchange(&mut self, family: &ObjectiveFamily, u: ElementId) -> Result<bool> {
        family.check_element(u)?;
        if family.len() != self.sets.len() {
            return Err(Error::InvalidArgument(format!(
                "state tracks {} functions, family has {}",
                self.sets.len(),
                family.len()
            )));
        }
        Ok(self.exchange_unchecked(family, u).accepted)
    }

    pub(crate) fn exchange_unchecked(&mut self, family: &ObjectiveFamily, u: ElementId) -> ExchangeReport {
        let value_before = self.value();
        let skipped = ExchangeReport {
            accepted: false,
            average_gain: None,
            value_before,
            value_after: value_before,
        };
        if self.is_full() || self.summary.contains(u) {
            return skipped;
        }
        let m = self.sets.len();
        let moves: Vec<Move> = (0..m)
            .map(|i| family.nabla_move(i, u, &self.sets[i], self.values[i], self.alpha, self.k))
            .collect();
        let average_gain = moves.iter().map(|mv| mv.gain).sum::<f64>() / m as f64;
        if average_gain < self.tau {
            return ExchangeReport {
                average_gain: Some(average_gain),
                ..skipped
            };
        }
        self.summary.insert(u);
        for (i, mv) in moves.iter().enumerate() {
            if mv.apply(u, &mut self.sets[i]) {
                self.values[i] = mv.new_value;
                if let Some(h) = self.history.as_mut() {
                    h[i].insert(u);
                }
            }
        }
        ExchangeReport {
            accepted: true,
            average_gain: Some(average_gain),
            value_before,
            value_after: self.value(),
        }
    }
}
