use serde::{Deserialize, Serialize};

use crate::element::ElementSet;
use crate::family::ObjectiveFamily;
use crate::{Error, Result};

/// A summary `S` with one solution `T_i ⊆ S` per function, plus its cached
/// objective `(1/m) Σ f_i(T_i)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwoStageSolution {
    summary: ElementSet,
    per_function: Vec<ElementSet>,
    value: f64,
    ell: usize,
    k: usize,
}

impl TwoStageSolution {
    pub fn empty(m: usize, ell: usize, k: usize) -> Self {
        TwoStageSolution {
            summary: ElementSet::new(),
            per_function: vec![ElementSet::new(); m],
            value: 0.0,
            ell,
            k,
        }
    }

    /// Builds a solution and evaluates it from scratch.
    pub fn new(
        family: &ObjectiveFamily,
        summary: ElementSet,
        per_function: Vec<ElementSet>,
        ell: usize,
        k: usize,
    ) -> Result<Self> {
        let mut sol = TwoStageSolution {
            summary,
            per_function,
            value: 0.0,
            ell,
            k,
        };
        sol.value = family.evaluate_solution(&sol)?;
        Ok(sol)
    }

    /// Builds a solution from per-function values the caller already holds.
    pub(crate) fn from_cached(
        summary: ElementSet,
        per_function: Vec<ElementSet>,
        values: &[f64],
        ell: usize,
        k: usize,
    ) -> Self {
        let value = values.iter().sum::<f64>() / values.len() as f64;
        TwoStageSolution {
            summary,
            per_function,
            value,
            ell,
            k,
        }
    }

    pub fn summary(&self) -> &ElementSet {
        &self.summary
    }

    pub fn per_function(&self) -> &[ElementSet] {
        &self.per_function
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Checks the structural invariants: `|S| ≤ ℓ`, `|T_i| ≤ k`, `T_i ⊆ S`
    /// and one `T_i` per function.
    pub fn validate(&self, m: usize) -> Result<()> {
        if self.per_function.len() != m {
            return Err(Error::InvariantViolation(format!(
                "solution has {} per-function sets, family has {m}",
                self.per_function.len()
            )));
        }
        if self.summary.len() > self.ell {
            return Err(Error::InvariantViolation(format!(
                "|S| = {} exceeds ell = {}",
                self.summary.len(),
                self.ell
            )));
        }
        for (i, t) in self.per_function.iter().enumerate() {
            if t.len() > self.k {
                return Err(Error::InvariantViolation(format!(
                    "|T_{i}| = {} exceeds k = {}",
                    t.len(),
                    self.k
                )));
            }
            if !t.is_subset(&self.summary) {
                return Err(Error::InvariantViolation(format!("T_{i} is not a subset of S")));
            }
        }
        Ok(())
    }
}

impl ObjectiveFamily {
    /// Recomputes `(1/m) Σ_i f_i(T_i)` from scratch.
    pub fn evaluate_solution(&self, sol: &TwoStageSolution) -> Result<f64> {
        sol.validate(self.len())?;
        self.check_set(&sol.summary)?;
        let total: f64 = sol
            .per_function
            .iter()
            .enumerate()
            .map(|(i, t)| self.eval(i, t.as_slice()))
            .sum();
        Ok(total / self.len() as f64)
    }
}
