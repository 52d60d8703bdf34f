use crate::element::ElementId;
use crate::family::SetFunction;

/// `f(A) = Σ_{a ∈ A} w_a`; monotone for non-negative weights.
#[derive(Clone, Debug)]
pub struct Modular {
    weights: Vec<f64>,
}

impl Modular {
    pub fn new(weights: Vec<f64>) -> Self {
        debug_assert!(weights.iter().all(|w| *w >= 0.0));
        Modular { weights }
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

impl SetFunction for Modular {
    fn value(&self, set: &[ElementId]) -> f64 {
        set.iter().map(|e| self.weights[e.index()]).sum()
    }

    fn name(&self) -> &str {
        "modular"
    }
}
