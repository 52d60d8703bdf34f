//! The gain primitives shared by every algorithm: marginal gain, best
//! replacement (`Rep`/`Δ`), the thresholded streaming gain `∇` and the greedy
//! additive gain `Λ`.

use serde::{Deserialize, Serialize};

use crate::element::{ElementId, ElementSet};
use crate::family::ObjectiveFamily;
use crate::{Error, Result};

/// Result of evaluating a candidate move of `x` into a set `A`.
///
/// `replaced` is the element of `A` that `x` would displace; it is absent for
/// pure insertions and for rejected moves.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SwapOutcome {
    pub replaced: Option<ElementId>,
    pub gain: f64,
}

/// A move together with the value of the set it produces, so callers can
/// apply it without evaluating again.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Move {
    pub replaced: Option<ElementId>,
    pub gain: f64,
    pub new_value: f64,
}

impl Move {
    fn reject(base: f64) -> Self {
        Move {
            replaced: None,
            gain: 0.0,
            new_value: base,
        }
    }

    pub fn outcome(&self) -> SwapOutcome {
        SwapOutcome {
            replaced: self.replaced,
            gain: self.gain,
        }
    }

    /// Applies the move to `set` if it carries a positive gain.
    pub fn apply(&self, x: ElementId, set: &mut ElementSet) -> bool {
        if self.gain <= 0.0 {
            return false;
        }
        match self.replaced {
            Some(y) => set.swap(y, x),
            None => {
                set.insert(x);
            }
        }
        true
    }
}

fn with_inserted(a: &[ElementId], x: ElementId) -> Vec<ElementId> {
    let mut v = Vec::with_capacity(a.len() + 1);
    let pos = a.partition_point(|&e| e < x);
    v.extend_from_slice(&a[..pos]);
    v.push(x);
    v.extend_from_slice(&a[pos..]);
    v
}

fn with_swapped(a: &[ElementId], out: ElementId, x: ElementId) -> Vec<ElementId> {
    let mut v: Vec<ElementId> = Vec::with_capacity(a.len());
    let mut placed = false;
    for &e in a {
        if e == out {
            continue;
        }
        if !placed && x < e {
            v.push(x);
            placed = true;
        }
        v.push(e);
    }
    if !placed {
        v.push(x);
    }
    v
}

impl ObjectiveFamily {
    /// `f_i(A + x)` relative to a known `base = f_i(A)`.
    pub(crate) fn insertion_move(&self, i: usize, x: ElementId, a: &ElementSet, base: f64) -> Move {
        let new_value = self.eval(i, &with_inserted(a.as_slice(), x));
        Move {
            replaced: None,
            gain: new_value - base,
            new_value,
        }
    }

    /// `Rep_i(x, A)` and `Δ_i(x, A)` relative to `base = f_i(A)`; `A` must be
    /// non-empty. Ties go to the lowest id.
    pub(crate) fn best_swap(&self, i: usize, x: ElementId, a: &ElementSet, base: f64) -> Move {
        debug_assert!(!a.is_empty());
        let mut best: Option<(ElementId, f64)> = None;
        for y in a.iter() {
            let v = self.eval(i, &with_swapped(a.as_slice(), y, x));
            if best.is_none_or(|(_, bv)| v > bv) {
                best = Some((y, v));
            }
        }
        let (y, new_value) = best.expect("non-empty set");
        Move {
            replaced: Some(y),
            gain: new_value - base,
            new_value,
        }
    }

    pub(crate) fn nabla_move(
        &self,
        i: usize,
        x: ElementId,
        a: &ElementSet,
        base: f64,
        alpha: f64,
        k: usize,
    ) -> Move {
        if a.contains(x) {
            return Move::reject(base);
        }
        let threshold = alpha / k as f64 * base;
        if a.len() < k {
            let mv = self.insertion_move(i, x, a, base);
            if mv.gain >= threshold {
                Move {
                    gain: mv.gain.max(0.0),
                    ..mv
                }
            } else {
                Move::reject(base)
            }
        } else {
            let mv = self.best_swap(i, x, a, base);
            if mv.gain >= threshold && mv.gain > 0.0 {
                mv
            } else {
                Move::reject(base)
            }
        }
    }

    pub(crate) fn lambda_move(&self, i: usize, x: ElementId, a: &ElementSet, base: f64, k: usize) -> Move {
        if a.contains(x) {
            return Move::reject(base);
        }
        if a.len() < k {
            self.insertion_move(i, x, a, base)
        } else {
            let mv = self.best_swap(i, x, a, base);
            if mv.gain > 0.0 {
                mv
            } else {
                Move::reject(base)
            }
        }
    }

    fn check_query(&self, i: usize, x: ElementId, a: &ElementSet) -> Result<()> {
        self.check_function(i)?;
        self.check_element(x)?;
        self.check_set(a)
    }

    fn check_budget(a: &ElementSet, k: usize) -> Result<()> {
        if k == 0 {
            return Err(Error::InvalidArgument("budget k must be at least 1".into()));
        }
        if a.len() > k {
            return Err(Error::StateCorruption(format!(
                "set holds {} elements but the budget is {k}",
                a.len()
            )));
        }
        Ok(())
    }

    /// `f_i(x | A) = f_i(A + x) - f_i(A)`; exactly 0 when `x ∈ A`.
    pub fn marginal(&self, i: usize, x: ElementId, a: &ElementSet) -> Result<f64> {
        self.check_query(i, x, a)?;
        if a.contains(x) {
            return Ok(0.0);
        }
        let base = self.eval(i, a.as_slice());
        Ok(self.insertion_move(i, x, a, base).gain)
    }

    /// The element of `A` whose replacement by `x` gains the most for `f_i`,
    /// and that gain (which may be negative).
    pub fn rep(&self, i: usize, x: ElementId, a: &ElementSet) -> Result<SwapOutcome> {
        self.check_query(i, x, a)?;
        if a.is_empty() {
            return Err(Error::Precondition(
                "rep needs a non-empty set; use insertion below the budget".into(),
            ));
        }
        if a.contains(x) {
            return Err(Error::Precondition(format!("element {x} is already in the set")));
        }
        let base = self.eval(i, a.as_slice());
        Ok(self.best_swap(i, x, a, base).outcome())
    }

    /// Thresholded gain: the insertion (or best swap, once `|A| = k`) gain if
    /// it reaches `(alpha / k) * f_i(A)`, otherwise 0.
    pub fn nabla(&self, i: usize, x: ElementId, a: &ElementSet, alpha: f64, k: usize) -> Result<SwapOutcome> {
        self.check_query(i, x, a)?;
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::InvalidArgument(format!("alpha must be positive, got {alpha}")));
        }
        Self::check_budget(a, k)?;
        let base = self.eval(i, a.as_slice());
        Ok(self.nabla_move(i, x, a, base, alpha, k).outcome())
    }

    /// Additive gain: raw insertion gain below the budget, `max(0, Δ)` at it.
    pub fn lambda_gain(&self, i: usize, x: ElementId, a: &ElementSet, k: usize) -> Result<SwapOutcome> {
        self.check_query(i, x, a)?;
        Self::check_budget(a, k)?;
        let base = self.eval(i, a.as_slice());
        Ok(self.lambda_move(i, x, a, base, k).outcome())
    }
}
