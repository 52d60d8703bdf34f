//! Two-stage monotone submodular maximization.
//!
//! Given `m` monotone submodular functions over a shared ground set, pick a
//! summary `S` with `|S| ≤ ℓ` so that, restricted to `S`, each function still
//! admits a good solution `T_i ⊆ S` with `|T_i| ≤ k`. The objective is
//! `(1/m) Σ_i f_i(T_i)`.
//!
//! Algorithms:
//!
//! - [`greedy::replacement_greedy`]: centralized, `½(1 - 1/e²)`-approximate.
//! - [`streaming::run_streaming`]: one pass, `1/(6+ε)`-approximate, stores
//!   `O(ℓ log ℓ / ε)` elements.
//! - [`distributed::replacement_distributed`] and
//!   [`distributed::distributed_fast`]: simulated multi-machine variants.
//! - [`oracle::brute_force_opt`]: exhaustive ground truth for tiny instances.
//!
//! ```
//! use twostage::objectives::{make_synthetic, SyntheticKind};
//! use twostage::greedy::replacement_greedy;
//!
//! let family = make_synthetic(SyntheticKind::Coverage, 30, 4, 7).unwrap();
//! let sol = replacement_greedy(&family, &family.ground_ids(), 5, 2).unwrap();
//! assert!(sol.summary().len() <= 5);
//! assert_eq!(family.evaluate_solution(&sol).unwrap(), sol.value());
//! ```

pub mod cli;
pub mod distributed;
mod element;
mod error;
mod family;
mod gain;
pub mod greedy;
pub mod objectives;
pub mod oracle;
mod seed;
mod solution;
pub mod streaming;

pub use element::{set_of, ElementId, ElementSet, GroundSet};
pub use error::{Error, Result};
pub use family::{ObjectiveFamily, SetFunction};
pub use gain::SwapOutcome;
pub use solution::TwoStageSolution;

/// `½(1 - 1/e²)`, the replacement-greedy approximation factor.
pub fn greedy_ratio() -> f64 {
    0.5 * (1.0 - (-2.0f64).exp())
}

/// `α/2` with `α` the greedy factor: the expected factor of
/// replacement-distributed.
pub fn distributed_ratio() -> f64 {
    greedy_ratio() / 2.0
}

/// `αγ/(α+γ)` with `γ = 1/(6+ε)`: the expected factor of distributed-fast.
pub fn distributed_fast_ratio(epsilon: f64) -> f64 {
    let alpha = greedy_ratio();
    let gamma = 1.0 / (6.0 + epsilon);
    alpha * gamma / (alpha + gamma)
}
