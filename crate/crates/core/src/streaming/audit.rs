//! Runtime checks of the invariants the streaming guarantees rest on.

use serde::{Deserialize, Serialize};

use super::state::{ExchangeReport, StreamState};
use crate::family::ObjectiveFamily;

/// Absolute slack allowed in every audited inequality.
pub const AUDIT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ViolationKind {
    /// `f_i(T_i) < α/(α+1) · f_i(A_i)`.
    SolutionBelowHistory,
    /// Average thresholded gain of an arrival exceeded the running `δ`.
    GainAboveDelta,
    /// An accepted element raised the average value by less than `τ`.
    AcceptedBelowThreshold,
    /// More live thresholds than `⌈log_{1+ε}((1+ε)βℓ)⌉ + 1`.
    TooManyInstances,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub arrival: usize,
    pub tau: f64,
    pub kind: ViolationKind,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct StreamAudit {
    pub arrivals: usize,
    pub checks: u64,
    pub violations: Vec<Violation>,
}

impl StreamAudit {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    fn flag(&mut self, arrival: usize, tau: f64, kind: ViolationKind, detail: String) {
        self.violations.push(Violation {
            arrival,
            tau,
            kind,
            detail,
        });
    }

    pub(crate) fn check_exchange(
        &mut self,
        family: &ObjectiveFamily,
        state: &StreamState,
        report: &ExchangeReport,
        delta: f64,
        arrival: usize,
    ) {
        let tau = state.tau();
        if let Some(g) = report.average_gain {
            self.checks += 1;
            if g > delta + AUDIT_TOLERANCE {
                self.flag(arrival, tau, ViolationKind::GainAboveDelta, format!("gain {g} > delta {delta}"));
            }
        }
        if !report.accepted {
            return;
        }
        self.checks += 1;
        let rise = report.value_after - report.value_before;
        if rise < tau - AUDIT_TOLERANCE {
            self.flag(
                arrival,
                tau,
                ViolationKind::AcceptedBelowThreshold,
                format!("value rose by {rise} < tau {tau}"),
            );
        }
        if let Some(history) = state.history() {
            let ratio = state.alpha() / (state.alpha() + 1.0);
            for (i, (a, &t_value)) in history.iter().zip(state.function_values()).enumerate() {
                self.checks += 1;
                let a_value = family.peek(i, a.as_slice());
                if t_value < ratio * a_value - AUDIT_TOLERANCE {
                    self.flag(
                        arrival,
                        tau,
                        ViolationKind::SolutionBelowHistory,
                        format!("f_{i}(T) = {t_value} < {ratio} * f_{i}(A) = {}", ratio * a_value),
                    );
                }
            }
        }
    }

    pub(crate) fn check_instance_count(&mut self, count: usize, bound: usize, arrival: usize) {
        self.checks += 1;
        if count > bound {
            self.flag(
                arrival,
                f64::NAN,
                ViolationKind::TooManyInstances,
                format!("{count} live thresholds > bound {bound}"),
            );
        }
    }
}
