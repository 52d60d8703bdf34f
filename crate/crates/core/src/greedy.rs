//! Centralized replacement greedy.
//!
//! Each round adds to `S` the candidate with the largest total additive gain
//! `Σ_i Λ_i(x, T_i)`, then inserts it into (or swaps it into) every `T_i`
//! where its additive gain is positive.

use serde::{Deserialize, Serialize};

use crate::element::{ElementId, ElementSet};
use crate::family::ObjectiveFamily;
use crate::gain::Move;
use crate::solution::TwoStageSolution;
use crate::{Error, Result};

/// What happened in one greedy round.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GreedyRound {
    pub selected: ElementId,
    pub total_gain: f64,
    /// `(1/m) Σ f_i(T_i)` after the round.
    pub value: f64,
    /// Whether any `T_i` swapped an element out this round.
    pub swapped: bool,
}

#[derive(Clone, Debug)]
pub struct GreedyRun {
    pub solution: TwoStageSolution,
    pub rounds: Vec<GreedyRound>,
}

pub(crate) fn check_budgets(ell: usize, k: usize) -> Result<()> {
    if ell == 0 || k == 0 {
        return Err(Error::InvalidArgument(format!(
            "budgets must be positive (ell = {ell}, k = {k})"
        )));
    }
    if k > ell {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds ell = {ell}")));
    }
    Ok(())
}

/// Runs replacement greedy over `candidates` (any order, duplicates ignored).
pub fn replacement_greedy(
    family: &ObjectiveFamily,
    candidates: &[ElementId],
    ell: usize,
    k: usize,
) -> Result<TwoStageSolution> {
    replacement_greedy_traced(family, candidates, ell, k).map(|run| run.solution)
}

/// Same as [`replacement_greedy`], also returning the per-round trace.
pub fn replacement_greedy_traced(
    family: &ObjectiveFamily,
    candidates: &[ElementId],
    ell: usize,
    k: usize,
) -> Result<GreedyRun> {
    check_budgets(ell, k)?;
    if candidates.is_empty() {
        return Err(Error::InvalidArgument("candidate set is empty".into()));
    }
    let pool: ElementSet = candidates.iter().copied().collect();
    family.check_set(&pool)?;

    let m = family.len();
    let mut summary = ElementSet::new();
    let mut sets = vec![ElementSet::new(); m];
    let mut values = vec![0.0; m];
    let mut rounds = Vec::new();

    let mut scratch: Vec<Move> = Vec::with_capacity(m);
    let mut best_moves: Vec<Move> = Vec::with_capacity(m);

    for _ in 0..ell {
        let mut best: Option<(ElementId, f64)> = None;
        for x in pool.iter().filter(|&x| !summary.contains(x)) {
            scratch.clear();
            let mut total = 0.0;
            for i in 0..m {
                let mv = family.lambda_move(i, x, &sets[i], values[i], k);
                total += mv.gain;
                scratch.push(mv);
            }
            // ascending scan with strict comparison keeps the lowest id on ties
            if best.is_none_or(|(_, t)| total > t) {
                best = Some((x, total));
                std::mem::swap(&mut scratch, &mut best_moves);
            }
        }
        let Some((x, total_gain)) = best else { break };
        if total_gain <= 0.0 {
            break;
        }
        summary.insert(x);
        let mut swapped = false;
        for (i, mv) in best_moves.iter().enumerate() {
            if mv.apply(x, &mut sets[i]) {
                values[i] = mv.new_value;
                swapped |= mv.replaced.is_some();
            }
        }
        rounds.push(GreedyRound {
            selected: x,
            total_gain,
            value: values.iter().sum::<f64>() / m as f64,
            swapped,
        });
    }

    Ok(GreedyRun {
        solution: TwoStageSolution::from_cached(summary, sets, &values, ell, k),
        rounds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::set_of;
    use crate::objectives::Modular;

    fn worked_pair() -> ObjectiveFamily {
        ObjectiveFamily::new(
            3,
            vec![
                Box::new(Modular::new(vec![3.0, 2.0, 1.0])),
                Box::new(Modular::new(vec![1.0, 2.0, 3.0])),
            ],
        )
        .unwrap()
    }

    #[test]
    fn worked_example() {
        let fam = worked_pair();
        let run = replacement_greedy_traced(&fam, &fam.ground_ids(), 2, 1).unwrap();
        let sol = &run.solution;
        assert_eq!(sol.summary(), &set_of(&[0, 2]));
        assert_eq!(sol.per_function(), &[set_of(&[0]), set_of(&[2])]);
        assert_eq!(sol.value(), 3.0);
        assert_eq!(run.rounds[0].total_gain, 4.0);
        assert_eq!(run.rounds[1].total_gain, 2.0);
        assert!(run.rounds[1].swapped);
    }

    #[test]
    fn budgets_covering_everything_take_everything() {
        let fam = ObjectiveFamily::new(4, vec![Box::new(Modular::new(vec![1.0, 0.5, 2.0, 0.1]))]).unwrap();
        let sol = replacement_greedy(&fam, &fam.ground_ids(), 4, 4).unwrap();
        assert_eq!(sol.summary(), &set_of(&[0, 1, 2, 3]));
        assert_eq!(sol.per_function()[0], set_of(&[0, 1, 2, 3]));
    }

    #[test]
    fn zero_gain_stops_early() {
        let fam = ObjectiveFamily::new(3, vec![Box::new(Modular::new(vec![1.0, 0.0, 0.0]))]).unwrap();
        let sol = replacement_greedy(&fam, &fam.ground_ids(), 3, 3).unwrap();
        assert_eq!(sol.summary(), &set_of(&[0]));
    }

    #[test]
    fn argument_errors() {
        let fam = worked_pair();
        let ids = fam.ground_ids();
        assert!(matches!(replacement_greedy(&fam, &ids, 0, 1), Err(Error::InvalidArgument(_))));
        assert!(matches!(replacement_greedy(&fam, &ids, 1, 2), Err(Error::InvalidArgument(_))));
        assert!(matches!(replacement_greedy(&fam, &[], 2, 1), Err(Error::InvalidArgument(_))));
        assert!(matches!(
            replacement_greedy(&fam, &[ElementId(7)], 2, 1),
            Err(Error::InvalidArgument(_))
        ));
    }
}
