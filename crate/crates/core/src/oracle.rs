//! Exhaustive two-stage solver for tiny instances.
//!
//! Every `f_i` is tabulated once over all subsets of size `≤ k`; each summary
//! `S` with `|S| ≤ ℓ` is then scored by looking up the best `T ⊆ S` per
//! function. Ties are broken towards the lexicographically smallest sorted
//! id list, both for `S` and for each `T_i`.

use std::collections::HashMap;

use crate::element::{ElementId, ElementSet};
use crate::family::ObjectiveFamily;
use crate::solution::TwoStageSolution;
use crate::{Error, Result};

/// Default refusal threshold, in table lookups plus evaluations.
pub const DEFAULT_ORACLE_BUDGET: f64 = 1e8;

const MAX_ORACLE_ELEMENTS: usize = 128;

#[derive(Clone, Debug)]
pub struct OracleResult {
    pub opt: f64,
    pub solution: TwoStageSolution,
}

fn binomial(n: usize, r: usize) -> f64 {
    if r > n {
        return 0.0;
    }
    let r = r.min(n - r);
    (0..r).fold(1.0, |acc, j| acc * (n - j) as f64 / (j + 1) as f64)
}

/// Work the oracle would do for `n` elements: lookups over every `(S, T)`
/// pair plus the tabulation itself, times `m`.
pub fn oracle_work(n: usize, m: usize, ell: usize, k: usize) -> f64 {
    let ell = ell.min(n);
    let k = k.min(ell);
    let lookups: f64 = (0..=ell)
        .map(|s| binomial(n, s) * (0..=k.min(s)).map(|j| binomial(s, j)).sum::<f64>())
        .sum();
    let table: f64 = (0..=k).map(|j| binomial(n, j)).sum();
    (lookups + table) * m as f64
}

/// Calls `visit` with every `r`-subset of `0..n` as ascending indices, in
/// lexicographic order.
fn for_each_combination(n: usize, r: usize, mut visit: impl FnMut(&[usize])) {
    if r > n {
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        visit(&idx);
        let mut i = r;
        while i > 0 && idx[i - 1] == i - 1 + n - r {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn mask_of(indices: &[usize]) -> u128 {
    indices.iter().fold(0u128, |m, &i| m | (1u128 << i))
}

pub fn brute_force_opt(family: &ObjectiveFamily, ground: &[ElementId], ell: usize, k: usize) -> Result<OracleResult> {
    brute_force_opt_with_budget(family, ground, ell, k, DEFAULT_ORACLE_BUDGET)
}

pub fn brute_force_opt_with_budget(
    family: &ObjectiveFamily,
    ground: &[ElementId],
    ell: usize,
    k: usize,
    budget: f64,
) -> Result<OracleResult> {
    if ell == 0 || k == 0 {
        return Err(Error::InvalidArgument("budgets must be positive".into()));
    }
    let elems: ElementSet = ground.iter().copied().collect();
    family.check_set(&elems)?;
    let elems = elems.as_slice();
    let n = elems.len();
    let m = family.len();
    let estimated = oracle_work(n, m, ell, k);
    if n > MAX_ORACLE_ELEMENTS || estimated > budget {
        return Err(Error::BudgetExceeded { estimated, budget });
    }
    let ell_eff = ell.min(n);
    let k_eff = k.min(ell_eff);

    let mut tables: Vec<HashMap<u128, f64>> = vec![HashMap::new(); m];
    let mut scratch = Vec::with_capacity(k_eff);
    for r in 0..=k_eff {
        for_each_combination(n, r, |c| {
            scratch.clear();
            scratch.extend(c.iter().map(|&i| elems[i]));
            let key = mask_of(c);
            for (i, table) in tables.iter_mut().enumerate() {
                table.insert(key, family.eval(i, &scratch));
            }
        });
    }

    struct Best {
        value: f64,
        summary: Vec<usize>,
        per_function: Vec<Vec<usize>>,
    }
    let mut best: Option<Best> = None;
    let ids = |v: &[usize]| -> Vec<ElementId> { v.iter().map(|&i| elems[i]).collect() };

    for s_size in 0..=ell_eff {
        for_each_combination(n, s_size, |s| {
            let mut total = 0.0;
            let mut picks: Vec<Vec<usize>> = Vec::with_capacity(m);
            for table in &tables {
                let mut best_t: Option<(f64, Vec<usize>)> = None;
                for t_size in 0..=k_eff.min(s_size) {
                    for_each_combination(s_size, t_size, |t| {
                        let chosen: Vec<usize> = t.iter().map(|&j| s[j]).collect();
                        let v = table[&mask_of(&chosen)];
                        let better = match &best_t {
                            None => true,
                            Some((bv, bt)) => v > *bv || (v == *bv && ids(&chosen) < ids(bt)),
                        };
                        if better {
                            best_t = Some((v, chosen));
                        }
                    });
                }
                let (v, t) = best_t.expect("empty T is always a candidate");
                total += v;
                picks.push(t);
            }
            let value = total / m as f64;
            let better = match &best {
                None => true,
                Some(b) => value > b.value || (value == b.value && ids(s) < ids(&b.summary)),
            };
            if better {
                best = Some(Best {
                    value,
                    summary: s.to_vec(),
                    per_function: picks,
                });
            }
        });
    }

    let best = best.expect("the empty summary is always enumerated");
    let summary: ElementSet = ids(&best.summary).into_iter().collect();
    let per_function: Vec<ElementSet> = best
        .per_function
        .iter()
        .map(|t| ids(t).into_iter().collect())
        .collect();
    let values: Vec<f64> = best
        .per_function
        .iter()
        .zip(&tables)
        .map(|(t, table)| table[&mask_of(t)])
        .collect();
    Ok(OracleResult {
        opt: best.value,
        solution: TwoStageSolution::from_cached(summary, per_function, &values, ell, k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::set_of;
    use crate::objectives::Modular;

    #[test]
    fn combinations_in_lex_order() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| seen.push(c.to_vec()));
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut count = 0;
        for_each_combination(3, 0, |c| {
            assert!(c.is_empty());
            count += 1;
        });
        assert_eq!(count, 1);
        for_each_combination(2, 3, |_| panic!("no 3-subsets of 2"));
    }

    #[test]
    fn worked_pair() {
        let fam = ObjectiveFamily::new(
            3,
            vec![
                Box::new(Modular::new(vec![3.0, 2.0, 1.0])),
                Box::new(Modular::new(vec![1.0, 2.0, 3.0])),
            ],
        )
        .unwrap();
        let res = brute_force_opt(&fam, &fam.ground_ids(), 2, 1).unwrap();
        assert_eq!(res.opt, 3.0);
        assert_eq!(res.solution.summary(), &set_of(&[0, 2]));
        assert_eq!(res.solution.per_function(), &[set_of(&[0]), set_of(&[2])]);
    }

    #[test]
    fn refuses_over_budget() {
        let fam = ObjectiveFamily::new(40, vec![Box::new(Modular::new(vec![1.0; 40]))]).unwrap();
        let err = brute_force_opt_with_budget(&fam, &fam.ground_ids(), 10, 5, 1e6);
        assert!(matches!(err, Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), 120.0);
        assert_eq!(binomial(3, 5), 0.0);
        assert_eq!(binomial(5, 0), 1.0);
    }
}
