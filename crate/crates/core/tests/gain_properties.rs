use proptest::prelude::*;
use twostage::objectives::{make_synthetic, SyntheticKind};
use twostage::{ElementId, ElementSet, ObjectiveFamily};

const TOL: f64 = 1e-9;

fn family(seed: u64, n: usize) -> ObjectiveFamily {
    let kind = [SyntheticKind::Modular, SyntheticKind::Coverage, SyntheticKind::Facility][seed as usize % 3];
    make_synthetic(kind, n, 2, seed).unwrap()
}

fn subset(n: usize, mask: u32, limit: usize) -> ElementSet {
    (0..n).filter(|i| mask >> i & 1 == 1).take(limit).map(ElementId::from).collect()
}

/// Best swap by enumeration: strict improvement keeps the first (lowest) id.
fn swap_oracle(f: &ObjectiveFamily, i: usize, x: ElementId, a: &ElementSet) -> (ElementId, f64) {
    let base = f.value(i, a).unwrap();
    let mut best: Option<(ElementId, f64)> = None;
    for &y in a.as_slice() {
        let mut s = a.clone();
        s.remove(y);
        s.insert(x);
        let gain = f.value(i, &s).unwrap() - base;
        if best.is_none_or(|(_, g)| gain > g) {
            best = Some((y, gain));
        }
    }
    best.unwrap()
}

proptest! {
    #[test]
    fn rep_matches_enumeration(seed in 0u64..5000, n in 2usize..9, mask in any::<u32>(), x in 0usize..16) {
        let f = family(seed, n);
        let x = ElementId::from(x % n);
        let a = subset(n, mask, n);
        prop_assume!(!a.is_empty() && !a.contains(x));
        for i in 0..f.len() {
            let got = f.rep(i, x, &a).unwrap();
            let (y, gain) = swap_oracle(&f, i, x, &a);
            prop_assert_eq!(got.replaced, Some(y));
            prop_assert!((got.gain - gain).abs() < TOL);
        }
    }

    #[test]
    fn nabla_is_nonnegative_and_thresholded(
        seed in 0u64..5000, n in 2usize..9, mask in any::<u32>(), x in 0usize..16, k in 1usize..4, alpha in 0.1f64..3.0
    ) {
        let f = family(seed, n);
        let x = ElementId::from(x % n);
        let a = subset(n, mask, k);
        for i in 0..f.len() {
            let out = f.nabla(i, x, &a, alpha, k).unwrap();
            prop_assert!(out.gain >= 0.0);
            if a.contains(x) {
                prop_assert_eq!(out.gain, 0.0);
                continue;
            }
            let fa = f.value(i, &a).unwrap();
            if out.gain > 0.0 {
                prop_assert!(out.gain + TOL >= alpha / k as f64 * fa);
            }
            if a.len() < k {
                let m = f.marginal(i, x, &a).unwrap();
                prop_assert!(out.replaced.is_none());
                if m >= alpha / k as f64 * fa + TOL {
                    prop_assert!((out.gain - m.max(0.0)).abs() < TOL);
                }
            } else if out.gain > 0.0 {
                let (y, g) = swap_oracle(&f, i, x, &a);
                prop_assert_eq!(out.replaced, Some(y));
                prop_assert!((out.gain - g).abs() < TOL);
            }
        }
    }

    #[test]
    fn lambda_is_insertion_or_clamped_swap(seed in 0u64..5000, n in 2usize..9, mask in any::<u32>(), x in 0usize..16, k in 1usize..4) {
        let f = family(seed, n);
        let x = ElementId::from(x % n);
        let a = subset(n, mask, k);
        prop_assume!(!a.contains(x));
        for i in 0..f.len() {
            let out = f.lambda_gain(i, x, &a, k).unwrap();
            if a.len() < k {
                prop_assert!((out.gain - f.marginal(i, x, &a).unwrap()).abs() < TOL);
            } else {
                let (_, g) = swap_oracle(&f, i, x, &a);
                prop_assert!((out.gain - g.max(0.0)).abs() < TOL);
            }
        }
    }
}
