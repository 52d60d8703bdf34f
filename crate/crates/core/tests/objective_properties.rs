use std::sync::Arc;

use proptest::prelude::*;
use twostage::objectives::{
    class_members, facility_convenience, make_synthetic, ExemplarClustering, FeatureVector, Point, SyntheticKind,
};
use twostage::{ElementId, ElementSet, ObjectiveFamily, SetFunction};

const TOL: f64 = 1e-9;

fn subset(n: usize, mask: u32) -> ElementSet {
    (0..n).filter(|i| mask >> i & 1 == 1).map(ElementId::from).collect()
}

fn kind(idx: u8) -> SyntheticKind {
    [SyntheticKind::Modular, SyntheticKind::Coverage, SyntheticKind::Facility][idx as usize % 3]
}

fn exemplar_family(rows: &[Vec<u32>], classes: usize) -> Option<ObjectiveFamily> {
    let features: Vec<FeatureVector> = rows.iter().map(|r| FeatureVector(r.clone())).collect();
    let members = class_members(&features, classes);
    let features: Arc<[FeatureVector]> = features.into();
    let functions = members
        .into_iter()
        .filter_map(|m| ExemplarClustering::new(features.clone(), m).ok())
        .map(|f| Box::new(f) as Box<dyn SetFunction>)
        .collect::<Vec<_>>();
    if functions.is_empty() {
        return None;
    }
    ObjectiveFamily::new(rows.len(), functions).ok()
}

fn check_monotone_submodular(family: &ObjectiveFamily, a_mask: u32, b_extra: u32, x: usize) -> Result<(), TestCaseError> {
    let n = family.ground_size();
    let full = (1u32 << n) - 1;
    let a = subset(n, a_mask & full);
    let b = subset(n, (a_mask | b_extra) & full);
    let x = ElementId::from(x % n);
    for i in 0..family.len() {
        let fa = family.value(i, &a).unwrap();
        let fb = family.value(i, &b).unwrap();
        prop_assert!(fa >= -TOL, "f_{i} negative: {fa}");
        prop_assert!(fa <= fb + TOL, "not monotone: f(A)={fa} > f(B)={fb}");
        if !b.contains(x) {
            let ga = family.marginal(i, x, &a).unwrap();
            let gb = family.marginal(i, x, &b).unwrap();
            prop_assert!(ga + TOL >= gb, "not submodular: gain {ga} on A < gain {gb} on B");
        }
    }
    Ok(())
}

proptest! {
    #[test]
    fn synthetic_objectives_are_normalized_monotone_submodular(
        seed in 0u64..10_000, k in 0u8..3, n in 1usize..9, a in any::<u32>(), b in any::<u32>(), x in 0usize..16
    ) {
        let family = make_synthetic(kind(k), n, 3, seed).unwrap();
        for i in 0..family.len() {
            prop_assert_eq!(family.value(i, &ElementSet::new()).unwrap(), 0.0);
        }
        check_monotone_submodular(&family, a, b, x)?;
    }

    #[test]
    fn exemplar_objective_is_normalized_monotone_submodular(
        rows in prop::collection::vec(prop::collection::vec(0u32..4, 4), 1..8),
        a in any::<u32>(), b in any::<u32>(), x in 0usize..16
    ) {
        if let Some(family) = exemplar_family(&rows, 4) {
            for i in 0..family.len() {
                prop_assert!(family.value(i, &ElementSet::new()).unwrap().abs() < TOL);
            }
            check_monotone_submodular(&family, a, b, x)?;
        }
    }

    #[test]
    fn convenience_matches_closed_form(x1 in -1.0f64..1.0, y1 in -1.0f64..1.0, x2 in -1.0f64..1.0, y2 in -1.0f64..1.0) {
        let d = (x1 - x2).abs() + (y1 - y2).abs();
        let expected = 2.0 - 2.0 / (1.0 + (-200.0 * d).exp());
        let c = facility_convenience(Point::new(x1, y1), Point::new(x2, y2));
        prop_assert!((c - expected).abs() < 1e-12);
        prop_assert!((0.0..=1.0).contains(&c));
    }
}

#[test]
fn convenience_reference_points() {
    let origin = Point::new(0.0, 0.0);
    assert_eq!(facility_convenience(origin, origin), 1.0);
    // 2 - 2/(1 + e^-2) = 0.2384058440442351
    let c = facility_convenience(origin, Point::new(0.01, 0.0));
    assert!((c - 0.238_405_844_044_235_1).abs() < 1e-12);
    assert_eq!(facility_convenience(origin, Point::new(100.0, 0.0)), 0.0);
}
