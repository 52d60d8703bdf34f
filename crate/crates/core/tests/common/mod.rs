#![allow(dead_code)]

use twostage::objectives::{make_synthetic, SyntheticKind};
use twostage::oracle::brute_force_opt;
use twostage::{ElementId, ObjectiveFamily};

pub const SUITE_N: usize = 10;
pub const SUITE_M: usize = 3;
pub const SUITE_ELL: usize = 3;
pub const SUITE_K: usize = 2;

pub fn kind_for(seed: u64) -> SyntheticKind {
    match seed % 3 {
        0 => SyntheticKind::Modular,
        1 => SyntheticKind::Coverage,
        _ => SyntheticKind::Facility,
    }
}

pub struct SuiteInstance {
    pub seed: u64,
    pub kind: SyntheticKind,
    pub family: ObjectiveFamily,
    pub ground: Vec<ElementId>,
    pub opt: f64,
}

pub fn suite_instance(seed: u64) -> SuiteInstance {
    let kind = kind_for(seed);
    let family = make_synthetic(kind, SUITE_N, SUITE_M, seed).unwrap();
    let ground = family.ground_ids();
    let opt = brute_force_opt(&family, &ground, SUITE_ELL, SUITE_K).unwrap().opt;
    SuiteInstance {
        seed,
        kind,
        family,
        ground,
        opt,
    }
}

pub fn suite(count: u64) -> Vec<SuiteInstance> {
    (0..count).map(suite_instance).collect()
}

/// `δ = max_u (1/m) Σ_i f_i({u})`.
pub fn delta(family: &ObjectiveFamily) -> f64 {
    family
        .ground_ids()
        .into_iter()
        .map(|u| family.singleton_average(u).unwrap())
        .fold(0.0, f64::max)
}
