//! Exemplar-based clustering, one function per class.
//!
//! For class `i` with members `Ω_i`, `L_i(S)` is the mean distance from each
//! member to its nearest exemplar in `(S ∩ Ω_i) ∪ {e_0}`, where `e_0` is the
//! all-zero vector. The objective is `f_i(S) = L_i({e_0}) - L_i(S ∪ {e_0})`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::element::ElementId;
use crate::family::SetFunction;
use crate::{Error, Result};

/// Per-class object counts of one item.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FeatureVector(pub Vec<u32>);

impl FeatureVector {
    pub fn norm(&self) -> f64 {
        self.0.iter().map(|&v| (v as f64) * (v as f64)).sum::<f64>().sqrt()
    }

    pub fn distance(&self, other: &FeatureVector) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| {
                let d = a as f64 - b as f64;
                d * d
            })
            .sum::<f64>()
            .sqrt()
    }
}

/// `Ω_i = { e : features[e][i] > 0 }` for each class `i < class_count`.
pub fn class_members(features: &[FeatureVector], class_count: usize) -> Vec<Vec<ElementId>> {
    (0..class_count)
        .map(|c| {
            features
                .iter()
                .enumerate()
                .filter(|(_, v)| v.0.get(c).copied().unwrap_or(0) > 0)
                .map(|(e, _)| ElementId::from(e))
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct ExemplarClustering {
    features: Arc<[FeatureVector]>,
    members: Vec<ElementId>,
    to_origin: Vec<f64>,
    baseline: f64,
}

impl ExemplarClustering {
    pub fn new(features: Arc<[FeatureVector]>, mut members: Vec<ElementId>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::Config("exemplar class has no members".into()));
        }
        members.sort_unstable();
        members.dedup();
        if let Some(bad) = members.iter().find(|e| e.index() >= features.len()) {
            return Err(Error::Config(format!("class member {bad} outside the ground set")));
        }
        let to_origin: Vec<f64> = members.iter().map(|e| features[e.index()].norm()).collect();
        let baseline = to_origin.iter().sum::<f64>() / members.len() as f64;
        Ok(ExemplarClustering {
            features,
            members,
            to_origin,
            baseline,
        })
    }

    pub fn members(&self) -> &[ElementId] {
        &self.members
    }

    /// `L_i({e_0})`, the largest value the objective can reach.
    pub fn max_value(&self) -> f64 {
        self.baseline
    }

    fn loss(&self, set: &[ElementId]) -> f64 {
        let exemplars: Vec<&FeatureVector> = set
            .iter()
            .filter(|e| self.members.binary_search(e).is_ok())
            .map(|e| &self.features[e.index()])
            .collect();
        let total: f64 = self
            .members
            .iter()
            .zip(&self.to_origin)
            .map(|(x, &d0)| {
                let fx = &self.features[x.index()];
                exemplars.iter().map(|y| fx.distance(y)).fold(d0, f64::min)
            })
            .sum();
        total / self.members.len() as f64
    }
}

impl SetFunction for ExemplarClustering {
    fn value(&self, set: &[ElementId]) -> f64 {
        self.baseline - self.loss(set)
    }

    fn name(&self) -> &str {
        "exemplar-clustering"
    }
}

/// One-shot evaluation of the exemplar objective for class members `members`
/// and selection `selected`.
pub fn exemplar_value(features: &[FeatureVector], members: &[ElementId], selected: &[ElementId]) -> Result<f64> {
    let f = ExemplarClustering::new(features.to_vec().into(), members.to_vec())?;
    let mut sel = selected.to_vec();
    sel.sort_unstable();
    sel.dedup();
    Ok(f.value(&sel))
}
