use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::element::ElementId;
use crate::seed::mix_seed;
use crate::{Error, Result};

/// Stream tag mixed into the master seed for partition draws.
const PARTITION_STREAM: u64 = 0x7061_7274_6974_696f;

/// Uniform random assignment of elements to `machines` simulated machines.
///
/// Each element draws its machine from its own ChaCha stream (stream id =
/// element id), so an element's assignment depends only on the seed, the
/// machine count and its id, never on which other elements are present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionPlan {
    machines: usize,
    seed: u64,
    assignment: BTreeMap<ElementId, usize>,
}

pub fn partition(ground: &[ElementId], machines: usize, seed: u64) -> Result<PartitionPlan> {
    if machines == 0 {
        return Err(Error::InvalidArgument("need at least one machine".into()));
    }
    let key = mix_seed(seed, PARTITION_STREAM);
    let assignment = ground
        .iter()
        .map(|&e| {
            let mut rng = ChaCha8Rng::seed_from_u64(key);
            rng.set_stream(e.0 as u64);
            (e, rng.gen_range(0..machines))
        })
        .collect();
    Ok(PartitionPlan {
        machines,
        seed,
        assignment,
    })
}

impl PartitionPlan {
    pub fn machines(&self) -> usize {
        self.machines
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn machine_of(&self, e: ElementId) -> Option<usize> {
        self.assignment.get(&e).copied()
    }

    /// Elements per machine, each list ascending.
    pub fn parts(&self) -> Vec<Vec<ElementId>> {
        let mut parts = vec![Vec::new(); self.machines];
        for (&e, &l) in &self.assignment {
            parts[l].push(e);
        }
        parts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(n: u32) -> Vec<ElementId> {
        (0..n).map(ElementId).collect()
    }

    #[test]
    fn single_machine_takes_everything() {
        let plan = partition(&ids(20), 1, 3).unwrap();
        assert_eq!(plan.parts(), vec![ids(20)]);
    }

    #[test]
    fn zero_machines_rejected() {
        assert!(matches!(partition(&ids(3), 0, 1), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn deterministic_and_order_free() {
        let a = partition(&ids(50), 4, 11).unwrap();
        let mut rev = ids(50);
        rev.reverse();
        let b = partition(&rev, 4, 11).unwrap();
        assert_eq!(a, b);
        let c = partition(&ids(50), 4, 12).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn counts_concentrate() {
        let n = 10_000usize;
        let m = 4usize;
        let plan = partition(&ids(n as u32), m, 2024).unwrap();
        let p = 1.0 / m as f64;
        let sigma = (n as f64 * p * (1.0 - p)).sqrt();
        for part in plan.parts() {
            let dev = (part.len() as f64 - n as f64 * p).abs();
            assert!(dev <= 4.0 * sigma, "machine holds {} (sigma {sigma})", part.len());
        }
    }
}
