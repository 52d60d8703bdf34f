//! Seeded synthetic instances for tests, examples and sweeps.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Coverage, FacilityLocation, Modular, Point, Region};
use crate::element::GroundSet;
use crate::family::{ObjectiveFamily, SetFunction};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SyntheticKind {
    Modular,
    Coverage,
    Facility,
}

impl FromStr for SyntheticKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "modular" => Ok(SyntheticKind::Modular),
            "coverage" => Ok(SyntheticKind::Coverage),
            "facility" => Ok(SyntheticKind::Facility),
            other => Err(Error::InvalidArgument(format!("unknown synthetic kind `{other}`"))),
        }
    }
}

impl fmt::Display for SyntheticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SyntheticKind::Modular => "modular",
            SyntheticKind::Coverage => "coverage",
            SyntheticKind::Facility => "facility",
        })
    }
}

const BOX: f64 = 0.05;
const REGION_SPREAD: f64 = 0.01;
const REGION_POINTS: usize = 10;

/// Uniform sites in a small square plus `m` regions of ten demand points
/// scattered around uniform centers. The square is about 5 km across, the
/// scale at which the convenience score is informative.
pub fn facility_instance(n: usize, m: usize, seed: u64) -> Result<(GroundSet<Point>, Vec<Region>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sites: Vec<Point> = (0..n)
        .map(|_| Point::new(rng.gen_range(0.0..BOX), rng.gen_range(0.0..BOX)))
        .collect();
    let regions = (0..m)
        .map(|_| {
            let c = Point::new(rng.gen_range(0.0..BOX), rng.gen_range(0.0..BOX));
            let members = (0..REGION_POINTS)
                .map(|_| {
                    Point::new(
                        c.x + rng.gen_range(-REGION_SPREAD..REGION_SPREAD),
                        c.y + rng.gen_range(-REGION_SPREAD..REGION_SPREAD),
                    )
                })
                .collect();
            Region::new(members)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((GroundSet::new(sites)?, regions))
}

/// A deterministic family of `m` functions over `n` elements.
pub fn make_synthetic(kind: SyntheticKind, n: usize, m: usize, seed: u64) -> Result<ObjectiveFamily> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument("synthetic instances need n >= 1 and m >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let functions: Vec<Box<dyn SetFunction>> = match kind {
        SyntheticKind::Modular => (0..m)
            .map(|_| {
                let w = (0..n).map(|_| rng.gen_range(0.0..1.0)).collect();
                Box::new(Modular::new(w)) as Box<dyn SetFunction>
            })
            .collect(),
        SyntheticKind::Coverage => {
            let universe = (2 * n).max(8);
            (0..m)
                .map(|_| {
                    let covers: Vec<Vec<usize>> = (0..n)
                        .map(|_| (0..universe).filter(|_| rng.gen_bool(0.2)).collect())
                        .collect();
                    Box::new(Coverage::new(universe, &covers)) as Box<dyn SetFunction>
                })
                .collect()
        }
        SyntheticKind::Facility => {
            let (ground, regions) = facility_instance(n, m, rng.gen())?;
            let sites: Arc<[Point]> = ground.into_payloads().into();
            regions
                .into_iter()
                .map(|r| Box::new(FacilityLocation::new(r, sites.clone())) as Box<dyn SetFunction>)
                .collect()
        }
    };
    ObjectiveFamily::new(n, functions)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_family() {
        let a = make_synthetic(SyntheticKind::Modular, 3, 2, 7).unwrap();
        let b = make_synthetic(SyntheticKind::Modular, 3, 2, 7).unwrap();
        for i in 0..2 {
            for e in 0..3u32 {
                let s = crate::element::set_of(&[e]);
                assert_eq!(a.value(i, &s).unwrap(), b.value(i, &s).unwrap());
            }
        }
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("Facility".parse::<SyntheticKind>().unwrap(), SyntheticKind::Facility);
        assert!(matches!("sphere".parse::<SyntheticKind>(), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn rejects_empty_sizes() {
        assert!(make_synthetic(SyntheticKind::Coverage, 0, 1, 1).is_err());
        assert!(make_synthetic(SyntheticKind::Coverage, 1, 0, 1).is_err());
    }

    #[test]
    fn facility_values_are_informative() {
        let fam = make_synthetic(SyntheticKind::Facility, 50, 3, 2).unwrap();
        let all = fam.ground_ids().into_iter().collect::<crate::ElementSet>();
        let v = fam.value(0, &all).unwrap();
        assert!(v > 1.0 && v <= 10.0, "value {v}");
        let single = fam.value(0, &crate::element::set_of(&[0])).unwrap();
        assert!(single < v);
    }
}
