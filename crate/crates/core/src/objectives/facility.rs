//! Facility location with a sigmoid convenience score between locations.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::element::ElementId;
use crate::family::SetFunction;
use crate::{Error, Result};

/// A planar location in raw coordinate degrees.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }
}

pub fn manhattan(a: Point, b: Point) -> f64 {
    (a.x - b.x).abs() + (a.y - b.y).abs()
}

/// `c(a, b) = 2 - 2 / (1 + exp(-200 d))` with `d` the Manhattan distance.
///
/// Evaluated as `2e / (1 + e)` with `e = exp(-200 d)`: the same quantity, but
/// it stays accurate for small scores and is exactly 0 once `e` underflows.
pub fn facility_convenience(a: Point, b: Point) -> f64 {
    let e = (-200.0 * manhattan(a, b)).exp();
    2.0 * e / (1.0 + e)
}

/// A demand region `R_i`: the customer locations one function scores.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Region {
    members: Vec<Point>,
}

impl Region {
    pub fn new(members: Vec<Point>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::InvalidArgument("a region needs at least one point".into()));
        }
        if members.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(Error::InvalidArgument("region points must be finite".into()));
        }
        Ok(Region { members })
    }

    pub fn members(&self) -> &[Point] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `Σ_{a ∈ R} max_{b ∈ T} c(a, b)`, with an empty max taken as 0.
pub fn facility_value(region: &Region, chosen: &[Point]) -> f64 {
    region
        .members
        .iter()
        .map(|&a| {
            chosen
                .iter()
                .map(|&b| facility_convenience(a, b))
                .fold(0.0, f64::max)
        })
        .sum()
}

/// One facility-location function over a shared table of candidate sites.
#[derive(Clone, Debug)]
pub struct FacilityLocation {
    region: Region,
    sites: Arc<[Point]>,
}

impl FacilityLocation {
    pub fn new(region: Region, sites: Arc<[Point]>) -> Self {
        FacilityLocation { region, sites }
    }

    pub fn region(&self) -> &Region {
        &self.region
    }
}

impl SetFunction for FacilityLocation {
    fn value(&self, set: &[ElementId]) -> f64 {
        self.region
            .members
            .iter()
            .map(|&a| {
                set.iter()
                    .map(|b| facility_convenience(a, self.sites[b.index()]))
                    .fold(0.0, f64::max)
            })
            .sum()
    }

    fn name(&self) -> &str {
        "facility-location"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convenience_at_zero_distance_is_one() {
        let p = Point::new(40.75, -73.99);
        assert_eq!(facility_convenience(p, p), 1.0);
    }

    #[test]
    fn convenience_far_apart_underflows_to_zero() {
        let c = facility_convenience(Point::new(0.0, 0.0), Point::new(1.0, 0.0));
        assert!(c < 1e-80 && !c.is_nan());
        let c = facility_convenience(Point::new(0.0, 0.0), Point::new(50.0, 50.0));
        assert_eq!(c, 0.0);
    }

    #[test]
    fn value_of_empty_and_self() {
        let p = Point::new(1.0, 2.0);
        let r = Region::new(vec![p]).unwrap();
        assert_eq!(facility_value(&r, &[]), 0.0);
        assert_eq!(facility_value(&r, &[p]), 1.0);
        assert!(Region::new(vec![]).is_err());
    }
}
