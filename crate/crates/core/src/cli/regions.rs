use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::seed::mix_seed;
use crate::element::GroundSet;
use crate::objectives::{manhattan, Point, Region};
use crate::{Error, Result};

const REGION_STREAM: u64 = 0x7265_6769_6f6e;
const MAX_CENTER_DRAWS: usize = 1000;

/// Builds `m` demand regions: each center is uniform in the points' bounding
/// box, and the region is up to `cap` points drawn without replacement from
/// those within Manhattan distance `radius` of it. Centers that capture no
/// point are redrawn.
pub fn build_regions(points: &GroundSet<Point>, m: usize, radius: f64, cap: usize, seed: u64) -> Result<Vec<Region>> {
    if m == 0 {
        return Err(Error::Config("need at least one region".into()));
    }
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::Config(format!("region radius must be positive, got {radius}")));
    }
    if cap == 0 {
        return Err(Error::Config("region cap must be at least 1".into()));
    }
    let pts = points.payloads();
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in pts {
        x0 = x0.min(p.x);
        x1 = x1.max(p.x);
        y0 = y0.min(p.y);
        y1 = y1.max(p.y);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, REGION_STREAM));
    let draw = |lo: f64, hi: f64, rng: &mut ChaCha8Rng| if hi > lo { rng.gen_range(lo..=hi) } else { lo };

    let mut regions = Vec::with_capacity(m);
    for r in 0..m {
        let mut found = None;
        for _ in 0..MAX_CENTER_DRAWS {
            let c = Point::new(draw(x0, x1, &mut rng), draw(y0, y1, &mut rng));
            let near: Vec<usize> = (0..pts.len()).filter(|&i| manhattan(pts[i], c) <= radius).collect();
            if !near.is_empty() {
                found = Some(near);
                break;
            }
        }
        let near = found.ok_or_else(|| {
            Error::Config(format!(
                "region {r}: no point within radius {radius} after {MAX_CENTER_DRAWS} center draws; try a larger radius"
            ))
        })?;
        let mut picked: Vec<usize> = sample(&mut rng, near.len(), cap.min(near.len()))
            .into_iter()
            .map(|j| near[j])
            .collect();
        picked.sort_unstable();
        regions.push(Region::new(picked.into_iter().map(|i| pts[i]).collect())?);
    }
    Ok(regions)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(n: usize) -> GroundSet<Point> {
        GroundSet::new(
            (0..n)
                .map(|i| Point::new((i % 10) as f64 * 0.001, (i / 10) as f64 * 0.001))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn cap_one_huge_radius() {
        let g = grid(30);
        let regions = build_regions(&g, 5, 100.0, 1, 9).unwrap();
        assert_eq!(regions.len(), 5);
        assert!(regions.iter().all(|r| r.len() == 1));
    }

    #[test]
    fn deterministic() {
        let g = grid(100);
        let a = build_regions(&g, 4, 0.003, 10, 1).unwrap();
        let b = build_regions(&g, 4, 0.003, 10, 1).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn saturated_sampling() {
        let g = grid(1000);
        let regions = build_regions(&g, 6, 10.0, 10, 4).unwrap();
        assert!(regions.iter().all(|r| r.len() == 10));
    }

    #[test]
    fn impossible_radius_errors() {
        let g = GroundSet::new(vec![Point::new(0.0, 0.0), Point::new(10.0, 10.0)]).unwrap();
        assert!(matches!(build_regions(&g, 1, 1e-9, 10, 1), Err(Error::Config(_))));
        assert!(build_regions(&g, 1, 0.0, 10, 1).is_err());
    }
}
