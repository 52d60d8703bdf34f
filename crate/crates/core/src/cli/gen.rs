//! Synthetic datasets in the formats accepted by the loaders.

use std::io::Write;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::objectives::{FeatureVector, Point};
use crate::{Error, Result};

const HOTSPOTS: usize = 8;
/// Centre and half-width (degrees) of the box hotspots are drawn from.
const CITY: (f64, f64, f64) = (40.75, -73.98, 0.08);
const SPREAD: f64 = 0.006;

/// `n` pickup-like points clustered around a few hotspots.
pub fn synthetic_points(n: usize, seed: u64) -> Result<Vec<Point>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lat, lon, half) = CITY;
    let hotspots: Vec<(f64, f64)> = (0..HOTSPOTS)
        .map(|_| (lat + rng.gen_range(-half..=half), lon + rng.gen_range(-half..=half)))
        .collect();
    Ok((0..n)
        .map(|_| {
            let (cx, cy) = hotspots[rng.gen_range(0..HOTSPOTS)];
            Point::new(cx + rng.gen_range(-SPREAD..=SPREAD), cy + rng.gen_range(-SPREAD..=SPREAD))
        })
        .collect())
}

/// `n` sparse count vectors of length `classes`; roughly a quarter of the
/// entries are nonzero.
pub fn synthetic_features(n: usize, classes: usize, seed: u64) -> Result<Vec<FeatureVector>> {
    if n == 0 || classes == 0 {
        return Err(Error::InvalidArgument("n and classes must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..n)
        .map(|_| {
            let mut v: Vec<u32> = (0..classes)
                .map(|_| if rng.gen_bool(0.25) { rng.gen_range(1..=5) } else { 0 })
                .collect();
            if v.iter().all(|&c| c == 0) {
                v[rng.gen_range(0..classes)] = 1;
            }
            FeatureVector(v)
        })
        .collect())
}

pub fn write_points_csv<W: Write>(points: &[Point], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["lat", "lon"])?;
    for p in points {
        w.write_record([p.x.to_string(), p.y.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_features_csv<W: Write>(features: &[FeatureVector], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for f in features {
        w.write_record(f.0.iter().map(u32::to_string))?;
    }
    w.flush()?;
    Ok(())
}
