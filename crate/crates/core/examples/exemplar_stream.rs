//! Threshold-guessing streaming over class-count feature vectors.
//!
//! Each class defines one exemplar-clustering objective over the images in
//! which it appears. The manager is driven element by element so the live
//! threshold grid can be watched as it slides.

use std::sync::Arc;

use twostage::cli::synthetic_features;
use twostage::objectives::{class_members, ExemplarClustering, FeatureVector};
use twostage::streaming::{StreamConfig, ThresholdManager};
use twostage::{ElementId, ObjectiveFamily, SetFunction};

fn main() -> twostage::Result<()> {
    let classes = 8;
    let features: Arc<[FeatureVector]> = synthetic_features(200, classes, 5)?.into();
    let functions = class_members(&features, classes)
        .into_iter()
        .map(|members| ExemplarClustering::new(features.clone(), members).map(|f| Box::new(f) as Box<dyn SetFunction>))
        .collect::<twostage::Result<Vec<_>>>()?;
    let family = ObjectiveFamily::new(features.len(), functions)?;

    let mut mgr = ThresholdManager::new(family.len(), StreamConfig::new(10, 3, 0.5))?;
    for t in 0..features.len() {
        mgr.process(&family, ElementId::from(t))?;
        if (t + 1) % 50 == 0 {
            println!(
                "t={:>3} delta={:.3} levels={:?} stored={}",
                t + 1,
                mgr.delta(),
                mgr.levels(),
                mgr.stored()
            );
        }
    }
    let best = mgr.best();
    println!("best value {:.4} with S = {:?}", best.value(), best.summary().to_ids());
    println!(
        "peak stored {}, peak live thresholds {} (bound {})",
        mgr.peak_stored(),
        mgr.peak_instances(),
        mgr.instance_bound()
    );
    println!("{} evaluations", family.evaluations());
    Ok(())
}
