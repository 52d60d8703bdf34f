//! Pick-up location summarization with the two distributed variants.
//!
//! Synthetic pick-ups stand in for a real trace; regions are sampled around
//! random centers and scored with the facility-location objective.

use std::sync::Arc;

use twostage::cli::{build_regions, synthetic_points};
use twostage::distributed::{distributed_fast, recommend_machine_count, replacement_distributed, DistributedVariant};
use twostage::greedy::replacement_greedy;
use twostage::objectives::{FacilityLocation, Point};
use twostage::{GroundSet, ObjectiveFamily, SetFunction};

fn main() -> twostage::Result<()> {
    let points = GroundSet::new(synthetic_points(3000, 8)?)?;
    let regions = build_regions(&points, 20, 0.009, 10, 8)?;
    let sites: Arc<[Point]> = points.payloads().to_vec().into();
    let functions = regions
        .into_iter()
        .map(|r| Box::new(FacilityLocation::new(r, sites.clone())) as Box<dyn SetFunction>)
        .collect();
    let family = ObjectiveFamily::new(points.len(), functions)?;
    let ground = family.ground_ids();
    let (ell, k) = (20, 4);

    let central = replacement_greedy(&family, &ground, ell, k)?;
    println!("centralized greedy      value {:.4}", central.value());

    let m = recommend_machine_count(ground.len(), ell, DistributedVariant::Distributed);
    let run = replacement_distributed(&family, &ground, m, ell, k, 1)?;
    println!(
        "replacement-distributed value {:.4} (M={m}, best worker {:.4}, merged over {} candidates)",
        run.solution.value(),
        run.best_worker_value,
        run.merge_candidates
    );

    let m = recommend_machine_count(ground.len(), ell, DistributedVariant::Fast);
    let run = distributed_fast(&family, &ground, m, 0.5, ell, k, 1)?;
    println!(
        "distributed-fast        value {:.4} (M={m}, merged over {} candidates)",
        run.solution.value(),
        run.merge_candidates
    );
    Ok(())
}
