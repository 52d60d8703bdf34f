//! Evaluation counts and wall time as the ground set grows.
//!
//! ```text
//! cargo run --release --example scaling
//! ```

use std::time::Instant;

use twostage::distributed::{distributed_fast, recommend_machine_count, DistributedVariant};
use twostage::greedy::replacement_greedy;
use twostage::objectives::{make_synthetic, SyntheticKind};
use twostage::streaming::{run_streaming, StreamConfig};

fn main() -> twostage::Result<()> {
    let (ell, k, m, eps) = (25, 5, 10, 1.0);
    println!("{:>6} {:>12} {:>10} {:>10} {:>4} {:>10}", "n", "stream evals", "stream s", "greedy s", "M", "fast s");
    for n in [1000, 2000, 4000] {
        let family = make_synthetic(SyntheticKind::Facility, n, m, 11)?;
        let ground = family.ground_ids();

        let before = family.evaluations();
        let start = Instant::now();
        run_streaming(ground.iter().copied(), &family, StreamConfig::new(ell, k, eps))?;
        let stream_secs = start.elapsed().as_secs_f64();
        let stream_evals = family.evaluations() - before;

        let start = Instant::now();
        let greedy = replacement_greedy(&family, &ground, ell, k)?;
        let greedy_secs = start.elapsed().as_secs_f64();

        let machines = recommend_machine_count(n, ell, DistributedVariant::Fast);
        let start = Instant::now();
        let fast = distributed_fast(&family, &ground, machines, eps, ell, k, 3)?;
        let fast_secs = start.elapsed().as_secs_f64();

        println!(
            "{n:>6} {stream_evals:>12} {stream_secs:>10.3} {greedy_secs:>10.3} {machines:>4} {fast_secs:>10.3}   greedy {:.3} fast {:.3}",
            greedy.value(),
            fast.solution.value()
        );
    }
    Ok(())
}
