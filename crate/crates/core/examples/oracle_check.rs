//! Every algorithm against the exact optimum on a small instance.

use twostage::distributed::{distributed_fast, replacement_distributed};
use twostage::greedy::replacement_greedy;
use twostage::objectives::{make_synthetic, SyntheticKind};
use twostage::oracle::brute_force_opt;
use twostage::streaming::{run_streaming, StreamConfig};

fn main() -> twostage::Result<()> {
    let (ell, k) = (3, 2);
    for kind in [SyntheticKind::Modular, SyntheticKind::Coverage, SyntheticKind::Facility] {
        let family = make_synthetic(kind, 12, 3, 2)?;
        let g = family.ground_ids();
        let opt = brute_force_opt(&family, &g, ell, k)?;
        println!("{kind}: OPT = {:.4}, S* = {:?}", opt.opt, opt.solution.summary().to_ids());
        let rows = [
            ("greedy", replacement_greedy(&family, &g, ell, k)?.value()),
            ("streaming", run_streaming(g.iter().copied(), &family, StreamConfig::new(ell, k, 1.0))?.value()),
            ("distributed", replacement_distributed(&family, &g, 2, ell, k, 0)?.solution.value()),
            ("fast", distributed_fast(&family, &g, 2, 1.0, ell, k, 0)?.solution.value()),
        ];
        for (name, value) in rows {
            println!("  {name:<12} {value:.4}  ratio {:.3}", value / opt.opt);
        }
    }
    Ok(())
}
