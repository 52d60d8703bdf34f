//! Single-threshold streaming when the optimum is known in advance, with the
//! invariant audit switched on.

use twostage::objectives::{make_synthetic, SyntheticKind};
use twostage::oracle::brute_force_opt;
use twostage::streaming::{know_opt_ratio, run_know_opt_audited};

fn main() -> twostage::Result<()> {
    let (ell, k) = (4, 2);
    let family = make_synthetic(SyntheticKind::Coverage, 14, 3, 21)?;
    let ground = family.ground_ids();
    let opt = brute_force_opt(&family, &ground, ell, k)?.opt;

    let run = run_know_opt_audited(ground.iter().copied(), &family, opt, 1.0, 6.0, ell, k)?;
    let audit = run.audit.expect("audited run");
    println!("OPT = {opt:.3}");
    println!(
        "stream value = {:.3} (guarantee {:.3})",
        run.solution.value(),
        know_opt_ratio(1.0, 6.0) * opt
    );
    println!("audit: {} checks, {} violations", audit.checks, audit.violations.len());
    Ok(())
}
