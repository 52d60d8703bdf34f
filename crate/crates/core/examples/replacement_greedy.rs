//! Replacement greedy on a two-function modular instance, round by round.

use twostage::greedy::replacement_greedy_traced;
use twostage::objectives::Modular;
use twostage::{ObjectiveFamily, SetFunction};

fn main() -> twostage::Result<()> {
    let functions: Vec<Box<dyn SetFunction>> = vec![
        Box::new(Modular::new(vec![3.0, 2.0, 1.0])),
        Box::new(Modular::new(vec![1.0, 2.0, 3.0])),
    ];
    let family = ObjectiveFamily::new(3, functions)?;

    let run = replacement_greedy_traced(&family, &family.ground_ids(), 2, 1)?;
    for (t, round) in run.rounds.iter().enumerate() {
        println!(
            "round {t}: add {} (gain sum {}, value {}, swapped {})",
            round.selected, round.total_gain, round.value, round.swapped
        );
    }
    let sol = &run.solution;
    println!("S = {:?}", sol.summary().to_ids());
    for (i, t) in sol.per_function().iter().enumerate() {
        println!("T_{i} = {:?}", t.to_ids());
    }
    println!("value = {}", sol.value());
    Ok(())
}
