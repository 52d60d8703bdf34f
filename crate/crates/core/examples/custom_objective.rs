//! Plugging in objectives written as closures.

use twostage::greedy::replacement_greedy;
use twostage::{ElementId, ObjectiveFamily, SetFunction};

fn main() -> twostage::Result<()> {
    // Concave-of-modular functions: sqrt of the summed weights.
    let weights: [[f64; 6]; 2] = [[4.0, 1.0, 1.0, 9.0, 0.0, 2.0], [0.0, 5.0, 3.0, 1.0, 8.0, 1.0]];
    let functions: Vec<Box<dyn SetFunction>> = weights
        .into_iter()
        .map(|w| {
            Box::new(move |s: &[ElementId]| s.iter().map(|e| w[e.index()]).sum::<f64>().sqrt()) as Box<dyn SetFunction>
        })
        .collect();
    let family = ObjectiveFamily::new(6, functions)?;
    let sol = replacement_greedy(&family, &family.ground_ids(), 3, 2)?;
    println!("S = {:?}, value {:.4}", sol.summary().to_ids(), sol.value());
    println!("{} evaluations", family.evaluations());
    Ok(())
}
