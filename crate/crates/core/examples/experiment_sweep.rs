//! A parameter sweep from a config string, reported as CSV on stdout.

use twostage::cli::{run_experiment, write_csv, ExperimentConfig};

const CONFIG: &str = "
objective = facility
n = 500
m = 8
ell = 5, 10, 20
k = 3
epsilon = 0.25, 1.0
machines = 4
algorithms = greedy, streaming, fast
seed = 3
";

fn main() -> twostage::Result<()> {
    let cfg = ExperimentConfig::parse(CONFIG)?;
    let rows = run_experiment(&cfg)?;
    write_csv(&rows, std::io::stdout().lock())
}
