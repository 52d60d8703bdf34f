use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use twostage::cli::{
    build_instance, run_experiment, synthetic_features, synthetic_points, write_features_csv, write_points_csv,
    write_csv, write_reports, ExperimentConfig,
};
use twostage::oracle::brute_force_opt_with_budget;
use twostage::Result;

#[derive(Parser)]
#[command(name = "twostage", version, about = "Two-stage submodular maximization experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the sweep described by a config file.
    Run {
        config: PathBuf,
        /// Override a config key, e.g. `--set ell=5,10`.
        #[arg(long = "set", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Output path prefix; `.csv` / `.json` are appended.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compute the exact optimum by enumeration for the first (ell, k).
    Oracle {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long = "set", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
    },
    /// Write a synthetic dataset CSV.
    GenSynthetic {
        #[arg(long, value_enum)]
        kind: DataKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Feature length for `features`.
        #[arg(long, default_value_t = 10)]
        classes: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DataKind {
    Points,
    Features,
}

fn load_config(path: Option<&PathBuf>, overrides: &[String]) -> Result<ExperimentConfig> {
    let mut cfg = match path {
        Some(p) => ExperimentConfig::load(p)?,
        None => ExperimentConfig::default(),
    };
    for o in overrides {
        let (key, value) = o
            .split_once('=')
            .ok_or_else(|| twostage::Error::Config(format!("override `{o}` is not KEY=VALUE")))?;
        cfg.set(key, value)?;
    }
    Ok(cfg)
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Run {
            config,
            overrides,
            seed,
            output,
        } => {
            let mut cfg = load_config(Some(&config), &overrides)?;
            if let Some(s) = seed {
                cfg.seed = s;
            }
            if output.is_some() {
                cfg.output = output;
            }
            let rows = run_experiment(&cfg)?;
            match &cfg.output {
                Some(prefix) => {
                    for p in write_reports(&rows, prefix, cfg.format)? {
                        eprintln!("wrote {}", p.display());
                    }
                }
                None => write_csv(&rows, std::io::stdout().lock())?,
            }
        }
        Command::Oracle { config, overrides } => {
            let cfg = load_config(config.as_ref(), &overrides)?;
            cfg.validate()?;
            let inst = build_instance(&cfg)?;
            let res = brute_force_opt_with_budget(&inst.family, &inst.ground, cfg.ell[0], cfg.k[0], cfg.oracle_budget)?;
            println!("opt = {}", res.opt);
            println!("S = {:?}", res.solution.summary().to_ids());
            for (i, t) in res.solution.per_function().iter().enumerate() {
                println!("T_{i} = {:?}", t.to_ids());
            }
        }
        Command::GenSynthetic {
            kind,
            n,
            seed,
            classes,
            out,
        } => {
            let file = BufWriter::new(File::create(&out)?);
            match kind {
                DataKind::Points => write_points_csv(&synthetic_points(n, seed)?, file)?,
                DataKind::Features => write_features_csv(&synthetic_features(n, classes, seed)?, file)?,
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
