use std::fs;
use std::process::Command;

use twostage::cli::{
    read_json_report, run_experiment, run_on_instance, write_json, Algorithm, ExperimentConfig, Instance, ObjectiveKind,
    ReportFormat, RowStatus,
};
use twostage::objectives::{make_synthetic, Modular, SyntheticKind};
use twostage::{ElementSet, Error, ObjectiveFamily, SetFunction, TwoStageSolution};

fn worked_instance() -> Instance {
    let functions: Vec<Box<dyn SetFunction>> = vec![
        Box::new(Modular::new(vec![3.0, 2.0, 1.0])),
        Box::new(Modular::new(vec![1.0, 2.0, 3.0])),
    ];
    let family = ObjectiveFamily::new(3, functions).unwrap();
    let ground = family.ground_ids();
    Instance { family, ground }
}

fn sweep_config() -> ExperimentConfig {
    ExperimentConfig::parse(
        "objective = facility\n\
         n = 60\n\
         m = 4\n\
         ell = 3, 5\n\
         k = 2\n\
         epsilon = 0.1, 0.5, 1.0\n\
         machines = 1, 3\n\
         algorithms = greedy, streaming, distributed, fast, oracle\n\
         oracle_budget = 1e6\n\
         timing = false\n\
         seed = 4\n",
    )
    .unwrap()
}

#[test]
fn greedy_matches_oracle_on_worked_instance() {
    let cfg = ExperimentConfig {
        ell: vec![2],
        k: vec![1],
        algorithms: vec![Algorithm::Oracle, Algorithm::Greedy],
        ..Default::default()
    };
    let rows = run_on_instance(&cfg, &worked_instance()).unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0].algorithm, "greedy");
    assert_eq!(rows[1].algorithm, "oracle");
    assert_eq!(rows[0].value, 3.0);
    assert_eq!(rows[0].value, rows[1].value);
    assert_eq!(rows[1].summary, vec![0, 2]);
    assert_eq!(rows[1].per_function, vec![vec![0], vec![2]]);
}

#[test]
fn report_values_recheck_against_recorded_sets() {
    let cfg = sweep_config();
    let rows = run_experiment(&cfg).unwrap();
    let family = make_synthetic(SyntheticKind::Facility, cfg.n, cfg.m, cfg.seed).unwrap();
    let oracle_skipped = rows.iter().any(|r| r.algorithm == "oracle" && r.status == RowStatus::Skipped);
    assert!(oracle_skipped, "oracle over budget should be skipped");
    for row in rows.iter().filter(|r| r.status == RowStatus::Ok) {
        let summary: ElementSet = row.summary.iter().map(|&i| i.into()).collect();
        let per: Vec<ElementSet> = row.per_function.iter().map(|t| t.iter().map(|&i| i.into()).collect()).collect();
        let sol = TwoStageSolution::new(&family, summary, per, row.ell, row.k).unwrap();
        assert!((sol.value() - row.value).abs() < 1e-9, "{}: {} vs {}", row.algorithm, sol.value(), row.value);
        assert!(row.evals > 0);
    }
}

#[test]
fn sweep_rows_cover_only_relevant_axes() {
    let rows = run_experiment(&sweep_config()).unwrap();
    let count = |name: &str| rows.iter().filter(|r| r.algorithm == name).count();
    assert_eq!(count("greedy"), 2);
    assert_eq!(count("streaming"), 6);
    assert_eq!(count("distributed"), 4);
    assert_eq!(count("fast"), 12);
    assert_eq!(count("oracle"), 2);
    assert!(rows.iter().filter(|r| r.algorithm == "greedy").all(|r| r.epsilon.is_none() && r.machines.is_none()));
    let names: Vec<&str> = rows.iter().map(|r| r.algorithm.as_str()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn peak_storage_shrinks_as_epsilon_grows() {
    let mut cfg = sweep_config();
    cfg.algorithms = vec![Algorithm::Streaming];
    cfg.ell = vec![5];
    cfg.n = 300;
    let rows = run_experiment(&cfg).unwrap();
    let peaks: Vec<usize> = rows.iter().map(|r| r.peak_stored.unwrap()).collect();
    assert_eq!(rows.iter().map(|r| r.epsilon.unwrap()).collect::<Vec<_>>(), vec![0.1, 0.5, 1.0]);
    assert!(peaks.windows(2).all(|w| w[0] >= w[1]), "{peaks:?}");
}

#[test]
fn identical_configs_give_identical_json() {
    let render = || {
        let mut out = Vec::new();
        write_json(&run_experiment(&sweep_config()).unwrap(), &mut out).unwrap();
        out
    };
    assert_eq!(render(), render());
}

#[test]
fn config_errors_surface_before_work() {
    let mut cfg = ExperimentConfig::default();
    cfg.epsilon.clear();
    assert!(matches!(run_experiment(&cfg), Err(Error::Config(_))));
    let cfg = ExperimentConfig {
        objective: ObjectiveKind::Exemplar,
        ..Default::default()
    };
    assert!(matches!(run_experiment(&cfg), Err(Error::Config(_))));
}

#[test]
fn k_above_ell_is_a_skipped_row() {
    let cfg = ExperimentConfig {
        ell: vec![2],
        k: vec![1, 3],
        algorithms: vec![Algorithm::Greedy],
        ..Default::default()
    };
    let rows = run_experiment(&cfg).unwrap();
    assert_eq!(rows[0].status, RowStatus::Ok);
    assert_eq!(rows[1].status, RowStatus::Skipped);
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_twostage"))
}

#[test]
fn binary_generates_runs_and_reports() {
    let dir = tempfile::tempdir().unwrap();
    let points = dir.path().join("points.csv");
    let status = bin()
        .args(["gen-synthetic", "--kind", "points", "--n", "400", "--seed", "3", "--out"])
        .arg(&points)
        .status()
        .unwrap();
    assert!(status.success());
    assert!(fs::read_to_string(&points).unwrap().starts_with("lat,lon\n"));

    let config = dir.path().join("sweep.cfg");
    fs::write(
        &config,
        "objective = facility\ndataset = points.csv\nm = 5\nell = 4\nk = 2\nepsilon = 0.5\nmachines = 2\n\
         algorithms = greedy, streaming, fast\ntiming = false\n",
    )
    .unwrap();
    let prefix = dir.path().join("report");
    let out = bin()
        .arg("run")
        .arg(&config)
        .args(["--set", "radius=0.02", "--output"])
        .arg(&prefix)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let rows = read_json_report(prefix.with_extension("json")).unwrap();
    assert_eq!(rows.len(), 3);
    let csv = fs::read_to_string(prefix.with_extension("csv")).unwrap();
    assert_eq!(csv.lines().count(), 4);
    assert!(csv.starts_with("algorithm,ell,k,epsilon,M,seed,value,seconds,evals,peak_stored\n"));

    let oracle = bin().args(["oracle", "--set", "n=8", "--set", "ell=2", "--set", "k=1"]).output().unwrap();
    assert!(oracle.status.success());
    assert!(String::from_utf8_lossy(&oracle.stdout).starts_with("opt = "));
}

#[test]
fn binary_fails_loudly() {
    let out = bin().args(["run", "/nonexistent/config"]).output().unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    let out = bin().args(["oracle", "--set", "n=60", "--set", "ell=10"]).output().unwrap();
    assert!(!out.status.success());
    let out = bin().args(["oracle", "--set", "nonsense"]).output().unwrap();
    assert!(!out.status.success());
}

#[test]
fn report_format_both_writes_two_files() {
    let dir = tempfile::tempdir().unwrap();
    let rows = run_experiment(&ExperimentConfig::default()).unwrap();
    let written = twostage::cli::write_reports(&rows, dir.path().join("r"), ReportFormat::Both).unwrap();
    assert_eq!(written.len(), 2);
    assert_eq!(read_json_report(&written[1]).unwrap(), rows);
}
