use std::fs;
use std::process::{Command, Output};

use pstw_bench::{
    run_experiment, write_csv, write_markdown, ExperimentConfig, Family, NPrimeRule, ResultRecord,
};
use pstw_core::Algorithm;

fn pstw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pstw"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn record(seed: u64, algorithm: Algorithm, alpha: Option<f64>, wall_seconds: f64) -> ResultRecord {
    ResultRecord {
        family: Family::Hypercube,
        n: 64,
        n_prime: None,
        seed,
        algorithm,
        wall_seconds,
        access_count: 0,
        alpha,
        waits: 0,
        verified: true,
    }
}

fn markdown(records: &[ResultRecord]) -> String {
    let mut buf = Vec::new();
    write_markdown(records, &mut buf).unwrap();
    String::from_utf8(buf).unwrap()
}

#[test]
fn csv_is_byte_identical_without_timing() {
    let args = [
        "--family",
        "scalefree",
        "--n",
        "64,128",
        "--seeds",
        "3",
        "--no-timing",
        "--jobs",
        "3",
    ];
    let a = pstw(&args);
    let b = pstw(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().count(), 1 + 2 * 3 * 4);
    assert!(text
        .lines()
        .skip(1)
        .all(|l| l.split(',').nth(5) == Some("0.00000")));
}

#[test]
fn hypercube_dijkstra_alpha_prints_six() {
    let o = pstw(&["--n", "64", "--algos", "dijkstra", "--seeds", "1"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("family,n,n_prime,seed,algorithm,wall_seconds,access_count,alpha,waits,verified")
    );
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[4], "dijkstra");
    assert_eq!(row[6], "24576");
    assert_eq!(row[7], "6.00000");
    assert_eq!(lines.next(), None);
}

#[test]
fn scale_free_all_algorithms_verified() {
    let cfg = ExperimentConfig {
        family: Family::ScaleFree,
        sizes: vec![64],
        n_prime: NPrimeRule::Fixed(2),
        seeds: vec![0],
        verify: true,
        ..ExperimentConfig::default()
    };
    let recs = run_experiment(&cfg).unwrap();
    assert_eq!(recs.len(), 4);
    assert!(recs.iter().all(|r| r.verified && r.n_prime == Some(2)));
}

#[test]
fn csv_round_trip() {
    let cfg = ExperimentConfig {
        family: Family::ScaleFree,
        sizes: vec![32],
        n_prime: NPrimeRule::Sqrt,
        seeds: vec![4],
        algorithms: vec![Algorithm::Pstw, Algorithm::FloydWarshall],
        ..ExperimentConfig::default()
    };
    let recs = run_experiment(&cfg).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    pstw_bench::emit_csv(&recs, &path).unwrap();
    let mut rdr = csv::Reader::from_path(&path).unwrap();
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(&rows[0][0], "scalefree");
    assert_eq!(rows[0][1].parse::<usize>().unwrap(), 32);
    assert_eq!(&rows[0][2], "6");
    assert_eq!(rows[0][3].parse::<u64>().unwrap(), 4);
    assert_eq!(rows[0][6].parse::<u64>().unwrap(), recs[0].access_count);
    let alpha: f64 = rows[0][7].parse().unwrap();
    assert!((alpha - recs[0].alpha.unwrap()).abs() < 1e-5 * alpha);
    assert_eq!(&rows[1][4], "floyd");
    assert_eq!(&rows[1][7], "");
}

#[test]
fn empty_records_give_header_only() {
    let mut buf = Vec::new();
    write_csv(&[], &mut buf).unwrap();
    assert_eq!(
        String::from_utf8(buf).unwrap(),
        "family,n,n_prime,seed,algorithm,wall_seconds,access_count,alpha,waits,verified\n"
    );
}

#[test]
fn markdown_ratio_columns() {
    let recs = [
        record(0, Algorithm::Pstw, Some(2.0), 0.5),
        record(0, Algorithm::Dijkstra, Some(6.0), 1.0),
        record(0, Algorithm::Peng, Some(2.96), 0.25),
        record(0, Algorithm::FloydWarshall, None, 4.0),
    ];
    let md = markdown(&recs);
    assert!(md.starts_with("### hypercube n=64\n"));
    let header = md.lines().find(|l| l.starts_with("| seed")).unwrap();
    let row = md.lines().find(|l| l.starts_with("| 0 ")).unwrap();
    let cols: Vec<&str> = header.split('|').map(str::trim).collect();
    let vals: Vec<&str> = row.split('|').map(str::trim).collect();
    let at = |name: &str| vals[cols.iter().position(|c| *c == name).unwrap()];
    assert_eq!(at("Dijkstra/PSTw α"), "3.00");
    assert_eq!(at("Dijkstra/PSTw time"), "2.00");
    assert_eq!(at("Peng/PSTw α"), "1.48");
    assert_eq!(at("Floyd-Warshall/PSTw α"), "-");
    assert_eq!(at("Floyd-Warshall/PSTw time"), "8.00");
    assert!(!md.contains("| mean"));
}

#[test]
fn markdown_without_pstw_has_no_ratios() {
    let md = markdown(&[record(0, Algorithm::Dijkstra, Some(6.0), 1.0)]);
    assert!(!md.contains("/PSTw"));
    assert!(md.contains("| 0 | 6.00 | 1.0000 |"));
}

#[test]
fn markdown_mean_row_over_seeds() {
    let recs = [
        record(0, Algorithm::Pstw, Some(2.0), 1.0),
        record(0, Algorithm::Dijkstra, Some(6.0), 1.0),
        record(1, Algorithm::Pstw, Some(4.0), 1.0),
        record(1, Algorithm::Dijkstra, Some(6.0), 1.0),
    ];
    let md = markdown(&recs);
    let mean = md.lines().find(|l| l.starts_with("| mean")).unwrap();
    let vals: Vec<&str> = mean
        .split('|')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    // PSTw α 3±sqrt(2), ratio mean of 3.0 and 1.5
    assert_eq!(vals[1], "3.00±1.41");
    assert_eq!(vals[3], "6.00±0.00");
    assert_eq!(vals[5], "2.25");
}

#[test]
fn verify_generated_hypercube_passes() {
    let o = pstw(&["verify", "--n", "32", "--seeds", "2"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(stdout(&o).matches("PASS (").count(), 6);
}

#[test]
fn verify_file() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    fs::write(&good, "4 4\n0 1 0.5\n1 2 0.25\n2 3 1\n0 3 0.1\n").unwrap();
    assert!(pstw(&["verify", good.to_str().unwrap()]).status.success());

    let negative = dir.path().join("neg.txt");
    fs::write(&negative, "3 2\n0 1 0.5\n1 2 -0.25\n").unwrap();
    let o = pstw(&["verify", negative.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    let split = dir.path().join("split.txt");
    fs::write(&split, "4 2\n0 1 0.5\n2 3 0.5\n").unwrap();
    let o = pstw(&["verify", split.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("disconnected"));
}

#[test]
fn oracle_cap_skips_verification() {
    let o = Command::new(env!("CARGO_BIN_EXE_pstw"))
        .args(["--n", "64", "--seeds", "1", "--verify", "--no-timing"])
        .env("PST_ORACLE_CAP", "32")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("oracle cap 32"));
    let text = stdout(&o);
    // floyd is skipped, nothing is verified
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",false")));
}

#[test]
fn bad_configs_are_rejected() {
    for args in [
        &["--algos", ""][..],
        &["--n", "100"],
        &["--family", "grid"],
        &["--weights", "0,1"],
        &["--family", "scalefree", "--n", "4", "--nprime", "5"],
    ] {
        let o = pstw(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}
