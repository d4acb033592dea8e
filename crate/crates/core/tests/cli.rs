use std::process::{Command, Output};

use qwalk::cli::{fmt_full, parse_time};
use qwalk::mixing::{MixingReport, Verdict};

fn qwalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qwalk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn evolve_k2_csv() {
    let out = qwalk(&["evolve", "--complete", "2", "--time", "pi/4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,P_0,P_1,tv"));
    let row: Vec<f64> = lines
        .next()
        .unwrap()
        .split(',')
        .map(|x| x.parse().unwrap())
        .collect();
    assert_eq!(row[0], parse_time("pi/4").unwrap());
    assert!((row[1] - 0.5).abs() < 1e-12 && (row[2] - 0.5).abs() < 1e-12);
    assert!(row[3] < 1e-12);
    assert_eq!(lines.next(), None);
}

#[test]
fn evolve_window_grid() {
    let out = qwalk(&["evolve", "--cycle", "5", "--window", "1", "--step", "0.25"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let times: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(times, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
    let first: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert!((first[1].parse::<f64>().unwrap() - 1.0).abs() < 1e-14);
    assert_eq!(first[0], fmt_full(0.0));
}

#[test]
fn evolve_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k3.csv");
    let out = qwalk(&[
        "evolve",
        "--complete",
        "3",
        "--time",
        "4pi/9",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("t,P_0,P_1,P_2,tv\n"));
}

#[test]
fn spectrum_of_c4() {
    let out = qwalk(&["spectrum", "--cycle", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["route"], "circulant");
    let eig = v["eigenvalues"].as_array().unwrap();
    let pairs: Vec<(f64, u64)> = eig
        .iter()
        .map(|e| (e["value"].as_f64().unwrap(), e["multiplicity"].as_u64().unwrap()))
        .collect();
    assert_eq!(pairs.len(), 3);
    assert!((pairs[0].0 - 1.0).abs() < 1e-12 && pairs[0].1 == 1);
    assert!(pairs[1].0.abs() < 1e-12 && pairs[1].1 == 2);
    assert!((pairs[2].0 + 1.0).abs() < 1e-12 && pairs[2].1 == 1);
}

#[test]
fn certify_json_and_refusal() {
    let out = qwalk(&["certify", "--multipartite", "2", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["numeric_cross_check"], true);
    let report: MixingReport = serde_json::from_value(v["report"].clone()).unwrap();
    assert_eq!(report.verdict, Verdict::Mixes);

    let out = qwalk(&["certify", "--complete", "7", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["report"]["verdict"], "does-not-mix-certified");
    assert_eq!(v["numeric_cross_check"], true);

    let out = qwalk(&["certify", "--cycle", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("scan"));
}

#[test]
fn scan_report_is_valid_json() {
    let out = qwalk(&["scan", "--cycle", "5", "--window", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let report = MixingReport::from_json(&stdout(&out)).unwrap();
    assert_eq!(report.verdict, Verdict::NoMixingFoundEvidence);
    assert_eq!(report.scan_window, [0.0, 20.0]);
}

#[test]
fn scan_is_independent_of_thread_count() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_qwalk"))
            .args(["scan", "--cycle", "7", "--window", "50", "--step", "0.001"])
            .env("QWALK_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn table_has_four_mixers() {
    let out = qwalk(&["table", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mixers: Vec<&str> = text
        .lines()
        .filter(|l| l.split(',').nth(2) == Some("mixes"))
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(mixers, vec!["complete:2", "complete:3", "complete:4", "multipartite:2x2"]);
    assert_eq!(text.lines().count(), 1 + 9 + 12);
}

#[test]
fn compare_classical_rows() {
    let out = qwalk(&["compare-classical", "--complete", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    let probs = |i: usize| -> Vec<f64> {
        rows[i]["probabilities"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_f64().unwrap())
            .collect()
    };
    assert_eq!(probs(0), vec![0.0, 1.0]);
    assert_eq!(probs(1), vec![0.5, 0.5]);
    assert!(probs(3).iter().all(|p| (p - 0.5).abs() < 1e-12));

    let out = qwalk(&["compare-classical", "--cycle", "5", "--steps", "0", "--time", "0"]);
    assert_eq!(out.status.code(), Some(0));

    let out = qwalk(&["compare-classical", "--complete", "3", "--alpha", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn edge_list_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.txt");
    std::fs::write(&path, "4 2 custom\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let out = qwalk(&["evolve", "--edges", path.to_str().unwrap(), "--time", "pi/2"]);
    assert_eq!(out.status.code(), Some(0));
    let row: Vec<f64> = stdout(&out)
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .map(|x| x.parse().unwrap())
        .collect();
    assert!(row[5] < 1e-12);
}

#[test]
fn exit_codes() {
    assert_eq!(qwalk(&["evolve", "--complete", "1", "--time", "1"]).status.code(), Some(2));
    assert_eq!(qwalk(&["evolve", "--complete", "3", "--time", "soon"]).status.code(), Some(2));
    assert_eq!(qwalk(&["spectrum", "--cycle", "4", "--complete", "3"]).status.code(), Some(2));
    assert_eq!(qwalk(&["scan", "--cycle", "5", "--window", "-3"]).status.code(), Some(2));
    assert_eq!(qwalk(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        qwalk(&["evolve", "--edges", "/nonexistent/graph.txt", "--time", "1"]).status.code(),
        Some(3)
    );
    assert_eq!(
        qwalk(&["table", "--out", "/nonexistent/dir/table.txt"]).status.code(),
        Some(3)
    );
    assert_eq!(qwalk(&["--help"]).status.code(), Some(0));
}
