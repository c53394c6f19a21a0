use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn modsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modsym")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn verify_prints_a_report() {
    let out = modsym(&["verify", "--p", "5", "--M", "1", "--theta", "1", "--no-timing"]);
    assert!(out.status.success());
    let report = json(&out);
    assert_eq!(report["case"], "a");
    assert_eq!(report["equal"], true);
    assert_eq!(report["params"]["N"], 5);
    assert_eq!(report["millis"], 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let fields = ["params", "case", "dims", "extras", "divisors", "equal", "millis"];
    let positions: Vec<usize> = fields.iter().map(|f| text.find(&format!("\n  \"{f}\"")).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn verify_writes_json_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("r.json");
    let csv_path = dir.path().join("r.csv");
    let out = modsym(&[
        "verify",
        "--p",
        "7",
        "--M",
        "5",
        "--theta",
        "quad5",
        "--out",
        json_path.to_str().unwrap(),
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let report: Value = serde_json::from_str(&fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(report["params"]["N"], 35);
    let csv = fs::read_to_string(&csv_path).unwrap();
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("p,k,M,N,variant,theta"));
    assert!(lines.next().unwrap().starts_with("7,1,5,35,full,"));
}

#[test]
fn assert_mode_exit_codes() {
    // uncovered scenarios never fail the run
    let out = modsym(&["verify", "--p", "5", "--M", "1", "--theta", "omega2", "--assert"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["case"], "uncovered");
    // the case-b scenario at N = 35 leaves a gap
    let out = modsym(&["verify", "--p", "7", "--M", "5", "--theta", "omega2*quad5", "--assert"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["case"], "b");
}

#[test]
fn bad_input_exits_with_two() {
    let out = modsym(&["verify", "--p", "7", "--M", "29", "--theta", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("p divides phi(M)"));
    let out = modsym(&["verify", "--p", "5", "--M", "1", "--theta", "omega"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn grid_is_deterministic_across_worker_counts() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("g.grid");
    fs::write(
        &grid,
        "# small grid\n--p 5 --M 1 --theta 1\n--p 5 --M 1 --theta omega2\n\n--p 7 --M 5 --theta quad5 --k 2\n",
    )
    .unwrap();
    let run = |workers: &str| {
        let out = modsym(&["grid", "--config", grid.to_str().unwrap(), "--workers", workers, "--no-timing"]);
        assert!(out.status.success());
        out.stdout
    };
    let one = run("1");
    assert_eq!(one, run("3"));
    let outcome: Value = serde_json::from_slice(&one).unwrap();
    assert_eq!(outcome["summary"]["scenarios"], 3);
    assert_eq!(outcome["summary"]["by_case"]["uncovered"]["unequal"], 1);
}

#[test]
fn empty_grid() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("empty.grid");
    fs::write(&grid, "# nothing\n").unwrap();
    let out = modsym(&["grid", "--config", grid.to_str().unwrap(), "--assert"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["reports"].as_array().unwrap().len(), 0);
}

#[test]
fn grid_reports_the_bad_line() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("bad.grid");
    fs::write(&grid, "--p 5 --M 1\n--p 5 --bogus\n").unwrap();
    let out = modsym(&["grid", "--config", grid.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn properties_are_reproducible() {
    let out = modsym(&["properties", "--seed", "3", "--cases", "10"]);
    assert!(out.status.success());
    assert_eq!(out.stdout, modsym(&["properties", "--seed", "3", "--cases", "10"]).stdout);
    let report = json(&out);
    assert_eq!(report["passed"], true);
    assert_eq!(report["seed"], 3);
}
