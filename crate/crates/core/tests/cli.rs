use std::path::Path;
use std::process::{Command, Output};

use rainbowdom::cli;

fn rd(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rainbowdom"))
        .current_dir(dir)
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn in_process(args: &[&str]) -> (rainbowdom::Result<()>, String) {
    let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let r = cli::run(&args, &mut out, &mut err);
    (r, String::from_utf8(out).unwrap())
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert_eq!(rd(d, &["gen", "--kind", "path", "--n", "4"]).status.code(), Some(0));
    assert_eq!(rd(d, &["gen", "--kind", "cycle", "--n", "2"]).status.code(), Some(1));
    assert_eq!(
        rd(d, &["solve", "--kind", "complete", "--n", "4", "--middle", "--method", "brute"]).status.code(),
        Some(2)
    );
    assert_eq!(rd(d, &["solve", "--kind", "nonsense", "--n", "4"]).status.code(), Some(1));
    assert_eq!(rd(d, &["solve", "--kind", "path", "--n", "x"]).status.code(), Some(3));
    assert_eq!(rd(d, &["verify", "missing.txt", "also-missing.txt"]).status.code(), Some(3));
    let bad = rd(d, &["frobnicate"]);
    assert_eq!(bad.status.code(), Some(3));
    assert!(!String::from_utf8_lossy(&bad.stderr).contains("error: error:"));
}

#[test]
fn solve_verify_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(rd(d, &["gen", "--kind", "path", "--n", "5", "--out", "p5.txt"]).status.success());
    let s = rd(d, &["solve", "p5.txt", "--middle", "--out", "sol.txt"]);
    assert!(s.status.success(), "{}", String::from_utf8_lossy(&s.stderr));
    assert_eq!(stdout(&s), "value 7\n");
    let v = rd(d, &["verify", "p5.txt", "sol.txt", "--k", "3"]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("valid: true"));

    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(d.join("sol.txt.manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["command"], "solve");
    assert_eq!(manifest["outputs"][0], "sol.txt");
    assert_eq!(manifest["stdout"], "value 7\n");

    let r = rd(d, &["replay", "sol.txt.manifest.json", "--into", "again"]);
    assert!(r.status.success(), "{}", stdout(&r));
    assert!(stdout(&r).contains("identical sol.txt"));
    assert_eq!(
        std::fs::read(d.join("sol.txt")).unwrap(),
        std::fs::read(d.join("again/sol.txt")).unwrap()
    );
}

#[test]
fn tampered_output_fails_replay() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(rd(d, &["construct", "--family", "cycle", "--n", "7", "--out", "c7.txt"]).status.success());
    std::fs::write(d.join("c7.txt"), "k 3 middle\n").unwrap();
    let r = rd(d, &["replay", "c7.txt.manifest.json", "--into", "again"]);
    assert_eq!(r.status.code(), Some(1));
    assert!(stdout(&r).contains("differs c7.txt"));
}

#[test]
fn invalid_assignment_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(rd(d, &["gen", "--kind", "path", "--n", "3", "--out", "p3.txt"]).status.success());
    std::fs::write(d.join("f.txt"), "k 3 middle\nv0 1,2,3\n").unwrap();
    let v = rd(d, &["verify", "p3.txt", "f.txt"]);
    assert_eq!(v.status.code(), Some(1));
    assert!(stdout(&v).contains("valid: false"));
}

#[test]
fn sweep_rows_match() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = rd(d, &["sweep", "--kind", "cycle", "--from", "3", "--to", "9", "--out", "c.csv"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let mut rdr = csv::Reader::from_path(d.join("c.csv")).unwrap();
    assert_eq!(
        rdr.headers().unwrap().iter().collect::<Vec<_>>(),
        ["n", "formula", "dp", "solver", "match"]
    );
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 7);
    for row in rows {
        assert_eq!(&row[1], &row[2]);
        assert_eq!(&row[4], "true");
    }
}

#[test]
fn in_process_commands() {
    let (r, out) = in_process(&["solve", "--kind", "path", "--n", "300", "--middle", "--method", "dp"]);
    r.unwrap();
    assert_eq!(out, "value 400\n");

    let (r, out) = in_process(&["solve", "--kind", "star", "--t", "3", "--middle", "--json"]);
    r.unwrap();
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], 5);
    assert_eq!(v["domain"], "middle");

    let (r, out) = in_process(&["domatic", "--kind", "path", "--n", "6"]);
    r.unwrap();
    assert!(out.contains("exact 4"), "{out}");

    let (r, out) = in_process(&["check", "--law", "weight-three", "--max-n", "4"]);
    r.unwrap();
    assert!(out.starts_with("holds: true"), "{out}");

    let (r, _) = in_process(&["check", "--law", "no-such-law"]);
    assert_eq!(r.unwrap_err().exit_code(), 1);
}

#[test]
fn check_writes_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = rd(d, &["check", "--law", "vertex-deletion", "--kind", "path", "--n", "4", "--vertex", "1", "--out", "r.txt"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let report = std::fs::read_to_string(d.join("r.txt")).unwrap();
    assert!(report.contains("holds: true"));
    assert!(d.join("r.txt.witness0.txt").exists());
    assert!(d.join("r.txt.manifest.json").exists());
}
