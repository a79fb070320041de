use std::path::Path;
use std::process::{Command, Output};

use bracekit::group::library::{cyclic, elementary_abelian};
use bracekit::report::{brace_report, BraceReport};
use bracekit::{trivial_brace, Limits, SkewBrace};

const RING: &str = r#"{"order":4,"add":[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],"circle":[[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]}"#;

/// A Latin square with identity 0 in which every element is an involution;
/// no group of order 5 has that shape.
const LOOP5: &str = "[[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]";

fn bracekit(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bracekit"))
        .args(args)
        .current_dir(dir)
        .env("BRACEKIT_CACHE", dir.join("cache"))
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    std::fs::write(dir.join(name), text).unwrap();
    name.to_string()
}

fn write_brace(dir: &Path, name: &str, a: &SkewBrace) -> String {
    write(dir, name, &serde_json::to_string(a).unwrap())
}

#[test]
fn verify_accepts_a_brace() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "ring.json", RING);
    let o = bracekit(dir.path(), &["verify", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("valid skew brace"));
}

#[test]
fn verify_reports_associativity_witness() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "loop.json",
        &format!(r#"{{"order":5,"add":{LOOP5},"circle":{LOOP5}}}"#),
    );
    let o = bracekit(dir.path(), &["verify", &f]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("not associative"), "{err}");
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.json", "{\"order\": 2");
    assert_eq!(bracekit(dir.path(), &["report", &f]).status.code(), Some(2));
    assert_eq!(
        bracekit(dir.path(), &["report", "missing.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bracekit(dir.path(), &["enumerate", "13"]).status.code(),
        Some(2)
    );
    assert_eq!(bracekit(dir.path(), &["frobnicate"]).status.code(), Some(2));
}

#[test]
fn bound_exceeded_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_brace(dir.path(), "c17.json", &trivial_brace(&cyclic(17)));
    let o = bracekit(dir.path(), &["weight", &f]);
    assert_eq!(o.status.code(), Some(3));
    let o = bracekit(dir.path(), &["--max-order", "17", "weight", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("weight = 1"));
}

#[test]
fn weight_of_elementary_abelian() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_brace(
        dir.path(),
        "c2c2c2.json",
        &trivial_brace(&elementary_abelian(2, 3)),
    );
    let o = bracekit(dir.path(), &["weight", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("weight = 3\ngenerating set: {"));
    let o = bracekit(dir.path(), &["weight", "--no-opt", &f]);
    assert!(stdout(&o).starts_with("weight = 3"));
}

#[test]
fn report_json_round_trips_and_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "ring.json", RING);
    let first = bracekit(dir.path(), &["report", "--json", &f]);
    let second = bracekit(dir.path(), &["report", "--json", &f]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let parsed: BraceReport = serde_json::from_slice(&first.stdout).unwrap();
    let a: SkewBrace = serde_json::from_str(RING).unwrap();
    assert_eq!(parsed, brace_report(&a, &Limits::default()).unwrap());
}

#[test]
fn ideals_with_dot() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "ring.json", RING);
    let o = bracekit(dir.path(), &["ideals", &f, "--dot", "lattice.dot"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 3);
    let dot = std::fs::read_to_string(dir.path().join("lattice.dot")).unwrap();
    assert!(dot.starts_with("digraph ideals {"));
    assert_eq!(dot.matches("->").count(), 2);
}

#[test]
fn enumerate_writes_manifest_and_theoremcheck_reads_it() {
    let dir = tempfile::tempdir().unwrap();
    let o = bracekit(dir.path(), &["enumerate", "6", "--out", "six"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("order 6: 6 braces"));
    let manifest: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("six/manifest.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(manifest["order"], 6);
    assert_eq!(manifest["method"], "holomorph");
    assert_eq!(manifest["count"], 6);
    assert_eq!(manifest["files"].as_array().unwrap().len(), 6);
    let o = bracekit(dir.path(), &["theoremcheck", "six", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let results: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(results.as_array().unwrap().len(), 6);
    // the cached catalog is used on the second run
    assert!(dir
        .path()
        .join("cache")
        .read_dir()
        .unwrap()
        .next()
        .is_some());
    let cached = bracekit(dir.path(), &["enumerate", "6"]);
    let fresh = bracekit(dir.path(), &["enumerate", "6", "--no-cache"]);
    assert_eq!(cached.stdout, fresh.stdout);
}

#[test]
fn exhaustive_method_from_cli() {
    let dir = tempfile::tempdir().unwrap();
    let o = bracekit(dir.path(), &["enumerate", "4", "--method", "exhaustive"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("order 4: 4 braces (exhaustive)"));
    let o = bracekit(dir.path(), &["enumerate", "6", "--method", "exhaustive"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_csv_has_one_row_per_brace() {
    let dir = tempfile::tempdir().unwrap();
    let o = bracekit(dir.path(), &["sweep", "4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("index,additive_group,circle_group"));
    assert_eq!(lines.count(), 4);
}

#[test]
fn ybe_commands() {
    let dir = tempfile::tempdir().unwrap();
    let tf = write(
        dir.path(),
        "tf.json",
        r#"{"size":4,"sigma":[[1,0,2,3],[1,0,2,3],[1,0,2,3],[1,0,2,3]],"tau":[[0,1,3,2],[0,1,3,2],[0,1,3,2],[0,1,3,2]]}"#,
    );
    let o = bracekit(dir.path(), &["ybe", "check", &tf, "--witness"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("braid relation: yes"));
    assert!(text.contains("involutive: no"));
    assert!(text.contains("injectivity unknown"));
    assert!(text.contains("r² moves (0, 0)"));
    let o = bracekit(dir.path(), &["ybe", "group", &tf]);
    assert!(stdout(&o).starts_with("permutation group order: 2"));
    let o = bracekit(dir.path(), &["ybe", "derived", &tf, "--out", "d.json"]);
    assert!(stdout(&o).contains("quandle: no"));
    let o = bracekit(dir.path(), &["ybe", "check", "d.json"]);
    assert_eq!(o.status.code(), Some(0));

    let ring = write(dir.path(), "ring.json", RING);
    let o = bracekit(dir.path(), &["ybe", "from-brace", &ring, "--out", "r.json"]);
    assert_eq!(o.status.code(), Some(0));
    let o = bracekit(dir.path(), &["ybe", "check", "r.json"]);
    assert!(stdout(&o).contains("involutive: yes"));
    assert!(!stdout(&o).contains("injectivity unknown"));

    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"size":3,"sigma":[[1,2,0],[1,2,0],[1,2,0]],"tau":[[0,1,2],[0,1,2],[0,1,2]]}"#,
    );
    let o = bracekit(dir.path(), &["ybe", "check", &bad, "--witness"]);
    assert_eq!(o.status.code(), Some(0));
    let not_ybe = write(
        dir.path(),
        "nb.json",
        r#"{"size":3,"sigma":[[0,1,2],[1,2,0],[2,0,1]],"tau":[[0,1,2],[0,1,2],[0,1,2]]}"#,
    );
    let o = bracekit(dir.path(), &["ybe", "check", &not_ybe, "--witness"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("braid relation fails at"));
    let degenerate = write(
        dir.path(),
        "dg.json",
        r#"{"size":2,"sigma":[[0,0],[1,1]],"tau":[[0,0],[1,1]]}"#,
    );
    assert_eq!(
        bracekit(dir.path(), &["ybe", "derived", &degenerate])
            .status
            .code(),
        Some(2)
    );
}
