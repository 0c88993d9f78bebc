use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn trivote(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trivote"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn compute_prints_sorted_names() {
    let p1 = fixture("three_voter.jsonl");
    let out = trivote(&["compute", path(&p1), "--rule", "exact-tpav"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "x\n");

    let e2 = fixture("unanimous_split.jsonl");
    let out = trivote(&["compute", path(&e2), "--rule", "greedy-ncr"]);
    assert_eq!(stdout(&out), "c1 c2\n");
}

#[test]
fn compute_trace_is_reproducible() {
    let e1 = fixture("four_voter.jsonl");
    let args = ["compute", path(&e1), "--rule", "droop-stv", "--seed", "7", "--trace"];
    let first = trivote(&args);
    let second = trivote(&args);
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    assert!(text.starts_with("a b\nscore 2\n"));
    assert!(text.contains("round 3: elected a quota=2"));
}

#[test]
fn check_reports_witness() {
    let e1 = fixture("four_voter.jsonl");
    let out = trivote(&["check", path(&e1), "--axiom", "spr", "--committee", "a,b"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "SATISFIED\n");

    let e2 = fixture("unanimous_split.jsonl");
    let out = trivote(&["check", path(&e2), "--axiom", "SPR", "--committee", "c1,c2"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.starts_with("VIOLATED\nvoters: 1 2\nlevel: 1\ncohesion set: c1\n"));
    assert!(text.contains("seated and disapproved by the group: c2"));
}

#[test]
fn exists_exit_codes() {
    let r3 = fixture("polarized.jsonl");
    let out = trivote(&["exists", path(&r3), "--axiom", "wtjr"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "NONE\n");
    let out = trivote(&["exists", path(&r3), "--axiom", "wa"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "a b\n");
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.jsonl");
    std::fs::write(
        &bad,
        "{\"version\":\"1\",\"candidates\":[\"a\",\"b\"],\"k\":1}\n{\"approve\":[\"a\"],\"disapprove\":[\"a\"]}\n",
    )
    .unwrap();
    let out = trivote(&["compute", path(&bad), "--rule", "seq-tpav"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("both approves and disapproves"));

    let e1 = fixture("four_voter.jsonl");
    let out = trivote(&["check", path(&e1), "--axiom", "wa", "--committee", "a,zz"]);
    assert_eq!(out.status.code(), Some(2));
    let out = trivote(&["check", path(&e1), "--axiom", "wa", "--committee", "a"]);
    assert_eq!(out.status.code(), Some(2));
    let out = trivote(&["compute", path(&e1), "--rule", "seq-tcc", "--alpha", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = trivote(&["experiment", "--profiles", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let big = dir.path().join("big.jsonl");
    let out = trivote(&["gen", "--n", "3", "--m", "40", "--k", "20", "--out", path(&big)]);
    assert_eq!(out.status.code(), Some(0));
    let out = trivote(&["compute", path(&big), "--rule", "exact-tcc"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn gen_is_seeded() {
    let a = trivote(&["gen", "--n", "6", "--m", "5", "--k", "2", "--seed", "11"]);
    let b = trivote(&["gen", "--n", "6", "--m", "5", "--k", "2", "--seed", "11"]);
    let c = trivote(&["gen", "--n", "6", "--m", "5", "--k", "2", "--seed", "12"]);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
    let profile = trivote::profile::parse_profile(&stdout(&a)).unwrap();
    assert_eq!((profile.num_voters(), profile.num_candidates(), profile.committee_size()), (6, 5, 2));
}

#[test]
fn experiment_writes_table() {
    let dir = tempfile::tempdir().unwrap();
    let csv_a = dir.path().join("a.csv");
    let csv_b = dir.path().join("b.csv");
    let json = dir.path().join("t.json");
    let base = ["experiment", "--profiles", "60", "--n", "4,8", "--m", "2,6", "--seed", "5"];
    for target in [&csv_a, &csv_b] {
        let mut args = base.to_vec();
        args.extend(["--out", path(target)]);
        let out = trivote(&args);
        assert_eq!(out.status.code(), Some(0));
        assert!(stdout(&out).starts_with("rule"));
    }
    let a = std::fs::read_to_string(&csv_a).unwrap();
    assert_eq!(a, std::fs::read_to_string(&csv_b).unwrap());
    let mut lines = a.lines();
    assert_eq!(lines.next(), Some("rule,axiom,satisfied,total,probability"));
    assert_eq!(lines.count(), 20);

    let mut args = base.to_vec();
    args.extend(["--rules", "seq-phragmen", "--axioms", "wncr,pjr", "--format", "json", "--out", path(&json)]);
    assert_eq!(trivote(&args).status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let cells = value["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 2);
    assert!(cells.iter().all(|c| c["satisfied"] == c["total"]));
}

#[test]
fn failed_experiment_leaves_no_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("t.csv");
    let out = trivote(&["experiment", "--m", "1,3", "--out", path(&out_path)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out_path.exists());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
}
