use spinq::partitions::Partition;
use spinq::repn::Rep;
use spinq::symfunc::SymQ;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("spinq").chain(args.iter().copied());
    let code = spinq::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn kostka_entry() {
    let (code, out, _) = run(&["kostka", "--lambda", "2,1", "--mu", "1,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "t + t^2");
}

#[test]
fn spin_kostka_matrix_csv() {
    let (code, out, _) = run(&["spinkostka", "--n", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    let col = header.iter().position(|h| h == "(2,1)").unwrap();
    let row = rdr.records().map(|r| r.unwrap()).find(|r| &r[0] == "(2,1)").unwrap();
    assert_eq!(&row[col], "4");
    assert_eq!(&row[header.iter().position(|h| h == "(1,1,1)").unwrap()], "4t + 4t^2");
}

#[test]
fn verify_cauchy() {
    let (code, out, _) = run(&["verify", "--suite", "cauchy", "--n", "4"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["kostka", "--lambda", "2,x", "--mu", "3"]).0, 2);
    assert_eq!(run(&["kostka", "--lambda", "2,1", "--mu", "1,1"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["kostka", "--n", "3", "--bogus"]).0, 2);
    assert_eq!(run(&["qexpand", "--xi", "2,2"]).0, 2);
    assert_eq!(run(&["verify", "--suite", "nope"]).0, 2);
    assert_eq!(run(&["seminormal", "--shape", "3,1", "--inner", "1"]).0, 2);
}

#[test]
fn help_exits_0() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("spinkostka") && out.contains("--format"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["qexpand", "--xi", "3,1", "--basis", "s", "--format", "json"][..],
        &["chartable", "--n", "4", "--spin", "--format", "latex"],
        &["fakedegree", "--shape", "2,1", "--spin", "--format", "json"],
        &["seminormal", "--shape", "2,1", "--inner", "1", "--affine", "--out", "json"],
        &["hooks", "--shape", "3,1"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.0, 0, "{args:?}: {}", a.2);
        assert_eq!(a, b);
    }
}

#[test]
fn json_round_trips() {
    let (_, out, _) = run(&["qexpand", "--xi", "3,1", "--basis", "p", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let f = SymQ::from_json(&v).unwrap();
    assert_eq!(f.to_json(), v);
    let (_, out, _) = run(&["seminormal", "--shape", "3,1", "--out", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let r = Rep::from_json(&v).unwrap();
    assert_eq!(r.dim, 32);
    assert_eq!(r.to_json(), v);
    let p: Partition = serde_json::from_str("[3,1]").unwrap();
    assert_eq!(serde_json::to_string(&p).unwrap(), "[3,1]");
}

#[test]
fn chartable_values() {
    let (_, out, _) = run(&["chartable", "--n", "3", "--format", "csv"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "irrep\\class,(3),\"(2,1)\",\"(1,1,1)\"");
    assert_eq!(lines[2], "\"(2,1)\",-1,0,2");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_spinq");
    let ok = Command::new(bin).args(["hooks", "--shape", "2"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "double partition (3,1)\n2 1\n");
    let bad = Command::new(bin).args(["hooks"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
    let guarded = Command::new(bin).args(["seminormal", "--shape", "3,1"]).env("SPINQ_MAX_DIM", "8").output().unwrap();
    assert_eq!(guarded.status.code(), Some(1));
}
