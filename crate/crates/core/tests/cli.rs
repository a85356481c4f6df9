use std::fs;
use std::path::Path;
use std::process::Command;

use rainbow::cli::run;
use rainbow::verify::VerificationReport;
use rainbow::{constructions, ecg};

fn invoke(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("rainbow").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_then_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("ext.ecg");
    let (code, out, _) = invoke(&[
        "construct",
        "extremal",
        "--n",
        "8",
        "--k",
        "4",
        "--out",
        path_str(&file),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("wrote"));
    let g = ecg::parse(&fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(g, constructions::extremal(8, 4).unwrap());

    let (code, out, _) = invoke(&["analyze", path_str(&file)]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("e=28 c=17 e+c=45 complete=true"));
    assert_eq!(lines.next(), Some("c0=1 c1=0 c2=16"));
}

#[test]
fn construct_to_stdout() {
    let (code, out, _) = invoke(&["construct", "k6-variant", "--which", "mono-c6"]);
    assert_eq!(code, 0);
    assert_eq!(ecg::parse(&out).unwrap().counts(), (15, 10));
    let (code, out, _) = invoke(&["construct", "counterexample-n7"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("7 20\n"));
    let (code, _, err) = invoke(&["construct", "k6-variant", "--which", "c7"]);
    assert_eq!(code, 2);
    assert!(err.contains("c7"));
    let (code, _, _) = invoke(&["construct", "extremal", "--n", "8"]);
    assert_eq!(code, 2);
}

#[test]
fn find_and_count() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k4.ecg");
    fs::write(&file, "4 6\n1 2 1\n1 3 2\n1 4 3\n2 3 4\n2 4 5\n3 4 6\n").unwrap();
    let f = path_str(&file);

    let (code, out, _) = invoke(&["find", f, "--pattern", "rainbow-clique", "--k", "4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("found"));
    let (code, out, _) = invoke(&["count", f, "--k", "3"]);
    assert_eq!((code, out.as_str()), (0, "count=4\n"));
    let (code, out, _) = invoke(&["find", f, "--pattern", "mono-path", "--len", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("absent"));
    let (code, _, _) = invoke(&[
        "find",
        f,
        "--pattern",
        "mono-path",
        "--len",
        "3",
        "--require",
    ]);
    assert_eq!(code, 1);
    let (code, _, _) = invoke(&["find", f, "--pattern", "rainbow-clique", "--k", "5"]);
    assert_eq!(code, 2);
    let (code, _, _) = invoke(&["find", f, "--pattern", "rainbow-bipartite", "--a", "2"]);
    assert_eq!(code, 2);
    let (code, out, _) = invoke(&["find", f, "--pattern", "proper-c4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("found proper-c4"));
}

#[test]
fn input_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ecg");
    fs::write(&bad, "3 2\n1 2 1\n2 1 5\n").unwrap();
    let (code, _, err) = invoke(&["analyze", path_str(&bad)]);
    assert_eq!(code, 3);
    assert!(err.contains("line 3"), "{err}");
    let missing = dir.path().join("missing.ecg");
    let (code, _, _) = invoke(&["count", path_str(&missing), "--k", "3"]);
    assert_eq!(code, 3);
}

#[test]
fn usage_errors_exit_2_and_help_exits_0() {
    assert_eq!(invoke(&[]).0, 2);
    assert_eq!(invoke(&["frobnicate"]).0, 2);
    assert_eq!(invoke(&["turan", "--max-n", "x", "--max-k", "3"]).0, 2);
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("supersat"));
}

#[test]
fn verify_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("tri.txt");
    let (code, out, _) = invoke(&["verify", "triangle-n4", "--out", path_str(&report)]);
    assert_eq!(code, 0);
    assert!(out.starts_with("LEMMA triangle-n4 SPACE 877 CE 0"));
    let parsed = VerificationReport::parse(&fs::read_to_string(&report).unwrap()).unwrap();
    assert!(parsed.success());
    assert_eq!(parsed.space_size, 877);

    let (code, out, _) = invoke(&["verify", "tightness", "--n", "8", "--k", "4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("LEMMA tightness-n8-k4"));
    assert_eq!(
        invoke(&["verify", "tightness", "--n", "8", "--k", "7"]).0,
        2
    );
    let (code, _, _) = invoke(&[
        "verify",
        "two-cliques",
        "--n",
        "8",
        "--k",
        "6",
        "--trials",
        "20",
        "--seed",
        "1",
    ]);
    assert_eq!(code, 0);
}

#[test]
fn supersat_and_turan_tables() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("s.csv");
    let (code, out, _) = invoke(&[
        "supersat",
        "--k",
        "3",
        "--ns",
        "10..20:5",
        "--eps",
        "1/10",
        "--seed",
        "2",
        "--csv",
        path_str(&csv),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("slope="));
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("n,ec,count\n10,54,"));
    assert_eq!(text.lines().count(), 4);
    assert_eq!(
        invoke(&["supersat", "--k", "3", "--ns", "10", "--eps", "x"]).0,
        2
    );

    let (code, out, _) = invoke(&["turan", "--max-n", "9", "--max-k", "3"]);
    assert_eq!(code, 0);
    let last = out.lines().last().unwrap();
    assert_eq!(last, "9\t0\t20\t27");
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_rainbow");
    let status = Command::new(bin)
        .args(["turan", "--max-n", "3", "--max-k", "2"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let status = Command::new(bin)
        .args(["count", "/nonexistent/file.ecg", "--k", "3"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(3));
}
