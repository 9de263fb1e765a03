use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use alcove_cli::{Verdict, VerificationReport};
use serde_json::Value;

fn alcove(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alcove"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    fs::read_to_string(path).unwrap()
}

/// Parses a report array with `wall_clock` zeroed.
fn masked(text: &str) -> Value {
    let mut v: Value = serde_json::from_str(text).unwrap();
    for r in v.as_array_mut().unwrap() {
        r["wall_clock"] = Value::from(0);
    }
    v
}

#[test]
fn verify_reports_match_golden() {
    for (kind, lambda, file) in [
        ("A1", "2", "a1_verify.json"),
        ("A2", "1,1", "a2_verify.json"),
    ] {
        let out = alcove(&["verify", "--kind", kind, "--lambda", lambda]);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        let stdout = String::from_utf8(out.stdout).unwrap();
        assert_eq!(masked(&stdout), masked(&golden(file)), "{kind}");
        let reports: Vec<VerificationReport> = serde_json::from_str(&stdout).unwrap();
        assert!(reports
            .iter()
            .all(|r| r.verdict == Verdict::Match && r.mismatch_witnesses.is_empty()));
    }
}

#[test]
fn json_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = alcove(&[
        "verify",
        "--kind",
        "A2",
        "--lambda",
        "1,1",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let reports: Vec<VerificationReport> =
        serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(reports[0].endpoint_set_size, 7);
}

#[test]
fn root_basis_reads_simple_root_coordinates() {
    let out = alcove(&["verify", "--kind", "A1", "--lambda", "1", "--basis", "root"]);
    assert!(out.status.success());
    let reports: Vec<VerificationReport> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports[0].endpoint_set_size, 3);
}

#[test]
fn oracle_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("oracle.json");
    let out = alcove(&[
        "oracle",
        "--kind",
        "A2",
        "--lambda",
        "1,1",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let got: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let want: Value = serde_json::from_str(&golden("a2_oracle.json")).unwrap();
    assert_eq!(got, want);
    let zero = alcove(&["oracle", "--kind", "B2", "--lambda", "0,0"]);
    assert!(zero.status.success());
    let v: Value = serde_json::from_slice(&zero.stdout).unwrap();
    assert_eq!(v[0]["weyl_dim"], 1);
}

#[test]
fn dumps_match_golden_and_are_deterministic() {
    for (kind, lambda, file) in [("A1", "2", "a1_dump.txt"), ("A2", "1,1", "a2_dump.txt")] {
        let one = alcove(&[
            "--threads",
            "1",
            "dump-galleries",
            "--kind",
            kind,
            "--lambda",
            lambda,
        ]);
        let many = alcove(&["dump-galleries", "--kind", kind, "--lambda", lambda]);
        assert!(one.status.success() && many.status.success());
        assert_eq!(one.stdout, many.stdout);
        assert_eq!(String::from_utf8(one.stdout).unwrap(), golden(file));
    }
    let zero = alcove(&["dump-galleries", "--kind", "A2", "--lambda", "0,0"]);
    assert_eq!(
        String::from_utf8(zero.stdout).unwrap(),
        "A2 | src=0,0 | start= | moves= | end=0,0\n"
    );
}

#[test]
fn dump_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a1.txt");
    let out = alcove(&[
        "dump-galleries",
        "--kind",
        "A1",
        "--lambda",
        "2",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(fs::read_to_string(&path).unwrap().lines().count(), 3);
}

#[test]
fn counterexample_report() {
    let out = alcove(&[
        "verify",
        "--kind",
        "A2",
        "--lambda",
        "3,3",
        "--check-counterexample",
        "4,2",
    ]);
    assert!(out.status.success());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("delta(0,x)=10 delta(0,y)=11 y in Wconv=true y in dual hull=false"));
}

#[test]
fn exit_codes() {
    let not_lattice = alcove(&["verify", "--kind", "A1", "--lambda", "1"]);
    assert_eq!(not_lattice.status.code(), Some(2));
    let not_a_counterexample = alcove(&[
        "verify",
        "--kind",
        "A2",
        "--lambda",
        "3,3",
        "--check-counterexample",
        "1,1",
    ]);
    assert_eq!(not_a_counterexample.status.code(), Some(1));
    let bad_kind = alcove(&["verify", "--kind", "E9", "--lambda", "1"]);
    assert_ne!(bad_kind.status.code(), Some(0));
}

#[test]
fn small_grid_passes() {
    let out = alcove(&["verify", "--max-height", "2", "--all-minimal-types"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let reports: Vec<VerificationReport> = serde_json::from_slice(&out.stdout).unwrap();
    assert!(reports.iter().any(|r| r.kind == "G2"));
}

#[test]
fn render_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("a2.svg");
    let out = alcove(&[
        "render",
        "--kind",
        "A2",
        "--lambda",
        "3,3",
        "--mark",
        "4,2",
        "-o",
        svg.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(fs::read_to_string(&svg).unwrap().starts_with("<svg"));
    let rank3 = alcove(&[
        "render",
        "--kind",
        "A3",
        "--lambda",
        "1,0,1",
        "-o",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(rank3.status.code(), Some(2));
}
