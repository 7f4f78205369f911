use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_neutromagma"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("neutromagma-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn construct_then_classify() {
    let path = scratch("l7_3.json");
    let o = run(&["construct", "--family", "ln", "--n", "7", "--m", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&["classify", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["order"], 8);
    assert_eq!(v["wip"], true);
    assert_eq!(v["s_semigroup"], false);
}

#[test]
fn cosets_and_conjugates() {
    let path = scratch("zfull5.json");
    assert_eq!(code(&run(&["construct", "--family", "zn-full-neutro", "--n", "5", "--out", path.to_str().unwrap()])), 0);
    let p = path.to_str().unwrap();
    let o = run(&["cosets", p, "--subset", "1,I,4,4I", "--by", "2"]);
    assert_eq!(code(&o), 0);
    assert!(json(&o).to_string().contains("2I"));
    let o = run(&["conjugate", p, "--x", "3", "--y", "2"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn engines_report_verdicts() {
    let path = scratch("zline6.json");
    assert_eq!(code(&run(&["construct", "--family", "zn-line-neutro", "--n", "6", "--out", path.to_str().unwrap()])), 0);
    let p = path.to_str().unwrap();
    for args in [
        vec!["lagrange", p, "--species", "s-neutrosophic-sub"],
        vec!["sylow", p, "--species", "s-neutrosophic-sub"],
        vec!["cauchy", p],
    ] {
        let o = run(&args);
        assert_eq!(code(&o), 0);
        assert_eq!(json(&o)["verdict"], "free", "{args:?}");
    }
}

#[test]
fn parameter_errors_exit_2() {
    assert_eq!(code(&run(&["construct", "--family", "ln", "--n", "6", "--m", "2"])), 2);
    let bad = scratch("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(code(&run(&["classify", bad.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["verify-corpus", "--filter", "["])), 2);
}

#[test]
fn missing_input_exits_3() {
    assert_eq!(code(&run(&["classify", "/nonexistent/magma.json"])), 3);
}

#[test]
fn atlas_counts_members() {
    let o = run(&["atlas", "--family", "zn", "--class", "zstar", "--n", "5"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let records = text.lines().skip(1).filter(|l| !l.starts_with('#')).count();
    assert_eq!(records, 12);
    assert!(text.contains("#footer,5,12,12,1"));
    let o = run(&["atlas", "--family", "ln", "--n", "9..5"]);
    assert_eq!(code(&o), 0);
    assert_eq!(String::from_utf8(o.stdout).unwrap().lines().count(), 1);
}

#[test]
fn nstruct_manifest_round_trip() {
    let manifest = scratch("bi.json");
    std::fs::write(
        &manifest,
        r#"{"name":"B","components":[{"family":"tagged-ln","n":5,"m":2},{"family":"cyclic","n":6}],"declared_kinds":["s-neutrosophic-loop","group"]}"#,
    )
    .unwrap();
    let built = scratch("bi_built.json");
    let o = run(&["nstruct", "build", manifest.to_str().unwrap(), "--out", built.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&["nstruct", "classify", built.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["order"], 18);
}

#[test]
fn corpus_filter_runs_subset() {
    let o = run(&["verify-corpus", "--filter", "ex-3.1.13*"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("ex-3.1.13-conjugating-set"));
    assert!(text.contains("1 entries: 1 pass"));
}
