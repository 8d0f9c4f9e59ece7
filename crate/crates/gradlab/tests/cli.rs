use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use gradlab::format::{document_to_value, to_pretty, Document};
use gradlab_core::fixtures::build_fixture;
use serde_json::Value;

fn gradlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gradlab")).args(args).output().expect("binary runs")
}

fn write_fixture(dir: &Path, name: &str) -> PathBuf {
    let f = build_fixture(name).unwrap();
    let doc = Document { structure: f.structure, submodules: f.submodules };
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, to_pretty(&document_to_value(&doc))).unwrap();
    path
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one json document")
}

fn report<'a>(v: &'a Value, name: &str) -> &'a Value {
    v["reports"].as_array().unwrap().iter().find(|r| r["name"] == name).unwrap_or_else(|| panic!("no {name}"))
}

#[test]
fn check_reports_verdicts_and_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(dir.path(), "m2_z4");
    let out = gradlab(&["--format", "json", "check", path.to_str().unwrap(), "--predicate", "strong", "--predicate", "weak"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(report(&v, "weak")["verdict"], "holds");
    let strong = report(&v, "strong");
    assert_eq!(strong["verdict"], "fails");
    assert_eq!(strong["witness"]["g"], "1");
}

#[test]
fn check_on_module_lists_named_submodules() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(dir.path(), "z12i");
    let out = gradlab(&["--format", "json", "check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(report(&v, "graded_semi_essential(<6>)")["verdict"], "holds");
    assert_eq!(report(&v, "graded_essential(<6>)")["verdict"], "fails");
    assert_eq!(report(&v, "graded_semi_essential(<4>)")["witness"]["P"]["submodule"], "<3*1, 3*i>");
}

#[test]
fn tiny_caps_exit_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(dir.path(), "m2_z4");
    let out = gradlab(&["--cap-elements", "3", "check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stdout).contains("aborted_cap"));
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n  \"kind\": \"finite_graded_ring\",\n  \"group\": ]\n}").unwrap();
    let out = gradlab(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("bad.json") && err.contains("line 3"), "{err}");

    let path = write_fixture(dir.path(), "m2_z4");
    assert_eq!(gradlab(&["check", path.to_str().unwrap(), "--predicate", "nope"]).status.code(), Some(2));
    assert_eq!(gradlab(&["verify-paper", "--example", "nope"]).status.code(), Some(2));
    assert_eq!(gradlab(&["--no-such-flag", "fmt", "x"]).status.code(), Some(2));
}

#[test]
fn semantic_errors_name_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("sem.json");
    let text = r#"{"kind":"finite_graded_ring","group":{"type":"cyclic","n":2},
        "basis":[{"name":"a","order":2,"degree":"0"}],"one":{"a":1},
        "mul":[["a","b",{"a":1}]]}"#;
    std::fs::write(&bad, text).unwrap();
    let out = gradlab(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("mul[0][1]"));
}

#[test]
fn submodules_lists_lattice_and_primes() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(dir.path(), "z36i");
    let out = gradlab(&["--format", "json", "submodules", path.to_str().unwrap(), "--enumerate", "--primes", "--report"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let primes: Vec<&str> = v["graded_primes"].as_array().unwrap().iter().map(|p| p.as_str().unwrap()).collect();
    assert!(primes.contains(&"<2*1, 2*i>") && primes.contains(&"<3*1, 3*i>"), "{primes:?}");
    assert!(!v["graded_submodules"].as_array().unwrap().is_empty());
    assert_eq!(report(&v, "graded_semi_essential(<12>)")["verdict"], "holds");
}

#[test]
fn submodules_rejects_rings() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_fixture(dir.path(), "m2_z4");
    assert_eq!(gradlab(&["submodules", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn verify_paper_single_example() {
    let out = gradlab(&["--format", "json", "verify-paper", "--example", "z12i"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["fixtures"][0]["name"], "z12i");
}

#[test]
fn verify_paper_reports_the_d10_mismatch() {
    let out = gradlab(&["verify-paper", "--example", "m4_d10"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("MISMATCH") && text.contains("degeneracy"), "{text}");
}

#[test]
fn fmt_is_a_fixed_point() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["m2_z4", "z12i", "kx_z", "m4_d10"] {
        let path = write_fixture(dir.path(), name);
        let once = gradlab(&["fmt", path.to_str().unwrap()]);
        assert_eq!(once.status.code(), Some(0));
        let again_path = dir.path().join(format!("{name}.fmt.json"));
        std::fs::write(&again_path, &once.stdout).unwrap();
        let twice = gradlab(&["fmt", again_path.to_str().unwrap()]);
        assert_eq!(once.stdout, twice.stdout, "{name}");
    }
}

#[test]
fn fuzz_small_run_passes_and_is_deterministic() {
    let args = ["--format", "json", "fuzz", "--seed", "2", "--count", "10", "--modules", "3"];
    let a = gradlab(&args);
    let b = gradlab(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["passed"], true);
    assert!(v["violation"].is_null());
}

#[test]
fn fuzz_accepts_a_suite_file() {
    let dir = tempfile::tempdir().unwrap();
    let suite = dir.path().join("suite.json");
    std::fs::write(&suite, r#"["nondegenerate_implies_weak", "second_strong_not_weak"]"#).unwrap();
    let out = gradlab(&["--format", "json", "fuzz", "--count", "5", "--modules", "0", "--suite", suite.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["entries"].as_array().unwrap().len(), 2);
    assert_eq!(v["entries"][1]["first_counterexample"]["instance"], "fixture:kx_z");

    std::fs::write(&suite, r#"["no_such_entry"]"#).unwrap();
    let out = gradlab(&["fuzz", "--suite", suite.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn replay_reruns_a_stored_instance() {
    let dir = tempfile::tempdir().unwrap();
    let f = build_fixture("t2_z2").unwrap();
    let replay = serde_json::json!({
        "implication": "weak_not_nondegenerate",
        "instance": "fixture:t2_z2",
        "structure": gradlab::format::structure_to_value(&f.structure),
    });
    let path = dir.path().join("replay.json");
    std::fs::write(&path, replay.to_string()).unwrap();
    let out = gradlab(&["--format", "json", "fuzz", "--replay", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["observation"], "counterexample");
}

#[test]
fn quiet_prints_nothing() {
    let out = gradlab(&["--quiet", "verify-paper", "--example", "z6i"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
}
