use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn manifest_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tannaka"))
        .args(args)
        .current_dir(manifest_dir())
        .env_remove("TANNAKA_MAX_DEGREE")
        .output()
        .expect("spawn tannaka")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

/// Compares stdout with `tests/golden/<name>.txt`; `UPDATE_GOLDEN=1`
/// rewrites the file instead.
fn golden(name: &str, args: &[&str]) {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let path: PathBuf = manifest_dir().join("tests/golden").join(format!("{name}.txt"));
    let actual = stdout(&out);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, &actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "golden mismatch for {name}");
}

#[test]
fn golden_coherent_dim() {
    golden("coherent_dim_c2_star_c2_n3", &["amalgam", "coherent-dim", "--preset", "c2-star-c2", "--degree", "3"]);
}

#[test]
fn golden_coherent_dim_amalgamated() {
    golden("coherent_dim_c4_amalg_c4_n2", &["amalgam", "coherent-dim", "--preset", "c4-amalg-c4", "--degree", "2"]);
}

#[test]
fn golden_sl2_certificate() {
    golden("sl2_cert", &["reps", "sl2-cert"]);
}

#[test]
fn golden_hom_table() {
    golden("reps_hom", &["reps", "hom"]);
}

#[test]
fn golden_monodromy_wedge() {
    golden("monodromy_wedge7", &["topo", "monodromy", "--preset", "wedge7", "--base", "b"]);
}

#[test]
fn golden_monodromy_local_system() {
    golden("monodromy_circle4_twist", &["topo", "monodromy", "--system", "tests/data/circle4_twist.json"]);
}

#[test]
fn golden_glue_triple() {
    golden("glue_sign_triple", &["reps", "glue", "--triple", "tests/data/sign_triple.json"]);
}

#[test]
fn coherent_dim_counts_words() {
    // 1 + 2 + 2 + 2 alternating words of length <= 3 in two involutions.
    let out = run(&["amalgam", "coherent-dim", "--preset", "c2-star-c2", "--degree", "3", "--format", "structured"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "pass");
    let dim = v["values"].as_array().unwrap().iter().find(|c| c["name"] == "coherent dimension").unwrap();
    assert_eq!(dim["value"], 7);
}

#[test]
fn structured_output_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["reps", "sl2-cert", "--format", "structured", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let printed: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let written: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(printed, written);
    assert_eq!(printed["scenario"], "reps sl2-cert");
    for claim in printed["values"].as_array().unwrap() {
        assert!(claim["name"].is_string() && claim["provenance"].is_string(), "{claim}");
    }
}

#[test]
fn failing_property_exits_one() {
    let out = run(&["amalgam", "verify-hopf", "--preset", "c2-star-c2", "--element", "tests/data/not_coherent.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("coherent = false"));
}

#[test]
fn bad_input_exits_two() {
    for args in [
        &["topo", "monodromy", "--system", "tests/data/bad_scalar.json"][..],
        &["topo", "monodromy", "--system", "tests/data/missing.json"],
        &["amalgam", "coherent-dim", "--preset", "no-such-preset"],
        &["frobplus", "check", "--field", "q"],
        &["--field", "6", "reps", "hom"],
        &["no-such-command"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn degree_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_tannaka"))
        .args(["amalgam", "coherent-dim", "--preset", "c2-star-c2", "--degree", "5"])
        .env("TANNAKA_MAX_DEGREE", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn single_scenario_from_suite() {
    let out = run(&["suite", "--scenario", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("c06-sl2-certificate: PASS") && text.ends_with("suite: PASS\n"), "{text}");
}
