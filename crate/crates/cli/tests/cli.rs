use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn qserre(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qserre")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn check_passes_for_catalog_entries() {
    for name in ["identity", "flip", "sln_standard", "sln_quantum_plane"] {
        let out = qserre(&["check", "--catalog", name, "--n", "3"]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        assert!(stdout(&out).contains("Yang-Baxter equation: pass"));
    }
}

#[test]
fn check_reports_a_witness_for_a_broken_r() {
    let path = scratch("broken.json");
    let value = serde_json::json!({
        "dim": 2,
        "entries": [
            {"i": 0, "j": 0, "k": 0, "l": 0, "value": "q"},
            {"i": 0, "j": 1, "k": 0, "l": 1, "value": "1"},
            {"i": 1, "j": 0, "k": 1, "l": 0, "value": "1"},
            {"i": 1, "j": 1, "k": 1, "l": 1, "value": "q"},
            {"i": 0, "j": 1, "k": 1, "l": 0, "value": "q - 1/q + 1"}
        ]
    });
    fs::write(&path, value.to_string()).unwrap();
    let out = qserre(&["check", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("Yang-Baxter equation: fail"), "{text}");
    assert!(text.contains("row"), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qserre(&["check", "--catalog", "nonsense"]).status.code(), Some(2));
    assert_eq!(qserre(&["serre", "--catalog", "flip", "--N", "1"]).status.code(), Some(2));
    assert_eq!(qserre(&["pair", "--catalog", "sln_standard", "E[0]", "E[0]"]).status.code(), Some(2));
    assert_eq!(qserre(&["check"]).status.code(), Some(2));
}

#[test]
fn quantum_plane_serre_report() {
    let out = qserre(&["serre", "--catalog", "sln_quantum_plane", "--N", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("new E relators: 1\n    q*E[0]*E[1] - E[1]*E[0]"), "{text}");
    assert!(text.contains("new F relators: 1\n    q*F[0]*F[1] - F[1]*F[0]"), "{text}");
    assert!(text.contains("E kernel: 4"), "{text}");
}

#[test]
fn factorial_verify_matches_the_oracle() {
    let out = qserre(&["factorial", "--catalog", "sln_standard", "--n", "2", "--N", "3", "--verify"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("oracle match"));
}

#[test]
fn pairing_with_convolution() {
    let out = qserre(&["pair", "--catalog", "sln_standard", "F[0]*F[1]", "E[0]*E[1]", "--convolution"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("<F[0]*F[1], E[0]*E[1]> = 1"), "{text}");
    assert!(text.contains("convolution: pass"), "{text}");
}

#[test]
fn diagonal_parameters_and_specialization() {
    let out = qserre(&["braid", "--catalog", "diagonal", "--param", "q,2,3,q^2", "--at-q", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.ends_with("[2  0  0  0]\n[0  0  3  0]\n[0  2  0  0]\n[0  0  0  4]\n"), "{text}");
}

#[test]
fn output_file_matches_stdout() {
    let path = scratch("serre.json");
    let args = ["serre", "--catalog", "sln_quantum_plane", "--N", "2", "--format", "doc"];
    let direct = qserre(&args);
    let mut with_file = args.to_vec();
    with_file.extend(["--output", path.to_str().unwrap()]);
    let written = qserre(&with_file);
    assert!(written.status.success());
    assert!(written.stdout.is_empty());
    assert_eq!(fs::read(&path).unwrap(), direct.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&direct.stdout).unwrap();
    assert_eq!(doc["tool"], "qserre");
    assert_eq!(doc["command"], "serre");
}

#[test]
fn catalog_lists_entries() {
    let text = stdout(&qserre(&["catalog"]));
    for name in ["identity", "flip", "diagonal", "sln_standard", "sln_quantum_plane"] {
        assert!(text.contains(name));
    }
}
