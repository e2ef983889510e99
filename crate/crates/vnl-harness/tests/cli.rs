//! End-to-end checks of the CLI surface: exit codes, JSON output, sidecar
//! ingestion.

use std::process::{Command, Output};

fn vnl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vnl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn property_failures_exit_one() {
    let out = vnl(&["check", "vnl", "Zn(36)"]);
    assert_eq!(exit_code(&out), 1);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("fails"), "{text}");
    assert!(text.contains("witness"), "{text}");

    assert_eq!(exit_code(&vnl(&["check", "vnl", "Zn(12)"])), 0);
    assert_eq!(exit_code(&vnl(&["check", "nj", "T(3,GF(2))"])), 1);
    assert_eq!(exit_code(&vnl(&["check", "3-vnl", "T(3,GF(2))"])), 1);
}

#[test]
fn usage_errors_exit_two() {
    let out = vnl(&["build", "Zn("]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset 3"));

    assert_eq!(exit_code(&vnl(&["verify", "no-such-theorem"])), 2);
    assert_eq!(exit_code(&vnl(&["search", "q99"])), 2);
    assert_eq!(exit_code(&vnl(&["check", "sparkliness", "Zn(4)"])), 2);
    assert_eq!(exit_code(&vnl(&["element", "Zn(4)", "17"])), 2);
    assert_eq!(exit_code(&vnl(&["build", "GF(4)"])), 2);
    assert_eq!(exit_code(&vnl(&["build", "Corner(Zn(12),2)"])), 2);
}

#[test]
fn build_emits_the_ring_summary_schema() {
    let out = vnl(&["--json", "build", "T(3,GF(2))"]);
    assert_eq!(exit_code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["label"], "T(3,GF(2))");
    assert_eq!(v["order"], 64);
    assert_eq!(v["repr_kind"], "dense-table");
}

#[test]
fn corpus_list_is_json_parseable() {
    let out = vnl(&["--json", "corpus", "list"]);
    assert_eq!(exit_code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let entries = v.as_array().unwrap();
    assert!(entries.iter().any(|e| e["label"] == "Zn(12)"));
    assert!(entries.iter().any(|e| e["label"] == "T(3,GF(2))"));
}

#[test]
fn verify_single_check_passes() {
    let out = vnl(&["verify", "example-3.3"]);
    assert_eq!(exit_code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("PASS"));
}

#[test]
fn sidecar_references_resolve() {
    let dir = std::env::temp_dir().join(format!("vnl-sidecar-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sidecar.json");
    std::fs::write(
        &path,
        r#"{
            "modules": {
                "m": {
                    "left_ring": "GF(2)",
                    "right_ring": "GF(2)",
                    "group_order": 2,
                    "add_table": [[0,1],[1,0]],
                    "left_action": [[0,0],[0,1]],
                    "right_action": [[0,0],[0,1]]
                }
            },
            "ideals": { "third": [0, 4, 8] }
        }"#,
    )
    .unwrap();
    let sidecar = path.to_str().unwrap();

    let out = vnl(&["--sidecar", sidecar, "build", "Tri(GF(2),m,GF(2))"]);
    assert_eq!(exit_code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("order=8"));

    let out = vnl(&["--sidecar", sidecar, "build", "Quot(Zn(12),third)"]);
    assert_eq!(exit_code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("order=4"));

    // a member set that is not an ideal is rejected with a closure witness
    let out = vnl(&["--sidecar", sidecar, "build", "Quot(Zn(10),third)"]);
    assert_eq!(exit_code(&out), 2);

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn element_report_covers_the_witnesses() {
    let out = vnl(&["--json", "element", "Zn(12)", "4"]);
    assert_eq!(exit_code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["idempotent"], true);
    assert_eq!(v["regular"]["inner_inverse"], 1);
    assert_eq!(v["right_ideal_order"], 3);
}

#[test]
fn corpus_generation_is_byte_identical() {
    let run = || {
        let out = vnl(&["corpus", "list", "--profile", "quick", "--seed", "7"]);
        assert_eq!(exit_code(&out), 0);
        out.stdout
    };
    assert_eq!(run(), run());
}
