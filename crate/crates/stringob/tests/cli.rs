//! End-to-end CLI behavior: flags, file formats, exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_stringob"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("stringob_cli_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn gen_families() {
    let v = stdout_json(&bin().args(["gen", "heawood"]).output().unwrap());
    assert_eq!(v["n"], 14);
    assert_eq!(v["edges"].as_array().unwrap().len(), 21);

    let v = stdout_json(&bin().args(["gen", "complete", "5"]).output().unwrap());
    assert_eq!(v["edges"].as_array().unwrap().len(), 10);

    let v = stdout_json(&bin().args(["gen", "c_cbar", "7"]).output().unwrap());
    assert_eq!(v["n"], 28);
    assert_eq!(v["edges"].as_array().unwrap().len(), 7 * 4 / 2 + 28); // n(n-3)/2 + 4n
}

#[test]
fn gen_subdivide_via_input_file() {
    let k5 = tmp("k5.json");
    assert!(bin().args(["gen", "complete", "5", "--out"]).arg(&k5).status().unwrap().success());
    let out = bin()
        .args(["gen", "subdivide", "1", "--input"])
        .arg(&k5)
        .output()
        .unwrap();
    let v = stdout_json(&out);
    assert_eq!(v["n"], 15);
    assert_eq!(v["edges"].as_array().unwrap().len(), 20);
}

#[test]
fn gen_errors_exit_2() {
    let out = bin().args(["gen", "c_cbar", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["gen", "campanula"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn obstruction_reports() {
    let hw = tmp("heawood.json");
    assert!(bin().args(["gen", "heawood", "--out"]).arg(&hw).status().unwrap().success());
    let v = stdout_json(
        &bin()
            .arg("obstruction")
            .arg(&hw)
            .args(["--pairs", "s"])
            .output()
            .unwrap(),
    );
    assert_eq!(v["vanishes"], false);
    assert_eq!(v["kind"], "s");
    assert!(v["certificate"].is_array());

    let gp = tmp("gp.json");
    assert!(bin().args(["gen", "gp", "--out"]).arg(&gp).status().unwrap().success());
    let v = stdout_json(
        &bin()
            .arg("obstruction")
            .arg(&gp)
            .args(["--pairs", "s", "--mode", "integer"])
            .output()
            .unwrap(),
    );
    assert_eq!(v["mode"], "integer");
    assert!(v["vanishes"].is_boolean());

    // Subdivided pairs and a random layout go through the same flags.
    let v = stdout_json(
        &bin()
            .arg("obstruction")
            .arg(&hw)
            .args(["--pairs", "sd", "--layout", "random", "--seed", "9"])
            .output()
            .unwrap(),
    );
    assert_eq!(v["vanishes"], false);

    let k5 = tmp("k5_delta.json");
    assert!(bin().args(["gen", "complete", "5", "--out"]).arg(&k5).status().unwrap().success());
    let v = stdout_json(
        &bin()
            .arg("obstruction")
            .arg(&k5)
            .args(["--pairs", "delta"])
            .output()
            .unwrap(),
    );
    assert_eq!(v["vanishes"], false);
}

#[test]
fn obstruction_svg_output() {
    let hw = tmp("heawood_svg.json");
    assert!(bin().args(["gen", "heawood", "--out"]).arg(&hw).status().unwrap().success());
    let svg = tmp("heawood.svg");
    let out = bin()
        .arg("obstruction")
        .arg(&hw)
        .args(["--pairs", "s", "--layout", "convex", "--svg"])
        .arg(&svg)
        .output()
        .unwrap();
    assert!(out.status.success());
    let content = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(content.matches("<polyline").count(), 21);
    assert_eq!(content.matches("class=\"crossing\"").count(), 7);
}

#[test]
fn strings_verify_and_round_trip() {
    let k2 = tmp("k2.json");
    assert!(bin().args(["gen", "complete", "2", "--out"]).arg(&k2).status().unwrap().success());

    let crossing = tmp("crossing.json");
    std::fs::write(
        &crossing,
        r#"{"n":2,"curves":[[["0/1","0/1"],["2/1","2/1"]],[["0/1","2/1"],["2/1","0/1"]]]}"#,
    )
    .unwrap();
    let out = bin()
        .args(["strings", "verify", "--graph"])
        .arg(&k2)
        .arg(&crossing)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["valid"], true);

    let disjoint = tmp("disjoint.json");
    std::fs::write(
        &disjoint,
        r#"{"n":2,"curves":[[["0/1","0/1"],["1/1","0/1"]],[["0/1","2/1"],["1/1","2/1"]]]}"#,
    )
    .unwrap();
    let out = bin()
        .args(["strings", "verify", "--graph"])
        .arg(&k2)
        .arg(&disjoint)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["valid"], false);
    assert_eq!(v["violations"].as_array().unwrap().len(), 1);

    // to-drawing then from-drawing reproduces a valid representation.
    let drawing = tmp("k2_drawing.json");
    let out = bin()
        .args(["strings", "to-drawing", "--graph"])
        .arg(&k2)
        .arg(&crossing)
        .args(["--out"])
        .arg(&drawing)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let out = bin()
        .args(["strings", "from-drawing", "--graph"])
        .arg(&k2)
        .arg(&drawing)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["n"], 2);
    assert_eq!(v["curves"].as_array().unwrap().len(), 2);
}

#[test]
fn corpus_command() {
    let spec = tmp("corpus_spec.json");
    std::fs::write(
        &spec,
        r#"{"seed": 11, "count": 6, "n_range": [4, 7], "edge_probability": [0.3],
           "checks": ["ob_eq_equivalence", "integer_vs_mod2"]}"#,
    )
    .unwrap();
    let out = bin().arg("corpus").arg(&spec).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["instances"], 6);
    assert_eq!(v["failure_count"], 0);
    assert_eq!(v["checks"]["ob_eq_equivalence"]["checked"], 6);
    assert_eq!(v["checks"]["finger_move_postcondition"]["checked"], 0);
}

#[test]
fn corpus_respects_thread_env() {
    let spec = tmp("corpus_threads.json");
    std::fs::write(
        &spec,
        r#"{"seed": 12, "count": 4, "n_range": [4, 6], "edge_probability": [0.4],
           "checks": ["ob_eq_equivalence"]}"#,
    )
    .unwrap();
    let out = bin()
        .arg("corpus")
        .arg(&spec)
        .env("STRINGOB_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn missing_file_exits_2() {
    let out = bin()
        .arg("obstruction")
        .arg("/nonexistent/graph.json")
        .args(["--pairs", "s"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
