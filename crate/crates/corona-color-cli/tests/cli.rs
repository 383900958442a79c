//! End-to-end tests over the compiled binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_corona-color"))
}

fn write_dimacs(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn run(cmd: &mut Command) -> Output {
    cmd.output().expect("binary runs")
}

#[test]
fn gen_builds_the_double_corona() {
    let dir = tempfile::tempdir().unwrap();
    let c3 = write_dimacs(dir.path(), "c3.dimacs", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    let out = run(bin()
        .args(["gen", "--g", &c3, "--h-kind", "complete", "--h-size", "2", "--l", "2"])
        .arg("--labels")
        .arg(dir.path().join("labels.json")));
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("p edge 27 39\n"), "{text}");
    let labels: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("labels.json")).unwrap())
            .unwrap();
    assert_eq!(labels.as_array().unwrap().len(), 27);
    assert_eq!(labels[0]["label"]["base"], 0);
}

#[test]
fn gen_respects_the_order_cap() {
    let dir = tempfile::tempdir().unwrap();
    let c3 = write_dimacs(dir.path(), "c3.dimacs", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    let out = run(bin().args([
        "gen", "--g", &c3, "--h-kind", "complete", "--h-size", "2", "--l", "2", "--cap", "10",
    ]));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn color_certificate_for_the_second_level_wheel() {
    let dir = tempfile::tempdir().unwrap();
    let k1 = write_dimacs(dir.path(), "k1.dimacs", "p edge 1 0\n");
    let out = run(bin().args([
        "color", "--g", &k1, "--h-kind", "cycle", "--h-size", "4", "--l", "2",
    ]));
    assert!(out.status.success());
    let cert: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cert["k"], 3);
    assert_eq!(cert["theorem"], "T8");
    assert_eq!(cert["claim"], "equality");
    assert_eq!(cert["product_n"], 25);
}

#[test]
fn oracle_decides_and_signals_through_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let k33 = write_dimacs(
        dir.path(),
        "k33.dimacs",
        "p edge 6 9\ne 1 4\ne 1 5\ne 1 6\ne 2 4\ne 2 5\ne 2 6\ne 3 4\ne 3 5\ne 3 6\n",
    );
    let yes = run(bin().args(["oracle", &k33, "--k", "2"]));
    assert_eq!(yes.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&yes.stdout).unwrap();
    assert_eq!(json["decision"], true);

    let no = run(bin().args(["oracle", &k33, "--k", "3"]));
    assert_eq!(no.status.code(), Some(1));

    let chi_eq = run(bin().args(["oracle", &k33, "--chi-eq"]));
    let json: serde_json::Value = serde_json::from_slice(&chi_eq.stdout).unwrap();
    assert_eq!(json["chi_eq"], 2);
}

#[test]
fn verify_accepts_good_and_rejects_tampered_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let c3 = write_dimacs(dir.path(), "c3.dimacs", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    let cert_path = dir.path().join("cert.json");
    let out = run(bin()
        .args(["color", "--g", &c3, "--h-kind", "complete", "--h-size", "2", "--l", "1"])
        .arg("-o")
        .arg(&cert_path));
    assert!(out.status.success());

    let ok = run(bin()
        .args(["verify", "--g", &c3, "--h-kind", "complete", "--h-size", "2", "--l", "1"])
        .arg("--certificate")
        .arg(&cert_path));
    assert_eq!(ok.status.code(), Some(0));

    // Corrupt one copy vertex to collide with its owner.
    let mut cert: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&cert_path).unwrap()).unwrap();
    let owner = cert["coloring"][0].clone();
    cert["coloring"][3] = owner;
    fs::write(&cert_path, serde_json::to_string(&cert).unwrap()).unwrap();
    let bad = run(bin()
        .args(["verify", "--g", &c3, "--h-kind", "complete", "--h-size", "2", "--l", "1"])
        .arg("--certificate")
        .arg(&cert_path));
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn survey_runs_config_files_and_flags_mismatches() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("rows.json");
    fs::write(
        &config,
        serde_json::json!([
            {
                "g": {"family": "cycle", "size": 6},
                "colorings": [{"k": 3, "colors": [1, 2, 3, 1, 2, 3]}],
                "h": {"kind": "cycle", "size": 4},
                "l": 1,
                "expected": {"claim": "equality", "k": 3}
            }
        ])
        .to_string(),
    )
    .unwrap();
    let csv = dir.path().join("out.csv");
    let ok = run(bin()
        .args(["survey", "--config"])
        .arg(&config)
        .arg("--csv")
        .arg(&csv));
    assert_eq!(ok.status.code(), Some(0));
    let table = fs::read_to_string(&csv).unwrap();
    assert!(table.lines().count() == 2);
    assert!(table.contains("T4,equality,3,3,true"));

    // A wrong expectation must flip the exit code.
    fs::write(
        &config,
        serde_json::json!([
            {
                "g": {"family": "cycle", "size": 6},
                "colorings": [{"k": 3, "colors": [1, 2, 3, 1, 2, 3]}],
                "h": {"kind": "cycle", "size": 4},
                "l": 1,
                "expected": {"claim": "equality", "k": 4}
            }
        ])
        .to_string(),
    )
    .unwrap();
    let bad = run(bin().args(["survey", "--config"]).arg(&config));
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write_dimacs(
        dir.path(),
        "c5.dimacs",
        "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n",
    );
    let args = ["color", "--g", &c5, "--h-kind", "cycle", "--h-size", "6", "--l", "1"];
    let first = run(bin().args(args));
    let second = run(bin().args(args));
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let gen_args = ["gen", "--g", &c5, "--h-kind", "path", "--h-size", "3", "--l", "2"];
    let first = run(bin().args(gen_args));
    let second = run(bin().args(gen_args));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn oracle_limit_env_var_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let k33 = write_dimacs(
        dir.path(),
        "k33.dimacs",
        "p edge 6 9\ne 1 4\ne 1 5\ne 1 6\ne 2 4\ne 2 5\ne 2 6\ne 3 4\ne 3 5\ne 3 6\n",
    );
    let out = run(bin()
        .args(["oracle", &k33, "--k", "2"])
        .env("COLORER_LIMIT", "4"));
    assert_eq!(out.status.code(), Some(2));
    let out = run(bin()
        .args(["oracle", &k33, "--k", "2", "--limit", "8"])
        .env("COLORER_LIMIT", "4"));
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_with_two() {
    let out = run(bin().args(["oracle", "/nonexistent.dimacs", "--chi-eq"]));
    assert_eq!(out.status.code(), Some(2));
    let out = run(bin().args(["frobnicate"]));
    assert_eq!(out.status.code(), Some(2));
}
