use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn job_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fundseries-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn fundseries(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fundseries"))
        .args(args)
        .output()
        .unwrap()
}

const A2_M3: &str = "lie_type = \"A2\"\nk = \"sl2\"\nlabels = [2, 2]\nm = 3\n";

#[test]
fn machine_output_is_deterministic() {
    let path = job_file("det.toml", A2_M3);
    let p = path.to_str().unwrap();
    let a = fundseries(&["fundseries", "--config", p, "--emit", "machine"]);
    let b = fundseries(&["fundseries", "--config", p, "--emit", "machine"]);
    assert!(a.status.success());
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn human_and_machine_tables_agree() {
    let path = job_file("agree.toml", A2_M3);
    let p = path.to_str().unwrap();
    let human = fundseries(&["verify", "--config", p, "--cutoff", "400/8"]);
    let machine = fundseries(&[
        "verify", "--config", p, "--cutoff", "400/8", "--emit", "machine",
    ]);
    let doc: Value = serde_json::from_slice(&machine.stdout).unwrap();
    let text = String::from_utf8(human.stdout).unwrap();

    // rows follow the "delta norm2 value" header
    let rows: Vec<Vec<String>> = text
        .lines()
        .skip_while(|l| !l.trim_start().starts_with("delta"))
        .skip(1)
        .take_while(|l| l.starts_with("  "))
        .map(|l| l.split_whitespace().map(str::to_string).collect())
        .collect();
    let entries = doc["table"]["entries"].as_array().unwrap();
    assert_eq!(rows.len(), entries.len());
    for (row, entry) in rows.iter().zip(entries) {
        assert_eq!(row[0], entry["delta"][0].as_str().unwrap());
        assert_eq!(row[1], entry["norm2_shifted"].as_str().unwrap());
        assert_eq!(row[2], entry["value"].to_string());
    }
    assert_eq!(doc["verification"]["passed"], Value::Bool(true));
    assert!(text.contains("minimal k-type check: PASS"));
}

#[test]
fn exit_status_classes() {
    let missing = fundseries(&["pair-info", "--config", "/nonexistent/job.toml"]);
    assert_eq!(missing.status.code(), Some(1));

    let float = job_file(
        "float.toml",
        "lie_type = \"A2\"\nk = \"sl2\"\nlabels = [2, 2]\nm = 3.5\n",
    );
    let out = fundseries(&["generic-check", "--config", float.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let negative = job_file(
        "neg.toml",
        "lie_type = \"A2\"\nk = \"sl2\"\nlabels = [2, 2]\nm = -2\n",
    );
    let out = fundseries(&["generic-check", "--config", negative.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not dominant"));

    let big = job_file(
        "big.toml",
        "lie_type = \"A3\"\nk = \"levi\"\nlevi = [1, 2, 3]\nmu = [0, 0, 0]\n",
    );
    let out = fundseries(&[
        "fundseries",
        "--config",
        big.to_str().unwrap(),
        "--max-weyl",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn command_can_come_from_the_job_file() {
    let path = job_file(
        "cmd.toml",
        "lie_type = \"B2\"\nk = \"sl2\"\nlabels = [2, 2]\ncommand = \"sl2-threshold\"\n",
    );
    let out = fundseries(&["--config", path.to_str().unwrap(), "--emit", "machine"]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["threshold"]["rho_h"], 7);
    assert_eq!(doc["threshold"]["min_generic_m"], 6);
}

#[test]
fn parabolic_reports_irregular_lambda() {
    let path = job_file(
        "par.toml",
        "lie_type = \"A2\"\nk = \"cartan\"\nlambda = [1, -1]\n",
    );
    let out = fundseries(&[
        "parabolic",
        "--config",
        path.to_str().unwrap(),
        "--emit",
        "machine",
    ]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["parabolic"]["minimal"], false);
    assert!(doc["singular_root"].is_array());
}
