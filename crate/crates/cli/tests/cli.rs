use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_amadirac"))
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn verify(config: &Path, report: &Path) -> Output {
    bin().args(["verify", "--config"]).arg(config).arg("--report").arg(report).output().unwrap()
}

#[test]
fn s3_full_suite_passes() {
    let dir = TempDir::new().unwrap();
    let cfg = write(dir.path(), "s3.json", r#"{"group": "S3", "c": "1/2", "max_degree": 4}"#);
    let report = dir.path().join("report.json");
    let out = verify(&cfg, &report);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    let suites: Vec<&str> = json["suites"].as_array().unwrap().iter().map(|s| s["suite"].as_str().unwrap()).collect();
    assert_eq!(suites, ["rca", "ama", "clifford", "pincover", "dirac", "scasimir", "vogan", "cohomology"]);
    assert_eq!(json["summary"]["fail"], 0);
}

#[test]
fn b2_unequal_parameters_use_product_cover() {
    let dir = TempDir::new().unwrap();
    let cfg = write(dir.path(), "b2.json", r#"{"group": "B2", "c": {"short": "1/3", "long": "1/5"}, "max_degree": 4}"#);
    let report = dir.path().join("report.json");
    let out = verify(&cfg, &report);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&report).unwrap();
    assert!(text.contains("Ŵ = W̃ × C₂"));
}

#[test]
fn malformed_rational_is_a_config_error() {
    let dir = TempDir::new().unwrap();
    let cfg = write(dir.path(), "bad.json", r#"{"group": "S3", "c": "1/0", "max_degree": 4}"#);
    let out = verify(&cfg, &dir.path().join("r.json"));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn float_c_is_rejected() {
    let dir = TempDir::new().unwrap();
    let cfg = write(dir.path(), "bad.json", r#"{"group": "S3", "c": 0.5, "max_degree": 4}"#);
    assert_eq!(verify(&cfg, &dir.path().join("r.json")).status.code(), Some(2));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let cfg = write(dir.path(), "s3.json", r#"{"group": "S3", "c": "0", "max_degree": 2}"#);
    let out = bin().args(["verify", "--suite", "rca,nope", "--config"]).arg(&cfg).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let cfg = write(dir.path(), "s3.json", r#"{"group": "S3", "c": "-1/3", "max_degree": 3, "tau": "sign"}"#);
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    assert_eq!(verify(&cfg, &a).status.code(), Some(0));
    assert_eq!(verify(&cfg, &b).status.code(), Some(0));
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn sweep_table_has_one_row_per_point() {
    let dir = TempDir::new().unwrap();
    let cfg = write(dir.path(), "s3.json", r#"{"group": "S3", "c": "0", "max_degree": 2}"#);
    let sweep =
        write(dir.path(), "sweep.json", r#"{"grid": {"c": ["0", "1/6"], "m": [0, 1, 2], "C": ["zero", "C2"]}}"#);
    let csv_path = dir.path().join("t.csv");
    let out = bin()
        .args(["table", "--config"])
        .arg(&cfg)
        .arg("--sweep")
        .arg(&sweep)
        .arg("--out")
        .arg(&csv_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&csv_path).unwrap();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(
        header,
        [
            "group",
            "c",
            "tau",
            "m",
            "dim_X",
            "C_name",
            "scale",
            "dim_ker",
            "dim_H",
            "omega_scalar",
            "lambda",
            "chi",
            "unitary_flag",
            "status"
        ]
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 12);
    let lambda = header.iter().position(|h| *h == "lambda").unwrap();
    let row = rows.iter().find(|r| r[1] == "1/6" && r[3] == "1").unwrap();
    assert_eq!(row[lambda], "3");
    assert!(rows.iter().all(|r| r[13] == "ok"));
}

#[test]
fn unwritable_table_output() {
    let dir = TempDir::new().unwrap();
    let cfg = write(dir.path(), "s3.json", r#"{"group": "S3", "c": "0", "max_degree": 2}"#);
    let sweep = write(dir.path(), "sweep.json", r#"{"points": [{"c": "0", "m": 1, "C": "zero"}]}"#);
    let out = bin()
        .args(["table", "--config"])
        .arg(&cfg)
        .arg("--sweep")
        .arg(&sweep)
        .args(["--out", "/nonexistent/dir/t.csv"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_errors_become_rows() {
    let dir = TempDir::new().unwrap();
    let cfg = write(dir.path(), "s3.json", r#"{"group": "S3", "c": "0", "max_degree": 2}"#);
    let sweep = write(
        dir.path(),
        "sweep.json",
        r#"{"points": [{"c": "0", "m": 1, "C": "nonsense"}, {"c": "0", "m": 1, "C": "zero"}]}"#,
    );
    let csv_path = dir.path().join("t.csv");
    let out = bin()
        .args(["table", "--config"])
        .arg(&cfg)
        .arg("--sweep")
        .arg(&sweep)
        .arg("--out")
        .arg(&csv_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&csv_path).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].contains("error"));
    assert!(rows[1].ends_with(",ok"));
}

#[test]
fn spectrum_in_the_plane() {
    let dir = TempDir::new().unwrap();
    let cfg = write(dir.path(), "s2.json", r#"{"group": "S2", "c": "0", "max_degree": 3}"#);
    let out_path = dir.path().join("spectrum.json");
    let out = bin()
        .args(["spectrum", "--m", "2", "--C", "zero", "--config"])
        .arg(&cfg)
        .arg("--out")
        .arg(&out_path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out_path).unwrap()).unwrap();
    for e in json["eigenvalues"].as_array().unwrap() {
        assert!((e.as_f64().unwrap().abs() - 2.0).abs() < 1e-9);
    }
}
