//! End-to-end runs of the `opcalc` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_opcalc"))
}

fn specs_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("specs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("opcalc-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

#[test]
fn solve_is_deterministic() {
    let dir = scratch("determinism");
    let spec = specs_dir().join("forced_oscillator.toml");
    let a = dir.join("a.csv");
    let b = dir.join("b.csv");
    for out in [&a, &b] {
        let o = run(&["solve", "--spec", path_str(&spec), "--out", path_str(out)]);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&o.stderr)
        );
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn solve_reports_rk4_agreement_and_closed_form() {
    let spec = specs_dir().join("forced_oscillator.toml");
    let o = run(&["solve", "--spec", path_str(&spec)]);
    assert_eq!(o.status.code(), Some(0));
    let (header, rows) = parse_csv(&String::from_utf8(o.stdout).unwrap());
    assert_eq!(header, ["x", "xi_re", "xi_im", "rk4_re", "rk4_im"]);
    assert_eq!(rows.len(), 201);
    for r in &rows {
        let x = r[0];
        let exact = 0.5 * (x.exp() - x.cos() - x.sin());
        assert!((r[1] - exact).abs() < 1e-12);
        assert!((r[1] - r[3]).abs() < 1e-6);
    }
    let report: serde_json::Value =
        serde_json::from_str(String::from_utf8(o.stderr).unwrap().trim()).unwrap();
    assert!(report["max_abs_deviation_rk4"].as_f64().unwrap() < 1e-6);
}

#[test]
fn solve_output_round_trips_as_sampled_forcing() {
    let dir = scratch("roundtrip");
    let spec = specs_dir().join("damped_complex.toml");
    let csv = dir.join("solution.csv");
    let o = run(&["solve", "--spec", path_str(&spec), "--out", path_str(&csv)]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );

    let doc = dir.join("resample.toml");
    std::fs::write(
        &doc,
        "operator = [[5, 0], [2, 0], [1, 0]]\ninterval = [-0.5, 2]\n\
         [forcing]\nkind = \"samples\"\npath = \"solution.csv\"\n",
    )
    .unwrap();
    let o = run(&["verify", "--spec", path_str(&doc)]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn homogeneous_oscillator_matches_sin_and_cos() {
    let dir = scratch("homogeneous");
    let doc = dir.join("osc.toml");
    std::fs::write(&doc, "operator = [1, 0, 1]\n").unwrap();
    let o = run(&["homogeneous", "--spec", path_str(&doc), "--grid", "51"]);
    assert_eq!(o.status.code(), Some(0));
    let (header, rows) = parse_csv(&String::from_utf8(o.stdout).unwrap());
    assert_eq!(header, ["x", "xi_0_re", "xi_0_im", "xi_1_re", "xi_1_im"]);
    assert_eq!(rows.len(), 51);
    for r in rows {
        assert!((r[1] - r[0].sin()).abs() < 1e-9);
        assert!((r[3] - r[0].cos()).abs() < 1e-9);
        assert!(r[2].abs() < 1e-9 && r[4].abs() < 1e-9);
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn expand_prints_geometric_coefficients() {
    let spec = specs_dir().join("geometric.toml");
    let o = run(&["expand", "--spec", path_str(&spec)]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["valuation"], 1);
    let coeffs = v["coefficients"].as_array().unwrap();
    assert_eq!(coeffs.len(), 8);
    for (k, c) in coeffs.iter().enumerate() {
        assert_eq!(c[0].as_f64().unwrap(), 2f64.powi(k as i32));
        assert_eq!(c[1].as_f64().unwrap(), 0.0);
    }
}

#[test]
fn verify_passes_on_shipped_specs() {
    for name in [
        "forced_oscillator.toml",
        "damped_complex.toml",
        "geometric.toml",
    ] {
        let spec = specs_dir().join(name);
        let o = run(&["verify", "--spec", path_str(&spec)]);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{name}: {}",
            String::from_utf8_lossy(&o.stdout)
        );
    }
}

#[test]
fn verify_fails_with_exit_one_at_impossible_tolerance() {
    let spec = specs_dir().join("forced_oscillator.toml");
    let o = run(&["verify", "--spec", path_str(&spec), "--tol", "1e-30"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], false);
}

#[test]
fn input_errors_exit_two_with_json() {
    let dir = scratch("errors");
    let cases = [
        (
            "interval.toml",
            "operator = [0, 1]\ninterval = [1, 2]\n",
            "SchemaError",
        ),
        (
            "expr.toml",
            "operator = [0, 1]\n[forcing]\nkind = \"expression\"\nexpr = \"tan(x)\"\n",
            "ExpressionError",
        ),
        ("syntax.toml", "operator = [0, 1\n", "SchemaError"),
    ];
    for (name, text, kind) in cases {
        let path = dir.join(name);
        std::fs::write(&path, text).unwrap();
        let o = run(&["solve", "--spec", path_str(&path)]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        let v: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
        assert_eq!(v["error"], kind, "{name}");
        assert!(v["message"].is_string());
    }
    let missing = dir.join("missing.toml");
    let o = run(&["solve", "--spec", path_str(&missing)]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn numeric_failures_exit_three() {
    let dir = scratch("numeric");
    // a pole inside the interval and poles at ±0.001i: neither resolves to
    // machine precision below the degree cap
    for (name, expr) in [
        ("pole.toml", "1/(x - 0.3)"),
        ("near_pole.toml", "x^2 / (x^2 + 1e-6)"),
    ] {
        let path = dir.join(name);
        std::fs::write(
            &path,
            format!("operator = [0, 0, 1]\n[forcing]\nkind = \"expression\"\nexpr = \"{expr}\"\n"),
        )
        .unwrap();
        let o = run(&["solve", "--spec", path_str(&path)]);
        assert_eq!(
            o.status.code(),
            Some(3),
            "{}",
            String::from_utf8_lossy(&o.stderr)
        );
        let v: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
        assert_eq!(v["error"], "NoConvergence");
    }
    std::fs::remove_dir_all(&dir).ok();
}
