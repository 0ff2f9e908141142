//! Black-box tests of the `wspline` binary: spec parsing, output files,
//! exit codes, and reproducibility.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use wspline::cli::{plan_from_json, render_flow_csv, PlanJson};

fn wspline(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wspline"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_spec(dir: &Path, body: &str) -> String {
    let path = dir.join("spec.json");
    fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

const GAUSSIAN_SPEC: &str = r#"{
  "mode": "gaussian",
  "times": [0.0, 1.0, 2.0],
  "marginals": [
    {"mean": [0.0, 0.0], "cov": [[1.0, 0.2], [0.2, 0.5]]},
    {"mean": [1.0, -1.0], "cov": [[0.5, 0.0], [0.0, 0.5]]},
    {"mean": [0.0, 1.0], "cov": [[2.0, -0.3], [-0.3, 1.0]]}
  ]
}"#;

#[test]
fn gaussian_outputs_and_plan_round_trip() {
    let tmp = tempfile::tempdir().unwrap();
    let spec = write_spec(tmp.path(), GAUSSIAN_SPEC);
    let out = tmp.path().join("run");
    let result = wspline(&["gaussian", "--spec", &spec, "--out", out.to_str().unwrap(), "--grid", "101"]);
    assert!(result.status.success(), "{}", String::from_utf8_lossy(&result.stderr));

    let flow = fs::read_to_string(out.join("flow.csv")).unwrap();
    let header = flow.lines().next().unwrap();
    assert_eq!(
        header,
        "t,mean_0,mean_1,cov_0_0,cov_0_1,cov_1_0,cov_1_1"
    );
    assert_eq!(flow.lines().count(), 102);

    // Re-evaluating the serialized plan must reproduce flow.csv exactly.
    let json = fs::read_to_string(out.join("plan.json")).unwrap();
    let parsed: PlanJson = serde_json::from_str(&json).unwrap();
    let restored = plan_from_json(&parsed).unwrap();
    assert_eq!(render_flow_csv(&restored, 101).unwrap(), flow);
}

#[test]
fn schema_errors_exit_two() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("run");
    let out_str = out.to_str().unwrap();

    // Unknown field.
    let spec = write_spec(tmp.path(), r#"{"mode": "gaussian", "times": [0, 1], "wat": 1}"#);
    let r = wspline(&["gaussian", "--spec", &spec, "--out", out_str]);
    assert_eq!(r.status.code(), Some(2), "{}", String::from_utf8_lossy(&r.stderr));

    // Wrong mode for the subcommand.
    let spec = write_spec(tmp.path(), r#"{"mode": "discrete", "times": [0, 1], "marginals": []}"#);
    let r = wspline(&["gaussian", "--spec", &spec, "--out", out_str]);
    assert_eq!(r.status.code(), Some(2));

    // Non-unit gaps are rejected in gaussian mode.
    let spec = write_spec(
        tmp.path(),
        r#"{
          "mode": "gaussian",
          "times": [0.0, 0.5],
          "marginals": [
            {"mean": [0.0], "cov": [[1.0]]},
            {"mean": [0.0], "cov": [[1.0]]}
          ]
        }"#,
    );
    let r = wspline(&["gaussian", "--spec", &spec, "--out", out_str]);
    assert_eq!(r.status.code(), Some(2), "{}", String::from_utf8_lossy(&r.stderr));

    // Missing spec file is an I/O error, not a schema error.
    let r = wspline(&["gaussian", "--spec", "/nonexistent.json", "--out", out_str]);
    assert_eq!(r.status.code(), Some(1));
}

#[test]
fn non_convergence_exits_three() {
    let tmp = tempfile::tempdir().unwrap();
    let spec = write_spec(
        tmp.path(),
        r#"{
          "mode": "discrete",
          "times": [0.0, 1.0, 2.0],
          "marginals": [
            {"points": [[-0.94], [-0.22], [0.3]], "weights": [0.5, 0.3, 0.2]},
            {"points": [[-0.06], [0.56], [1.1]], "weights": [0.2, 0.5, 0.3]},
            {"points": [[-0.59], [0.5], [0.9]], "weights": [0.4, 0.4, 0.2]}
          ],
          "solver": {"epsilon": 0.0001, "max_iters": 30, "marginal_tol": 1e-12}
        }"#,
    );
    let out = tmp.path().join("run");
    let r = wspline(&["discrete", "--spec", &spec, "--out", out.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(3), "{}", String::from_utf8_lossy(&r.stderr));
}

#[test]
fn discrete_outputs_and_oracle() {
    let tmp = tempfile::tempdir().unwrap();
    let spec = write_spec(
        tmp.path(),
        r#"{
          "mode": "discrete",
          "times": [0.0, 1.0, 2.0],
          "marginals": [
            {"points": [[0.0], [1.0]]},
            {"points": [[0.5], [1.5]]},
            {"points": [[0.0], [1.0]]}
          ],
          "solver": {"epsilon": 0.001, "max_iters": 100000, "marginal_tol": 1e-6}
        }"#,
    );
    let out = tmp.path().join("run");
    let r = wspline(&[
        "discrete", "--spec", &spec, "--out", out.to_str().unwrap(), "--oracle", "--grid", "11",
    ]);
    assert!(r.status.success(), "{}", String::from_utf8_lossy(&r.stderr));
    let stdout = String::from_utf8(r.stdout).unwrap();
    assert!(stdout.contains("exact cost"), "{stdout}");

    let flow = fs::read_to_string(out.join("flow.csv")).unwrap();
    assert_eq!(flow.lines().next().unwrap(), "t,x_0,weight");

    let summary: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.join("coupling.json")).unwrap()).unwrap();
    let gap = summary["oracle_gap"].as_f64().unwrap();
    assert!(gap.abs() < 5e-2, "oracle gap {gap}");
}

#[test]
fn spline_mode_writes_curve() {
    let tmp = tempfile::tempdir().unwrap();
    let spec = write_spec(
        tmp.path(),
        r#"{
          "mode": "spline",
          "times": [0.0, 1.0, 2.0],
          "knots": [[0.0, 0.0], [1.0, 2.0], [0.0, 0.0]]
        }"#,
    );
    let out = tmp.path().join("run");
    let r = wspline(&["spline", "--spec", &spec, "--out", out.to_str().unwrap(), "--grid", "41"]);
    assert!(r.status.success(), "{}", String::from_utf8_lossy(&r.stderr));
    let curve = fs::read_to_string(out.join("curve.csv")).unwrap();
    assert_eq!(curve.lines().next().unwrap(), "t,mean_0,mean_1");
    assert_eq!(curve.lines().count(), 42);
}

#[test]
fn figures_are_deterministic() {
    let tmp = tempfile::tempdir().unwrap();
    let out_a = tmp.path().join("a");
    let out_b = tmp.path().join("b");
    for out in [&out_a, &out_b] {
        let r = wspline(&[
            "figures", "--out", out.to_str().unwrap(), "--grid", "5", "--seed", "11",
        ]);
        assert!(r.status.success(), "{}", String::from_utf8_lossy(&r.stderr));
    }
    let a = fs::read(out_a.join("figure.csv")).unwrap();
    let b = fs::read(out_b.join("figure.csv")).unwrap();
    assert_eq!(a, b);

    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("# variances log-uniform [0.1,10], seed=11, n_knots=5\n"));
    assert_eq!(text.lines().nth(1).unwrap(), "t,variance,knot");
    // 2000 grid rows plus 6 knot-marker rows.
    assert_eq!(text.lines().count(), 2 + 2000 + 6);
}
