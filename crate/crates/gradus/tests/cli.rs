//! End-to-end checks of the batch binary: exit codes, report determinism
//! under a fixed seed, and the environment override.

use std::path::Path;
use std::process::Command;

fn gradus() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gradus"))
}

fn write_job(dir: &Path, name: &str, contents: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn bezout_job_reports_equality() {
    let dir = tempfile::tempdir().unwrap();
    let job = write_job(
        dir.path(),
        "bezout.json",
        r#"{
  "inputs": {
    "degree_function": {
      "kind": "iterated",
      "base_weights": [3, 2],
      "steps": [
        { "h": { "vars": ["x1", "x2"], "laurent": false,
                 "terms": [ {"c": "1", "e": [2, 0]}, {"c": "-1", "e": [0, 3]} ] },
          "w": 1 }
      ]
    },
    "components": [
      { "vars": ["x1", "x2"], "laurent": false,
        "terms": [ {"c": "1", "e": [1, 0]},
                   {"c": "1", "e": [4, 0]}, {"c": "-2", "e": [2, 3]}, {"c": "1", "e": [0, 6]} ] },
      { "vars": ["x1", "x2"], "laurent": false,
        "terms": [ {"c": "1", "e": [2, 0]}, {"c": "-1", "e": [0, 3]} ] }
    ],
    "points": [ ["0", "0"], ["1/2", "-3"] ]
  }
}"#,
    );
    let out_path = dir.path().join("report.json");
    let output = gradus()
        .args(["bezout", "--job"])
        .arg(&job)
        .arg("--out")
        .arg(&out_path)
        .output()
        .unwrap();
    assert!(output.status.success(), "stderr: {}", String::from_utf8_lossy(&output.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report["result"]["bound"], "3");
    assert_eq!(report["result"]["equality"], true);
    assert_eq!(report["result"]["fibers"][0]["count"], 3);
}

#[test]
fn rees_check_inconclusive_fiber_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    // the mixed-monomial completion over the off-axis point (1, 1)
    let job = write_job(
        dir.path(),
        "check.json",
        r#"{
  "inputs": {
    "filtration": {
      "closure": "powers_of_f1",
      "levels": [
        { "level": 1, "gens": [
          { "vars": ["x", "y"], "laurent": false, "terms": [ {"c": "1", "e": [1, 0]} ] },
          { "vars": ["x", "y"], "laurent": false, "terms": [ {"c": "1", "e": [0, 1]} ] },
          { "vars": ["x", "y"], "laurent": false, "terms": [ {"c": "1", "e": [1, 1]} ] },
          { "vars": ["x", "y"], "laurent": false, "terms": [ {"c": "1", "e": [2, 2]} ] }
        ] }
      ]
    },
    "hypersurfaces": [
      { "vars": ["x", "y"], "laurent": false,
        "terms": [ {"c": "1", "e": [1, 0]}, {"c": "-1", "e": [0, 0]} ] },
      { "vars": ["x", "y"], "laurent": false,
        "terms": [ {"c": "1", "e": [0, 1]}, {"c": "-1", "e": [0, 0]} ] }
    ]
  },
  "options": { "degree_bound": 8, "power_bound": 8 }
}"#,
    );
    let output = gradus().args(["rees-check", "--job"]).arg(&job).output().unwrap();
    assert_eq!(output.status.code(), Some(2), "inconclusive runs exit 2");
}

#[test]
fn malformed_polynomial_exits_1_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let job = write_job(
        dir.path(),
        "bad.json",
        r#"{
  "inputs": {
    "degree_function": {"kind": "weighted", "weights": [1, 1]},
    "polys": [ { "vars": ["x1", "x2"], "terms": [ {"c": "0.5", "e": [1, 0]} ] } ]
  }
}"#,
    );
    let output = gradus().args(["eval", "--job"]).arg(&job).output().unwrap();
    assert_eq!(output.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(
        stderr.contains("/polys/0/terms/0/c"),
        "diagnostic should point at the bad coefficient, got: {stderr}"
    );
}

#[test]
fn reports_are_deterministic_under_a_fixed_seed() {
    let dir = tempfile::tempdir().unwrap();
    let job = write_job(
        dir.path(),
        "axioms.json",
        r#"{
  "inputs": {
    "degree_function": {"kind": "weighted", "weights": [3, 2]},
    "mode": "semidegree"
  },
  "options": { "sample_count": 50 }
}"#,
    );
    let mut reports = Vec::new();
    for run in 0..2 {
        let out_path = dir.path().join(format!("report{run}.json"));
        let output = gradus()
            .args(["axioms", "--job"])
            .arg(&job)
            .arg("--out")
            .arg(&out_path)
            .args(["--seed", "99"])
            .output()
            .unwrap();
        assert!(output.status.success());
        reports.push(std::fs::read(&out_path).unwrap());
    }
    assert_eq!(reports[0], reports[1], "byte-identical reports per seed");
}

#[test]
fn probe_job_reports_the_staircase_limit() {
    let dir = tempfile::tempdir().unwrap();
    let job = write_job(
        dir.path(),
        "probe.json",
        r#"{
  "inputs": {
    "degree_function": {"kind": "univariate_ceil", "num": 3, "den": 2},
    "h": { "vars": ["x"], "laurent": false, "terms": [ {"c": "1", "e": [1]} ] },
    "schedule": [1, 2, 4, 8]
  }
}"#,
    );
    let out_path = dir.path().join("probe-report.json");
    let output = gradus()
        .args(["probe", "--job"])
        .arg(&job)
        .arg("--out")
        .arg(&out_path)
        .output()
        .unwrap();
    assert!(output.status.success());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report["result"]["last"], "3/2");
    assert_eq!(report["result"]["implied_denominator"], "2");
}

#[test]
fn shipped_sample_jobs_run() {
    let jobs_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../jobs");
    let cases = [
        ("eval", "eval-quasidegree.json", 0),
        ("axioms", "axioms.json", 0),
        ("iterate", "iterate.json", 0),
        ("polytope", "polytope.json", 0),
        ("bezout", "bezout.json", 0),
        ("bezout", "bezout-preserve.json", 0),
        ("count", "count.json", 0),
        ("bernstein", "bernstein.json", 0),
        ("rees-build", "rees-build.json", 0),
        ("rees-check", "rees-check.json", 0),
        ("probe", "probe.json", 0),
    ];
    for (command, file, expected) in cases {
        let output = gradus()
            .arg(command)
            .arg("--job")
            .arg(jobs_dir.join(file))
            .output()
            .unwrap();
        assert_eq!(
            output.status.code(),
            Some(expected),
            "{command} on {file}: stderr {}",
            String::from_utf8_lossy(&output.stderr)
        );
    }
}

#[test]
fn environment_overrides_the_degree_bound() {
    let dir = tempfile::tempdir().unwrap();
    let job = write_job(
        dir.path(),
        "check.json",
        r#"{
  "inputs": {
    "filtration": {
      "closure": "powers_of_f1",
      "levels": [
        { "level": 1, "gens": [
          { "vars": ["x", "y"], "laurent": false, "terms": [ {"c": "1", "e": [1, 0]} ] },
          { "vars": ["x", "y"], "laurent": false, "terms": [ {"c": "1", "e": [0, 1]} ] },
          { "vars": ["x", "y"], "laurent": false, "terms": [ {"c": "1", "e": [3, 0]} ] }
        ] }
      ]
    },
    "hypersurfaces": [
      { "vars": ["x", "y"], "laurent": false, "terms": [ {"c": "1", "e": [1, 0]} ] },
      { "vars": ["x", "y"], "laurent": false,
        "terms": [ {"c": "1", "e": [0, 1]}, {"c": "1", "e": [3, 0]} ] }
    ]
  }
}"#,
    );
    let out_path = dir.path().join("report.json");
    let output = gradus()
        .env("GRADUS_DEGREE_BOUND", "5")
        .args(["rees-check", "--job"])
        .arg(&job)
        .arg("--out")
        .arg(&out_path)
        .output()
        .unwrap();
    assert!(output.status.success());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report["provenance"]["degree_bound"], 5);
    assert_eq!(report["result"]["d_max"], 5);
}
