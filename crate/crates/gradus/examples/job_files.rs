//! Driving the library through JSON job files, exactly as the `gradus`
//! binary does: build a job value, dispatch it, and print the report.
//!
//! Run with `cargo run --example job_files`.

use gradus::jobs::{run_job, JobOptions};
use serde_json::json;

fn main() {
    let poly = |terms: serde_json::Value| {
        json!({ "vars": ["x1", "x2"], "laurent": false, "terms": terms })
    };

    let eval_job = json!({
        "inputs": {
            "degree_function": { "kind": "weighted", "weights": [3, 2] },
            "polys": [ poly(json!([ {"c": "1", "e": [2, 0]}, {"c": "-1", "e": [0, 3]} ])) ],
        }
    });
    let out = run_job("eval", &eval_job, &JobOptions::default()).unwrap();
    println!("eval -> exit {}\n{}\n", out.exit_code, out.text);

    let bernstein_job = json!({
        "inputs": {
            "system": [
                { "vars": ["x1", "x2"], "laurent": true,
                  "terms": [ {"c": "1", "e": [0, 0]}, {"c": "2", "e": [1, 0]},
                             {"c": "3", "e": [0, 1]}, {"c": "5", "e": [1, 1]} ] },
                { "vars": ["x1", "x2"], "laurent": true,
                  "terms": [ {"c": "7", "e": [0, 0]}, {"c": "1", "e": [1, 0]},
                             {"c": "4", "e": [0, 1]}, {"c": "2", "e": [1, 1]} ] }
            ]
        }
    });
    let out = run_job("bernstein", &bernstein_job, &JobOptions::default()).unwrap();
    println!("bernstein -> exit {}\n{}\n", out.exit_code, out.text);
    println!(
        "report JSON:\n{}",
        serde_json::to_string_pretty(&out.report).unwrap()
    );
}
