//! The normalized degree probe delta(h^m)/m. For the staircase rule
//! ceil(3k/2) the sequence stabilizes at 3/2 with denominator 2, exposing
//! a degree-like function that no integer-valued semidegree matches; for a
//! quasidegree it is constant from m = 1 by the power law.
//!
//! Run with `cargo run --example degree_probe`.

use gradus::degfun::{DegreeFunction, StaircaseDegree};
use gradus::poly::{Polynomial, Ring};
use gradus::rational::rational_from_i64 as ri;
use gradus::rees::{
    normalized_degree_probe, normalized_degree_probe_filtration, FiltrationSpec,
};
use gradus::WeightedDegree;

fn main() {
    let ring = Ring::new(&["x"]);
    let x = Polynomial::var(&ring, 0);
    let staircase = DegreeFunction::Staircase(StaircaseDegree::new(3, 2));
    let report = normalized_degree_probe(&staircase, &x, &[1, 2, 4, 8, 16]).unwrap();
    println!("staircase probe on x:");
    for (m, v) in &report.values {
        println!("  m = {m:>2}: delta(x^m)/m = {v}");
    }
    println!(
        "  stabilized = {}, implied denominator = {:?}",
        report.stabilized, report.implied_denominator
    );

    // a weighted degree is already multiplicative: constant from the start
    let ring2 = Ring::new(&["x1", "x2"]);
    let w = DegreeFunction::Weighted(WeightedDegree::new(&[3, 2]));
    let f = Polynomial::from_terms(
        &ring2,
        [(vec![1, 0], ri(1)), (vec![0, 1], ri(-2))],
    )
    .unwrap();
    let report = normalized_degree_probe(&w, &f, &[1, 2, 4, 8]).unwrap();
    let vals: Vec<String> = report.values.iter().map(|(m, v)| format!("{m}:{v}")).collect();
    println!("weighted probe on x1 - 2 x2: [{}]", vals.join(", "));

    // filtration-backed probe with a growing level bound
    let spec = FiltrationSpec::powers_of_level_one(
        &ring2,
        vec![
            Polynomial::var(&ring2, 0),
            Polynomial::var(&ring2, 1),
            Polynomial::from_terms(&ring2, [(vec![3, 0], ri(1))]).unwrap(),
        ],
    )
    .unwrap();
    let x1 = Polynomial::var(&ring2, 0);
    let cube = Polynomial::from_terms(&ring2, [(vec![3, 0], ri(1))]).unwrap();
    for (name, h) in [("x1", &x1), ("x1^3", &cube)] {
        let report = normalized_degree_probe_filtration(&spec, h, &[1, 2, 4]).unwrap();
        let vals: Vec<String> = report.values.iter().map(|(m, v)| format!("{m}:{v}")).collect();
        println!("filtration probe on {name}: [{}]", vals.join(", "));
    }
}
