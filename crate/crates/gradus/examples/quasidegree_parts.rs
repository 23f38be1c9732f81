//! A quasidegree that is not a semidegree: the maximum of the two sheared
//! weighted degrees with weight 1 on x2 and weight -1 on x1 -+ x2^2. Shows
//! evaluation, the failed product rule with an explicit witness pair,
//! nonredundancy witnesses, and recovery of a part by stabilization.
//!
//! Run with `cargo run --example quasidegree_parts`.

use gradus::degfun::{
    check_degree_like, nonredundancy_witness, recover_part_limit, DegreeFunction,
    PullbackSemidegree, Quasidegree, SampleSpec, Semidegree, TriangularSubstitution,
    WitnessOutcome,
};
use gradus::poly::{Polynomial, Ring};
use gradus::rational::rational_from_i64 as ri;
use gradus::WeightedDegree;

fn main() {
    let ring = Ring::new(&["x1", "x2"]);
    let p = |terms: &[(i64, i64, i64)]| {
        Polynomial::from_terms(&ring, terms.iter().map(|&(c, a, b)| (vec![a, b], ri(c)))).unwrap()
    };

    // parts: weight 1 on x2, weight -1 on x1 - x2^2 (resp. x1 + x2^2)
    let part = |sign: i64| {
        let subst =
            TriangularSubstitution::single(&ring, 0, p(&[(sign, 0, 2)])).unwrap();
        Semidegree::Pullback(
            PullbackSemidegree::new(subst, WeightedDegree::new(&[-1, 1])).unwrap(),
        )
    };
    let q = Quasidegree::new(vec![part(1), part(-1)]).unwrap();
    let d = DegreeFunction::Quasidegree(q.clone());

    let u = p(&[(1, 2, 0), (-1, 0, 4)]); // x1^2 - x2^4
    let x1x2 = p(&[(1, 1, 1)]);
    let f1 = u.pow(2).add(&x1x2).unwrap();
    let f2 = u.pow(3).add(&x1x2).unwrap();
    for (name, f) in [
        ("x1", Polynomial::var(&ring, 0)),
        ("x2", Polynomial::var(&ring, 1)),
        ("x1^2 - x2^4", u.clone()),
        ("(x1^2-x2^4)^2 + x1 x2", f1),
        ("(x1^2-x2^4)^3 + x1 x2", f2),
    ] {
        println!("delta({name}) = {}", d.evaluate(&f).unwrap());
    }

    // the product rule fails exactly where the two parts disagree
    let report = check_degree_like(
        &d,
        &ring,
        &SampleSpec {
            random_pairs: 200,
            degree_bound: 4,
            ..SampleSpec::default()
        },
    )
    .unwrap();
    println!(
        "degree-like = {}, semidegree = {}",
        report.degree_like_ok(),
        report.semidegree_ok()
    );
    if let Some(v) = report.product_equality_failures.first() {
        println!(
            "witness pair: delta(({}) * ({})) = {} < {} = sum of the part degrees",
            v.f, v.g, v.left, v.right
        );
    }

    // each part strictly dominates somewhere: the presentation is minimal
    for i in 0..q.parts().len() {
        match nonredundancy_witness(&q, &ring, i).unwrap() {
            WitnessOutcome::Found(w) => println!(
                "part {i} dominates on {} (frame {}, exponents {:?})",
                w.witness, w.frame, w.exponents
            ),
            WitnessOutcome::NotFound { conclusive } => {
                println!("part {i}: no witness (conclusive = {conclusive})")
            }
        }
    }

    // a part value is recovered as the stabilized difference along powers of
    // its witness
    let witness0 = p(&[(1, 1, 0), (1, 0, 2)]); // x1 + x2^2
    let target = p(&[(1, 1, 0), (-1, 0, 2)]); // x1 - x2^2
    let rec = recover_part_limit(&d, &witness0, &target, 6).unwrap();
    let seq: Vec<String> = rec.sequence.iter().map(|v| v.to_string()).collect();
    println!(
        "recovery sequence for x1 - x2^2 along powers of x1 + x2^2: [{}] -> {:?}",
        seq.join(", "),
        rec.stabilized
    );
}
