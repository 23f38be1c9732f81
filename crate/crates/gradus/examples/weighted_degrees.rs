//! Weighted degrees: evaluation, leading forms, and the axiom sweep.
//!
//! Run with `cargo run --example weighted_degrees`.

use gradus::degfun::{check_degree_like, leading_form, DegreeFunction, SampleSpec, Semidegree};
use gradus::poly::{Polynomial, Ring};
use gradus::rational::rational_from_i64 as ri;
use gradus::WeightedDegree;

fn main() {
    let ring = Ring::new(&["x1", "x2"]);
    let p = |terms: &[(i64, i64, i64)]| {
        Polynomial::from_terms(&ring, terms.iter().map(|&(c, a, b)| (vec![a, b], ri(c)))).unwrap()
    };

    // weight 3 on x1 and 2 on x2
    let w = WeightedDegree::new(&[3, 2]);
    let f = p(&[(1, 2, 0), (-1, 0, 3), (1, 0, 1)]); // x1^2 - x2^3 + x2
    println!("delta(x1) = {}", w.evaluate(&Polynomial::var(&ring, 0)).unwrap());
    println!("delta(x2) = {}", w.evaluate(&Polynomial::var(&ring, 1)).unwrap());
    println!("delta({f}) = {}", w.evaluate(&f).unwrap());

    // the leading form keeps exactly the top-weight terms
    let semi = Semidegree::Weighted(w.clone());
    println!("leading form of {f} is {}", leading_form(&semi, &f).unwrap());

    // multiplicativity: the leading form of a product is the product of the
    // leading forms
    let g = p(&[(1, 1, 0), (2, 0, 1), (1, 0, 0)]);
    let fg = f.mul(&g).unwrap();
    println!(
        "leading form of the product: {}",
        leading_form(&semi, &fg).unwrap()
    );

    // exhaustive + randomized axiom sweep; weighted degrees are semidegrees
    let report = check_degree_like(
        &DegreeFunction::Weighted(w),
        &ring,
        &SampleSpec {
            random_pairs: 500,
            ..SampleSpec::default()
        },
    )
    .unwrap();
    println!(
        "axiom sweep: {} monomial pairs, {} random pairs, degree-like = {}, semidegree = {}",
        report.checked_monomial_pairs,
        report.checked_random_pairs,
        report.degree_like_ok(),
        report.semidegree_ok()
    );
}
