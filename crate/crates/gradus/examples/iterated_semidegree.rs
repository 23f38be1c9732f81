//! Building a semidegree by iteration: adjoin the cusp x1^2 - x2^3 to the
//! (3, 2)-weighted degree at the lowered weight 1, evaluate through the
//! h-adic expansion, and print the graded-ring presentation.
//!
//! Run with `cargo run --example iterated_semidegree`.

use gradus::iterate::{f_adic_expansion, primality_check, rees_presentation, IteratedSemidegree};
use gradus::poly::{MonomialOrder, Polynomial, Ring};
use gradus::rational::rational_from_i64 as ri;
use gradus::WeightedDegree;

fn main() {
    let ring = Ring::new(&["x1", "x2"]);
    let p = |terms: &[(i64, i64, i64)]| {
        Polynomial::from_terms(&ring, terms.iter().map(|&(c, a, b)| (vec![a, b], ri(c)))).unwrap()
    };
    let h = p(&[(1, 2, 0), (-1, 0, 3)]); // x1^2 - x2^3

    // the step element must be prime for the base degree: its leading form
    // is irreducible
    let base = WeightedDegree::new(&[3, 2]);
    println!("primality of {h}: {:?}", primality_check(&base, &h).unwrap());
    let node = p(&[(1, 2, 0), (-1, 0, 4)]);
    let base21 = WeightedDegree::new(&[2, 1]);
    println!(
        "primality of {node} under weights (2,1): {:?} (it splits)",
        primality_check(&base21, &node).unwrap()
    );

    let d = IteratedSemidegree::weighted(&ring, &[3, 2])
        .unwrap()
        .adjoin(h.clone(), 1)
        .unwrap();

    // generator degrees after the iteration
    for (name, f) in [
        ("x1", Polynomial::var(&ring, 0)),
        ("x2", Polynomial::var(&ring, 1)),
        ("h", h.clone()),
        ("h^2 x2", h.pow(2).mul(&Polynomial::var(&ring, 1)).unwrap()),
    ] {
        println!("delta~({name}) = {}", d.evaluate(&f).unwrap());
    }

    // the expansion under the base-graded order drives the evaluation
    let ord = MonomialOrder::graded_i64(&[3, 2]);
    let coeffs = f_adic_expansion(&p(&[(1, 2, 0)]), &h, &ord).unwrap();
    println!(
        "x1^2 = {} + ({}) * h",
        coeffs[0],
        coeffs.get(1).map(|c| c.to_string()).unwrap_or_default()
    );

    // the graded ring is a hypersurface in a weighted projective space
    let pres = rees_presentation(&d).unwrap();
    let ambient: Vec<String> = pres
        .ambient
        .iter()
        .map(|(n, w)| format!("{n} (weight {w})"))
        .collect();
    println!("ambient: {}", ambient.join(", "));
    for rel in &pres.relations {
        println!("relation: {rel} = 0");
    }
}
