//! Filtrations from verified certificates. An intersection certificate
//! writes each coordinate power as a sum of ideal members plus a low-degree
//! univariate remainder; an integral-dependence certificate for a
//! quasifinite map yields a filtration that preserves the generic fibers,
//! together with the genericity polynomial cutting out the guaranteed ones.
//!
//! Run with `cargo run --example certificate_builds`.

use gradus::poly::{Polynomial, Ring};
use gradus::rational::rational_from_i64 as ri;
use gradus::rees::{
    build_from_intersection_certificate, build_from_quasifinite_certificate,
    IntersectionCertificate, IntersectionEntry, QuasifiniteCertificate, QuasifiniteEntry,
};

fn main() {
    let ring = Ring::new(&["x", "y"]);
    let p = |terms: &[(i64, i64, i64)]| {
        Polynomial::from_terms(&ring, terms.iter().map(|&(c, a, b)| (vec![a, b], ri(c)))).unwrap()
    };
    let x = Polynomial::var(&ring, 0);

    // fibers of (x, y + x^3) over the origin: ideals <x> and <y + x^3>,
    // with y = -x^3 + (y + x^3)
    let q1 = x.clone();
    let q2 = p(&[(1, 0, 1), (1, 3, 0)]);
    let cert = IntersectionCertificate {
        ideal_generators: vec![q1.clone(), q2.clone()],
        entries: vec![
            IntersectionEntry {
                var: 0,
                exponent: 1,
                members: vec![q1.clone(), Polynomial::zero(&ring)],
                remainder: Polynomial::zero(&ring),
            },
            IntersectionEntry {
                var: 1,
                exponent: 1,
                members: vec![p(&[(-1, 3, 0)]), q2.clone()],
                remainder: Polynomial::zero(&ring),
            },
        ],
    };
    let spec = build_from_intersection_certificate(&cert).unwrap();
    let table = spec.table(1);
    println!(
        "intersection certificate verified; level-1 span has dimension {}",
        table.dim(1)
    );

    // the quasifinite map (xy, x^2 y - x + y) with its dependence relations
    let target = Ring::new(&["y1", "y2"]);
    let t = |terms: &[(i64, i64, i64)]| {
        Polynomial::from_terms(&target, terms.iter().map(|&(c, a, b)| (vec![a, b], ri(c))))
            .unwrap()
    };
    let cert = QuasifiniteCertificate {
        components: vec![p(&[(1, 1, 1)]), p(&[(1, 2, 1), (-1, 1, 0), (1, 0, 1)])],
        target_ring: target.clone(),
        entries: vec![
            QuasifiniteEntry {
                var: 0,
                degree: 2,
                coefficients: vec![
                    t(&[(1, 1, 0), (-1, 0, 0)]),
                    t(&[(-1, 0, 1)]),
                    t(&[(1, 1, 0)]),
                ],
            },
            QuasifiniteEntry {
                var: 1,
                degree: 2,
                coefficients: vec![
                    t(&[(1, 0, 0)]),
                    t(&[(-1, 0, 1)]),
                    t(&[(1, 2, 0), (-1, 1, 0)]),
                ],
            },
        ],
    };
    let (spec, genericity) = build_from_quasifinite_certificate(&cert).unwrap();
    println!("quasifinite certificate verified; genericity polynomial: {genericity}");
    for (level, gens) in spec.level_generators() {
        let names: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        println!("  level {level}: {}", names.join(", "));
    }
    let table = spec.table(2);
    println!(
        "graded piece dimensions: dim F1 = {}, dim F2 = {}",
        table.dim(1),
        table.dim(2)
    );
}
