//! The fiber-size bound and its equality case: for the iterated semidegree
//! built on the cusp, the bound on the family (x1 + h^2, h^k) is 3k and
//! every fiber attains it, far below the 12k the plain weighted degree
//! gives. The scaled simplex volume cross-checks the weighted ratio.
//!
//! Run with `cargo run --example bezout_fibers`.

use gradus::bezout::{
    bezout_bound, count_fiber_2d, iterated_ratio, okounkov_body_weighted, okounkov_scaled_volume,
    weighted_ratio,
};
use gradus::degfun::DegreeFunction;
use gradus::iterate::IteratedSemidegree;
use gradus::poly::{Polynomial, Ring};
use gradus::rational::{format_rational, rational, rational_from_i64 as ri};
use gradus::WeightedDegree;

fn main() {
    let ring = Ring::new(&["x1", "x2"]);
    let h = Polynomial::from_terms(
        &ring,
        [(vec![2, 0], ri(1)), (vec![0, 3], ri(-1))],
    )
    .unwrap();

    let d = IteratedSemidegree::weighted(&ring, &[3, 2])
        .unwrap()
        .adjoin(h.clone(), 1)
        .unwrap();
    let iterated = DegreeFunction::Iterated(d.clone());
    let weighted = DegreeFunction::Weighted(WeightedDegree::new(&[3, 2]));

    println!(
        "degree ratios: iterated = {}, weighted = {}",
        format_rational(&iterated_ratio(&d).unwrap().degree_ratio),
        format_rational(&weighted_ratio(&[3, 2]).unwrap().degree_ratio),
    );

    for k in 1..=3u32 {
        let f1 = Polynomial::var(&ring, 0).add(&h.pow(2)).unwrap();
        let f2 = h.pow(k);
        let tight = bezout_bound(
            &iterated_ratio(&d).unwrap(),
            &iterated,
            &[f1.clone(), f2.clone()],
        )
        .unwrap();
        let loose = bezout_bound(
            &weighted_ratio(&[3, 2]).unwrap(),
            &weighted,
            &[f1.clone(), f2.clone()],
        )
        .unwrap();
        let points = [
            (ri(0), ri(0)),
            (rational(1, 2), ri(-3)),
            (ri(5), rational(2, 7)),
        ];
        print!(
            "k = {k}: iterated bound {}, weighted bound {}, counts:",
            format_rational(&tight),
            format_rational(&loose)
        );
        for (a0, a1) in &points {
            let res = count_fiber_2d(&f1, &f2, (a0, a1), 7, 5).unwrap();
            print!(" {:?}", res.count);
        }
        println!();
    }

    // the simplex {x >= 0 : 3 x1 + 2 x2 <= 6} reproduces the weighted ratio
    let body = okounkov_body_weighted(&[3, 2], 6).unwrap();
    println!(
        "cross-check simplex: volume {}, n! vol / d^n = {}",
        format_rational(&body.volume()),
        format_rational(&okounkov_scaled_volume(&body, 6))
    );
}
