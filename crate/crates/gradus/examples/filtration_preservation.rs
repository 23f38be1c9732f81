//! Completions that keep fibers away from infinity: the filtration adapted
//! to the map (x, y + x^3) certifies every tested fiber, while the mixed
//! monomial filtration F1 = <1, x, y, xy, x^2 y^2> certifies identity-map
//! fibers exactly over the coordinate axes.
//!
//! Run with `cargo run --example filtration_preservation`.

use gradus::poly::{Polynomial, Ring};
use gradus::rational::rational_from_i64 as ri;
use gradus::rees::{
    filtration_degree, preserves_at_infinity, FiltrationSpec, PreservationBounds,
};

fn main() {
    let ring = Ring::new(&["x", "y"]);
    let p = |terms: &[(i64, i64, i64)]| {
        Polynomial::from_terms(&ring, terms.iter().map(|&(c, a, b)| (vec![a, b], ri(c)))).unwrap()
    };
    let x = Polynomial::var(&ring, 0);
    let y = Polynomial::var(&ring, 1);

    // F1 = <1, x, y, x^3>, closed under powers
    let adapted =
        FiltrationSpec::powers_of_level_one(&ring, vec![x.clone(), y.clone(), p(&[(1, 3, 0)])])
            .unwrap();
    for (name, f) in [("x^3", p(&[(1, 3, 0)])), ("x^2", p(&[(1, 2, 0)])), ("y", y.clone())] {
        println!(
            "degree of {name} in the adapted filtration: {}",
            filtration_degree(&adapted, &f, 4).unwrap()
        );
    }
    let bounds = PreservationBounds { d_max: 4, n_max: 4 };
    for (a0, a1) in [(0, 0), (2, -1), (5, 7)] {
        let h1 = x.sub(&Polynomial::constant_i64(&ring, a0)).unwrap();
        let h2 = p(&[(1, 0, 1), (1, 3, 0)])
            .sub(&Polynomial::constant_i64(&ring, a1))
            .unwrap();
        let report = preserves_at_infinity(&adapted, &[h1, h2], bounds).unwrap();
        println!("fiber of (x, y + x^3) over ({a0}, {a1}): {:?}", report.outcome);
    }

    // F1 = <1, x, y, xy, x^2 y^2>: preservation depends on the point
    let mixed = FiltrationSpec::powers_of_level_one(
        &ring,
        vec![x.clone(), y.clone(), p(&[(1, 1, 1)]), p(&[(1, 2, 2)])],
    )
    .unwrap();
    let bounds = PreservationBounds { d_max: 8, n_max: 8 };
    for (a0, a1) in [(0, 1), (1, 0), (1, 1)] {
        let h1 = x.sub(&Polynomial::constant_i64(&ring, a0)).unwrap();
        let h2 = y.sub(&Polynomial::constant_i64(&ring, a1)).unwrap();
        let report = preserves_at_infinity(&mixed, &[h1, h2], bounds).unwrap();
        println!("identity fiber over ({a0}, {a1}): {:?}", report.outcome);
        for g in &report.generators {
            if let Some(n) = g.power {
                println!("  generator {} certified at power {n}", g.generator);
            } else {
                println!("  generator {}: no certifying power within bounds", g.generator);
            }
        }
    }
}
