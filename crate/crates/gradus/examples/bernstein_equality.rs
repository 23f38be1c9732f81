//! The sparse root-count pipeline: mixed-volume bound, directional face
//! systems, the exact degeneracy check over the edge normals of the summed
//! Newton polygon, and the equality verdict.
//!
//! Run with `cargo run --example bernstein_equality`.

use gradus::bernstein::{
    bkk_bound, check_degeneracy, equality_verdict, face_directions, face_system, SparseSystem,
};
use gradus::poly::{Polynomial, Ring};
use gradus::rational::{format_rational, rational_from_i64 as ri};

fn main() {
    let ring = Ring::laurent(&["x1", "x2"]);
    let p = |terms: &[(i64, i64, i64)]| {
        Polynomial::from_terms(&ring, terms.iter().map(|&(c, a, b)| (vec![a, b], ri(c)))).unwrap()
    };

    // a generic bilinear pair: bound 2, attained
    let generic = SparseSystem::new(vec![
        p(&[(1, 0, 0), (2, 1, 0), (3, 0, 1), (5, 1, 1)]),
        p(&[(7, 0, 0), (1, 1, 0), (4, 0, 1), (2, 1, 1)]),
    ])
    .unwrap();
    println!("bilinear bound: {}", format_rational(&bkk_bound(&generic).unwrap()));
    let dirs = face_directions(&generic).unwrap();
    println!("candidate directions: {dirs:?}");
    for alpha in &dirs {
        let fs = face_system(&generic, alpha).unwrap();
        let polys: Vec<String> = fs.polys.iter().map(|f| f.to_string()).collect();
        println!("  faces in {alpha:?}: {}", polys.join(" | "));
    }
    let verdict = equality_verdict(&generic).unwrap();
    println!(
        "verdict: bound {}, count {:?}, consistent {}
  {}",
        verdict.bound, verdict.count, verdict.consistent, verdict.interpretation
    );

    // identical leading faces cost a root: bound 1, count 0
    let degenerate = SparseSystem::new(vec![
        p(&[(1, 0, 0), (1, 1, 0), (1, 0, 1)]),
        p(&[(2, 0, 0), (1, 1, 0), (1, 0, 1)]),
    ])
    .unwrap();
    println!("\nshifted lines: {:?}", check_degeneracy(&degenerate).unwrap());
    let verdict = equality_verdict(&degenerate).unwrap();
    println!(
        "verdict: bound {}, count {:?}, consistent {}",
        verdict.bound, verdict.count, verdict.consistent
    );

    // parallel segment supports: mixed volume zero, no torus roots
    let parallel = SparseSystem::new(vec![
        p(&[(1, 0, 0), (1, 1, 1)]),
        p(&[(1, 0, 0), (2, 1, 1)]),
    ])
    .unwrap();
    let verdict = equality_verdict(&parallel).unwrap();
    println!(
        "\nparallel supports: bound {}, count {:?}, consistent {}",
        verdict.bound, verdict.count, verdict.consistent
    );
}
