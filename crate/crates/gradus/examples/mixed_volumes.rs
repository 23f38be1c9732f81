//! Exact hulls, Minkowski sums and mixed volumes in the root-count
//! normalization: MV(P, ..., P) = n! vol(P), and MV of two scaled simplices
//! is the product of the scales.
//!
//! Run with `cargo run --example mixed_volumes`.

use gradus::polytope::{hull, minkowski_sum, mixed_volume, point_i64};
use gradus::rational::format_rational;

fn main() {
    let simplex = |d: i64| {
        hull(&[point_i64(&[0, 0]), point_i64(&[d, 0]), point_i64(&[0, d])]).unwrap()
    };

    let t1 = simplex(1);
    println!(
        "unit simplex: volume {}, {} facets",
        format_rational(&t1.volume()),
        t1.facets().len()
    );

    let double = minkowski_sum(&t1, &t1).unwrap();
    println!(
        "simplex + simplex: volume {} (doubling scales area by 4)",
        format_rational(&double.volume())
    );

    for d1 in 1..=3i64 {
        for d2 in 1..=3i64 {
            let mv = mixed_volume(&[simplex(d1), simplex(d2)]).unwrap();
            println!("MV({d1}-simplex, {d2}-simplex) = {}", format_rational(&mv));
        }
    }

    // the normalization identity in dimension 3
    let tetra = hull(&[
        point_i64(&[0, 0, 0]),
        point_i64(&[1, 0, 0]),
        point_i64(&[0, 1, 0]),
        point_i64(&[0, 0, 1]),
    ])
    .unwrap();
    println!(
        "tetrahedron: volume {}, MV(T, T, T) = {}",
        format_rational(&tetra.volume()),
        format_rational(&mixed_volume(&[tetra.clone(), tetra.clone(), tetra.clone()]).unwrap())
    );

    // directional faces use the minimizing convention
    let square = hull(&[
        point_i64(&[1, 1]),
        point_i64(&[1, -1]),
        point_i64(&[-1, 1]),
        point_i64(&[-1, -1]),
    ])
    .unwrap();
    let top = square.face_in_direction(&[0, -1]).unwrap();
    println!(
        "face of the square minimizing <(0,-1), .>: {} vertices with x2 = 1",
        top.len()
    );
}
