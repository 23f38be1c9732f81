//! The quasidegree determined by a rational polytope with the origin
//! inside: one weighted part per facet, value k * inf{r : alpha in r*P} on
//! monomials, cross-checked against a brute-force scaling oracle.
//!
//! Run with `cargo run --example polytope_quasidegree`.

use gradus::polytope::{hull, laurent_ring_for, point_i64, polytope_quasidegree};
use gradus::poly::Polynomial;
use gradus::rational::rational_from_i64 as ri;

fn main() {
    let square = hull(&[
        point_i64(&[1, 1]),
        point_i64(&[1, -1]),
        point_i64(&[-1, 1]),
        point_i64(&[-1, -1]),
    ])
    .unwrap();
    let triangle = hull(&[
        point_i64(&[-1, -1]),
        point_i64(&[2, -1]),
        point_i64(&[-1, 2]),
    ])
    .unwrap();

    for (name, p) in [("square [-1,1]^2", &square), ("triangle", &triangle)] {
        println!("{name}:");
        for f in p.facets() {
            let normal: Vec<String> = f.normal.iter().map(|c| c.to_string()).collect();
            println!(
                "  facet <({}), x> <= {}",
                normal.join(", "),
                gradus::rational::format_rational(&f.offset)
            );
        }
        let qd = polytope_quasidegree(p).unwrap();
        println!("  scale k = {} ({} facet parts)", qd.k, qd.quasidegree().parts().len());
        let ring = laurent_ring_for(p);
        for alpha in [[2i64, 1], [-1, -1], [1, 1], [0, 3]] {
            let mono = Polynomial::monomial(&ring, alpha.to_vec(), ri(1));
            let value = qd.evaluate(&mono).unwrap();
            let oracle = qd.scaling_oracle(&alpha);
            println!(
                "  delta({mono}) = {value}, scaling oracle = {oracle}, agree = {}",
                value == gradus::degfun::DegreeValue::Finite(oracle)
            );
        }
    }
}
