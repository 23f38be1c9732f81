//! Affine Bezout machinery: the degree ratio for weighted and iterated
//! semidegrees, the fiber-size bound it gives, exact fiber counting for
//! two-variable systems by shear and resultant, and the volume cross-check
//! simplex for weighted degrees.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::degfun::{DegfunError, DegreeFunction, DegreeValue};
use crate::iterate::IteratedSemidegree;
use crate::poly::{resultant_bivariate, PolyError, Polynomial};
use crate::polytope::{hull, point_i64, Polytope, PolytopeError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BezoutError {
    #[error("weights must be positive")]
    NonpositiveWeight,
    #[error("invalid iteration step: {0}")]
    InvalidStep(String),
    #[error("component degree must be finite and positive, got {0}")]
    NonpositiveComponentDegree(String),
    #[error("the quasidegree parts disagree on a component: {0}")]
    PartsDisagree(String),
    #[error("fiber counting requires exactly two variables")]
    NotBivariate,
    #[error("no shear made the leading coefficients constant")]
    ShearExhausted,
    #[error("elimination results disagree between the two variable orders")]
    EliminationMismatch,
    #[error("{0} is not a positive common multiple of the weights")]
    NotCommonMultiple(i64),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Degfun(#[from] DegfunError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

/// The ratio D/d^n entering the fiber-size bound; carried as one exact
/// rational because only the ratio is ever used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutData {
    pub degree_ratio: BigRational,
    pub provenance: RatioProvenance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RatioProvenance {
    WeightedFormula,
    IteratedFormula,
    UserSupplied,
}

/// Ratio for a positively weighted degree: `1 / (d_1 ... d_n)`.
pub fn weighted_ratio(weights: &[i64]) -> Result<BezoutData, BezoutError> {
    if weights.iter().any(|&w| w <= 0) {
        return Err(BezoutError::NonpositiveWeight);
    }
    let mut denom = BigInt::one();
    for &w in weights {
        denom *= BigInt::from(w);
    }
    Ok(BezoutData {
        degree_ratio: BigRational::new(BigInt::one(), denom),
        provenance: RatioProvenance::WeightedFormula,
    })
}

/// Ratio for an iterated semidegree: the product of the step degrees over
/// the product of the base weights and the step weights.
pub fn iterated_ratio(d: &IteratedSemidegree) -> Result<BezoutData, BezoutError> {
    let mut numer = BigInt::one();
    let mut denom = BigInt::one();
    for &w in &d.base().weights {
        if w <= 0 {
            return Err(BezoutError::NonpositiveWeight);
        }
        denom *= BigInt::from(w);
    }
    for step in d.steps() {
        if step.w <= 0 {
            return Err(BezoutError::InvalidStep(format!(
                "step weight {} must be positive",
                step.w
            )));
        }
        if step.w >= step.e {
            return Err(BezoutError::InvalidStep(format!(
                "step weight {} does not lower the degree {}",
                step.w, step.e
            )));
        }
        numer *= BigInt::from(step.e);
        denom *= BigInt::from(step.w);
    }
    Ok(BezoutData {
        degree_ratio: BigRational::new(numer, denom),
        provenance: if d.steps().is_empty() {
            RatioProvenance::WeightedFormula
        } else {
            RatioProvenance::IteratedFormula
        },
    })
}

/// The fiber-size bound `ratio * prod delta(f_i)`. For a quasidegree the
/// parts must agree on every component; the agreement is checked.
pub fn bezout_bound(
    data: &BezoutData,
    delta: &DegreeFunction,
    components: &[Polynomial],
) -> Result<BigRational, BezoutError> {
    let mut product = BigRational::one();
    for f in components {
        if let DegreeFunction::Quasidegree(q) = delta {
            let values: Vec<DegreeValue> = q
                .parts()
                .iter()
                .map(|p| p.evaluate(f))
                .collect::<Result<_, _>>()?;
            if values.windows(2).any(|w| w[0] != w[1]) {
                return Err(BezoutError::PartsDisagree(f.to_string()));
            }
        }
        let v = delta.evaluate(f)?;
        match v.finite() {
            Some(d) if d > 0 => product *= BigRational::from_integer(BigInt::from(d)),
            _ => return Err(BezoutError::NonpositiveComponentDegree(f.to_string())),
        }
    }
    Ok(&data.degree_ratio * product)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Count {
    Finite(i64),
    Infinite,
}

impl Serialize for Count {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Count::Finite(n) => s.serialize_i64(*n),
            Count::Infinite => s.serialize_str("infinite"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CountMethod {
    ShearResultant,
}

/// Multiplicity-counted fiber size of a two-variable system, plus the shear
/// provenance.
#[derive(Debug, Clone, Serialize)]
pub struct FiberCountResult {
    pub count: Count,
    pub method: CountMethod,
    pub shear: i64,
    pub cross_check_shear: i64,
}

/// Count the solutions of `f1 = a1, f2 = a2` in the affine plane over the
/// algebraic closure, with multiplicity.
///
/// A shear `x1 <- x1 + lambda*x2` is applied until both polynomials have
/// constant leading coefficient in `x2`; the count is then the degree in
/// `x1` of the resultant eliminating `x2`. The symmetric elimination (with
/// its own shear of `x2`) must agree; a vanishing resultant reports an
/// infinite fiber.
pub fn count_fiber_2d(
    f1: &Polynomial,
    f2: &Polynomial,
    a: (&BigRational, &BigRational),
    seed: u64,
    shear_retries: u32,
) -> Result<FiberCountResult, BezoutError> {
    if f1.n_vars() != 2 || f2.n_vars() != 2 || f1.ring().is_laurent() {
        return Err(BezoutError::NotBivariate);
    }
    let ring = f1.ring();
    let p1 = f1.sub(&Polynomial::constant(ring, a.0.clone()))?;
    let p2 = f2.sub(&Polynomial::constant(ring, a.1.clone()))?;
    // a nonzero constant equation empties the fiber whatever the other
    // equation is; identically zero equations drop out instead
    if (p1.is_constant() && !p1.is_zero()) || (p2.is_constant() && !p2.is_zero()) {
        return Ok(FiberCountResult {
            count: Count::Finite(0),
            method: CountMethod::ShearResultant,
            shear: 0,
            cross_check_shear: 0,
        });
    }
    if p1.is_zero() || p2.is_zero() {
        return Ok(FiberCountResult {
            count: Count::Infinite,
            method: CountMethod::ShearResultant,
            shear: 0,
            cross_check_shear: 0,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (count1, shear1) = eliminate_and_count(&p1, &p2, 1, &mut rng, shear_retries)?;
    let (count2, shear2) = eliminate_and_count(&p1, &p2, 0, &mut rng, shear_retries)?;
    if count1 != count2 {
        return Err(BezoutError::EliminationMismatch);
    }
    Ok(FiberCountResult {
        count: count1,
        method: CountMethod::ShearResultant,
        shear: shear1,
        cross_check_shear: shear2,
    })
}

/// Shear so both polynomials have constant leading coefficient in the
/// eliminated variable, then count via the resultant degree.
fn eliminate_and_count(
    p1: &Polynomial,
    p2: &Polynomial,
    eliminate: usize,
    rng: &mut ChaCha8Rng,
    retries: u32,
) -> Result<(Count, i64), BezoutError> {
    let keep = 1 - eliminate;
    let ring = p1.ring();
    let mut attempt = 0u32;
    loop {
        let lambda: i64 = if attempt == 0 {
            0
        } else {
            rng.gen_range(1..=64)
        };
        attempt += 1;
        // x_keep <- x_keep + lambda * x_eliminate
        let mut images: Vec<Polynomial> = (0..2).map(|i| Polynomial::var(ring, i)).collect();
        if lambda != 0 {
            let mut e = vec![0i64; 2];
            e[eliminate] = 1;
            let shear_term =
                Polynomial::monomial(ring, e, BigRational::from_integer(BigInt::from(lambda)));
            images[keep] = images[keep].add(&shear_term)?;
        }
        let q1 = p1.substitute(&images)?;
        let q2 = p2.substitute(&images)?;
        let ok = |q: &Polynomial| -> bool {
            let d = q.degree_in(eliminate);
            d >= 1 && q.coefficient_of(eliminate, d).is_constant()
        };
        if !(ok(&q1) && ok(&q2)) {
            if attempt > retries + 1 {
                return Err(BezoutError::ShearExhausted);
            }
            continue;
        }
        let res = resultant_bivariate(&q1, &q2, eliminate)?;
        let count = if res.is_zero() {
            Count::Infinite
        } else {
            Count::Finite(res.degree_in(keep).max(0))
        };
        return Ok((count, lambda));
    }
}

/// The cross-check simplex for a positively weighted degree: the region
/// `{x >= 0 : sum x_j d_j <= d}` whose scaled volume reproduces the
/// weighted ratio: `n! vol / d^n = 1/(d_1...d_n)`.
pub fn okounkov_body_weighted(weights: &[i64], d: i64) -> Result<Polytope, BezoutError> {
    if weights.iter().any(|&w| w <= 0) {
        return Err(BezoutError::NonpositiveWeight);
    }
    if weights.len() > 3 {
        return Err(BezoutError::Polytope(PolytopeError::DimensionTooHigh(
            weights.len(),
        )));
    }
    if d <= 0 || weights.iter().any(|&w| d % w != 0) {
        return Err(BezoutError::NotCommonMultiple(d));
    }
    let n = weights.len();
    let mut points = vec![point_i64(&vec![0; n])];
    for (i, &w) in weights.iter().enumerate() {
        let mut corner = vec![0i64; n];
        corner[i] = d / w;
        points.push(point_i64(&corner));
    }
    Ok(hull(&points)?)
}

/// `n! * volume / d^n` for the weighted cross-check simplex.
pub fn okounkov_scaled_volume(body: &Polytope, d: i64) -> BigRational {
    let n = body.ambient_dim() as u32;
    let mut factorial = BigInt::one();
    for k in 2..=n {
        factorial *= BigInt::from(k);
    }
    let mut dn = BigInt::one();
    for _ in 0..n {
        dn *= BigInt::from(d);
    }
    body.volume() * BigRational::from_integer(factorial) / BigRational::from_integer(dn)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;
    use crate::rational::{rational, rational_from_i64 as ri};
    use std::sync::Arc;

    fn xy() -> Arc<Ring> {
        Ring::new(&["x1", "x2"])
    }

    fn poly(ring: &Arc<Ring>, terms: &[(i64, i64, i64)]) -> Polynomial {
        Polynomial::from_terms(ring, terms.iter().map(|&(c, a, b)| (vec![a, b], ri(c)))).unwrap()
    }

    fn cusp_iteration(ring: &Arc<Ring>) -> IteratedSemidegree {
        let h = poly(ring, &[(1, 2, 0), (-1, 0, 3)]);
        IteratedSemidegree::weighted(ring, &[3, 2])
            .unwrap()
            .adjoin(h, 1)
            .unwrap()
    }

    #[test]
    fn ratios() {
        assert_eq!(weighted_ratio(&[1, 1]).unwrap().degree_ratio, ri(1));
        assert_eq!(weighted_ratio(&[3, 2]).unwrap().degree_ratio, rational(1, 6));
        assert_eq!(weighted_ratio(&[2, 2]).unwrap().degree_ratio, rational(1, 4));
        assert_eq!(
            weighted_ratio(&[0, 1]).unwrap_err(),
            BezoutError::NonpositiveWeight
        );
        let r = xy();
        let d = cusp_iteration(&r);
        let data = iterated_ratio(&d).unwrap();
        assert_eq!(data.degree_ratio, ri(1));
        assert_eq!(data.provenance, RatioProvenance::IteratedFormula);
        let flat = IteratedSemidegree::weighted(&r, &[3, 2]).unwrap();
        assert_eq!(iterated_ratio(&flat).unwrap().degree_ratio, rational(1, 6));
    }

    #[test]
    fn synthetic_two_step_ratio() {
        // e = (6, 4), w = (1, 2), base (3, 2): 6*4 / (3*2*1*2) = 2
        let r = xy();
        let h1 = poly(&r, &[(1, 2, 0), (-1, 0, 3)]); // e1 = 6
        let d = IteratedSemidegree::weighted(&r, &[3, 2])
            .unwrap()
            .adjoin(h1, 1)
            .unwrap();
        // after the first step x2^2 has degree 4; adjoin it (asserted) at 2
        let h2 = poly(&r, &[(1, 0, 2)]);
        let d = d.adjoin_asserted(h2, 2).unwrap();
        let steps: Vec<(i64, i64)> = d.steps().iter().map(|s| (s.e, s.w)).collect();
        assert_eq!(steps, vec![(6, 1), (4, 2)]);
        assert_eq!(iterated_ratio(&d).unwrap().degree_ratio, ri(2));
    }

    #[test]
    fn bounds_for_the_fiber_family() {
        let r = xy();
        let h = poly(&r, &[(1, 2, 0), (-1, 0, 3)]);
        let d = cusp_iteration(&r);
        let delta = DegreeFunction::Iterated(d.clone());
        for k in 1..=3u32 {
            let f1 = Polynomial::var(&r, 0).add(&h.pow(2)).unwrap();
            let f2 = h.pow(k);
            let bound = bezout_bound(&iterated_ratio(&d).unwrap(), &delta, &[f1.clone(), f2.clone()])
                .unwrap();
            assert_eq!(bound, ri(3 * k as i64));
            // the plain weighted bound is four times as large
            let weighted = DegreeFunction::Weighted(crate::degfun::WeightedDegree::new(&[3, 2]));
            let wbound =
                bezout_bound(&weighted_ratio(&[3, 2]).unwrap(), &weighted, &[f1, f2]).unwrap();
            assert_eq!(wbound, ri(12 * k as i64));
        }
    }

    #[test]
    fn classical_bezout_bound() {
        let r = xy();
        let delta = DegreeFunction::Weighted(crate::degfun::WeightedDegree::new(&[1, 1]));
        let data = weighted_ratio(&[1, 1]).unwrap();
        let f1 = poly(&r, &[(1, 2, 0), (1, 0, 1)]); // degree 2
        let f2 = poly(&r, &[(1, 0, 3), (-1, 1, 0)]); // degree 3
        assert_eq!(bezout_bound(&data, &delta, &[f1, f2]).unwrap(), ri(6));
    }

    #[test]
    fn fiber_counts_by_resultant() {
        let r = xy();
        let zero = ri(0);
        // identity map: single point
        let f1 = Polynomial::var(&r, 0);
        let f2 = Polynomial::var(&r, 1);
        let res = count_fiber_2d(&f1, &f2, (&zero, &zero), 7, 3).unwrap();
        assert_eq!(res.count, Count::Finite(1));
        // double cover (x1^2, x2) at (1, 0)
        let g1 = poly(&r, &[(1, 2, 0)]);
        let one = ri(1);
        let res = count_fiber_2d(&g1, &f2, (&one, &zero), 7, 3).unwrap();
        assert_eq!(res.count, Count::Finite(2));
        // the cusp family at k = 1, a = (0,0): multiplicity 3 at the origin
        let h = poly(&r, &[(1, 2, 0), (-1, 0, 3)]);
        let c1 = Polynomial::var(&r, 0).add(&h.pow(2)).unwrap();
        let res = count_fiber_2d(&c1, &h, (&zero, &zero), 7, 3).unwrap();
        assert_eq!(res.count, Count::Finite(3));
    }

    #[test]
    fn infinite_fibers_are_detected() {
        let r = xy();
        let f = poly(&r, &[(1, 1, 0), (1, 0, 1)]);
        let zero = ri(0);
        let res = count_fiber_2d(&f, &f, (&zero, &zero), 7, 3).unwrap();
        assert_eq!(res.count, Count::Infinite);
    }

    #[test]
    fn degenerate_constant_equations() {
        let r = xy();
        let zero = ri(0);
        let one = ri(1);
        let f = poly(&r, &[(1, 1, 0), (1, 0, 1)]);
        let c = Polynomial::constant_i64(&r, 1);
        // 1 = 0 empties the fiber even when the other equation vanishes
        let res = count_fiber_2d(&c, &f, (&zero, &zero), 7, 3).unwrap();
        assert_eq!(res.count, Count::Finite(0));
        let vanishing = Polynomial::constant_i64(&r, 1);
        let res = count_fiber_2d(&vanishing, &c, (&one, &zero), 7, 3).unwrap();
        assert_eq!(res.count, Count::Finite(0));
        // both equations identically zero: the whole plane
        let res = count_fiber_2d(&c, &c, (&one, &one), 7, 3).unwrap();
        assert_eq!(res.count, Count::Infinite);
        // one identically zero, the other cuts a curve
        let res = count_fiber_2d(&c, &f, (&one, &zero), 7, 3).unwrap();
        assert_eq!(res.count, Count::Infinite);
    }

    #[test]
    fn shear_robustness() {
        let r = xy();
        let h = poly(&r, &[(1, 2, 0), (-1, 0, 3)]);
        let f1 = Polynomial::var(&r, 0).add(&h.pow(2)).unwrap();
        let f2 = h.pow(2);
        let a0 = rational(1, 3);
        let a1 = rational(-2, 5);
        let mut counts = Vec::new();
        for seed in [11u64, 23, 37] {
            let res = count_fiber_2d(&f1, &f2, (&a0, &a1), seed, 5).unwrap();
            counts.push(res.count.clone());
        }
        assert!(counts.windows(2).all(|w| w[0] == w[1]));
        assert_eq!(counts[0], Count::Finite(6));
    }

    #[test]
    fn okounkov_simplex_matches_weighted_ratio() {
        let body = okounkov_body_weighted(&[3, 2], 6).unwrap();
        // legs 2 and 3
        assert_eq!(body.volume(), ri(3));
        assert_eq!(okounkov_scaled_volume(&body, 6), rational(1, 6));
        let unit = okounkov_body_weighted(&[1, 1], 1).unwrap();
        assert_eq!(okounkov_scaled_volume(&unit, 1), ri(1));
        let even = okounkov_body_weighted(&[2, 2], 2).unwrap();
        assert_eq!(okounkov_scaled_volume(&even, 2), rational(1, 4));
        assert_eq!(
            okounkov_body_weighted(&[3, 2], 5).unwrap_err(),
            BezoutError::NotCommonMultiple(5)
        );
    }
}
