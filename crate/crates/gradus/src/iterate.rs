//! Iterated semidegrees: start from a positively weighted degree and
//! repeatedly adjoin an element `h` with a lowered weight `w`, evaluating by
//! greedy h-adic expansion under the base-graded order.
//!
//! The expansion value is validated against the semidegree axioms by the
//! callers (see the axiom checkers); a violation is surfaced as a witness
//! rather than silently trusted.

use std::sync::Arc;

use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::degfun::{DegfunError, DegreeValue, WeightedDegree};
use crate::poly::{Exponents, MonomialOrder, PolyError, Polynomial, Ring};
use crate::univar::{is_irreducible_over_q, UniPoly, UnivarError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IterateError {
    #[error("expansion divisor must be nonconstant")]
    ConstantDivisor,
    #[error("polynomial does not live in this semidegree's ring")]
    RingMismatch,
    #[error("step weight {w} does not lower the current degree {e}")]
    WeightNotLowered { w: i64, e: i64 },
    #[error("step element is not prime with respect to the current semidegree")]
    StepNotPrime,
    #[error("base weights must be positive")]
    NonpositiveBaseWeight,
    #[error("presentation requires positive step weights, got {0}")]
    NonpositiveStepWeight(i64),
    #[error("the input does not have the shape of an iterated semidegree: {0}")]
    UnsupportedShape(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Verification status of one iteration step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StepCheck {
    /// leading form checked prime (bivariate weighted-homogeneous case)
    Prime,
    /// supplied by the caller without a check
    AssertedPrime,
    /// not checkable here (three or more variables, or later steps)
    Undetermined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primality {
    Prime,
    NotPrime,
    Undetermined,
}

#[derive(Debug, Clone)]
pub struct IteratedStep {
    pub h: Polynomial,
    pub w: i64,
    /// degree of `h` under the semidegree before this step
    pub e: i64,
    pub check: StepCheck,
}

/// A semidegree built from a positively weighted degree by adjoining prime
/// elements with lowered weights. Evaluation expands in powers of the last
/// adjoined element and recurses on the coefficients.
#[derive(Debug, Clone)]
pub struct IteratedSemidegree {
    ring: Arc<Ring>,
    base: WeightedDegree,
    steps: Vec<IteratedStep>,
    order: MonomialOrder,
}

impl IteratedSemidegree {
    pub fn weighted(ring: &Arc<Ring>, weights: &[i64]) -> Result<Self, IterateError> {
        if ring.is_laurent() {
            return Err(IterateError::RingMismatch);
        }
        assert_eq!(weights.len(), ring.n_vars());
        if weights.iter().any(|&w| w <= 0) {
            return Err(IterateError::NonpositiveBaseWeight);
        }
        Ok(IteratedSemidegree {
            ring: ring.clone(),
            base: WeightedDegree::new(weights),
            steps: Vec::new(),
            order: MonomialOrder::graded_i64(weights),
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn base(&self) -> &WeightedDegree {
        &self.base
    }

    pub fn steps(&self) -> &[IteratedStep] {
        &self.steps
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn n_vars(&self) -> usize {
        self.ring.n_vars()
    }

    pub fn describe(&self) -> String {
        let steps: Vec<String> = self
            .steps
            .iter()
            .map(|s| format!("({}, w={})", s.h, s.w))
            .collect();
        format!(
            "iterated base{:?} steps [{}]",
            self.base.weights,
            steps.join(", ")
        )
    }

    /// Adjoin a step, checking `w < e` and running the primality check when
    /// it applies. A step whose leading form is provably not prime is
    /// rejected; use `adjoin_asserted` to override.
    pub fn adjoin(self, h: Polynomial, w: i64) -> Result<Self, IterateError> {
        self.adjoin_inner(h, w, false)
    }

    /// Adjoin without rejecting on a failed primality check; the step is
    /// recorded as asserted by the caller.
    pub fn adjoin_asserted(self, h: Polynomial, w: i64) -> Result<Self, IterateError> {
        self.adjoin_inner(h, w, true)
    }

    fn adjoin_inner(mut self, h: Polynomial, w: i64, asserted: bool) -> Result<Self, IterateError> {
        if h.ring() != &self.ring {
            return Err(IterateError::RingMismatch);
        }
        if h.is_constant() {
            return Err(IterateError::ConstantDivisor);
        }
        let e = self
            .evaluate(&h)
            .map_err(|_| IterateError::RingMismatch)?
            .finite()
            .expect("nonzero polynomial");
        if w >= e {
            return Err(IterateError::WeightNotLowered { w, e });
        }
        let check = if asserted {
            StepCheck::AssertedPrime
        } else if self.steps.is_empty() {
            match primality_check(&self.base, &h)? {
                Primality::Prime => StepCheck::Prime,
                Primality::NotPrime => return Err(IterateError::StepNotPrime),
                Primality::Undetermined => StepCheck::Undetermined,
            }
        } else {
            StepCheck::Undetermined
        };
        self.steps.push(IteratedStep { h, w, e, check });
        Ok(self)
    }

    pub fn evaluate(&self, f: &Polynomial) -> Result<DegreeValue, DegfunError> {
        if f.ring() != &self.ring {
            return Err(DegfunError::RingMismatch);
        }
        Ok(self.evaluate_rec(f, self.steps.len()))
    }

    fn evaluate_rec(&self, f: &Polynomial, k: usize) -> DegreeValue {
        if f.is_zero() {
            return DegreeValue::NegInfinity;
        }
        if k == 0 {
            return self.base.evaluate(f).expect("ring checked");
        }
        let step = &self.steps[k - 1];
        let coeffs = f_adic_expansion(f, &step.h, &self.order).expect("nonconstant step");
        let mut best = DegreeValue::NegInfinity;
        for (i, a) in coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let v = self.evaluate_rec(a, k - 1).add_i64(step.w * i as i64);
            best = best.max(v);
        }
        best
    }
}

/// Unique expansion `f = sum a_i h^i` with every `a_i` fully reduced: no
/// term of `a_i` is divisible by the leading monomial of `h` under `ord`.
/// Computed by repeated division with remainder.
pub fn f_adic_expansion(
    f: &Polynomial,
    h: &Polynomial,
    ord: &MonomialOrder,
) -> Result<Vec<Polynomial>, IterateError> {
    if h.is_constant() {
        return Err(IterateError::ConstantDivisor);
    }
    let mut coeffs = Vec::new();
    let mut current = f.clone();
    while !current.is_zero() {
        let (q, r) = current.divide_with_remainder(h, ord)?;
        coeffs.push(r);
        current = q;
    }
    if coeffs.is_empty() {
        coeffs.push(Polynomial::zero(f.ring()));
    }
    Ok(coeffs)
}

/// Decide whether `h` is prime with respect to a pure weighted degree on two
/// variables: take the leading weighted-homogeneous form, strip monomial
/// content, dehomogenize along the weight lattice and test irreducibility
/// over Q. Anything else is `Undetermined`.
pub fn primality_check(
    base: &WeightedDegree,
    h: &Polynomial,
) -> Result<Primality, IterateError> {
    if base.n_vars() != 2 || h.n_vars() != 2 {
        return Ok(Primality::Undetermined);
    }
    if h.is_zero() || h.is_constant() {
        return Ok(Primality::NotPrime);
    }
    let lead = base.leading_form(h).map_err(|_| IterateError::RingMismatch)?;
    let (stripped, content) = lead.strip_monomial_content();
    let content_total: i64 = content.iter().sum();
    if stripped.is_constant() {
        // the leading form is a monomial: prime exactly for a single variable
        return Ok(if content_total == 1 {
            Primality::Prime
        } else {
            Primality::NotPrime
        });
    }
    if content_total > 0 {
        // variable factor times a nonconstant form
        return Ok(Primality::NotPrime);
    }
    let ghat = dehomogenize_on_weight_line(&stripped, &base.weights);
    match is_irreducible_over_q(&ghat) {
        Ok(true) => Ok(Primality::Prime),
        Ok(false) => Ok(Primality::NotPrime),
        Err(UnivarError::DegreeTooHigh(_)) | Err(UnivarError::Undecided) => {
            Ok(Primality::Undetermined)
        }
    }
}

/// A content-free weighted-homogeneous bivariate form has its support on a
/// lattice line; read it off as a univariate polynomial in the line
/// parameter.
fn dehomogenize_on_weight_line(g: &Polynomial, weights: &[i64]) -> UniPoly {
    let d1 = weights[0];
    let d2 = weights[1];
    let gcd = num_integer::gcd(d1, d2);
    let step_a = d2 / gcd;
    let a_min = g.terms().map(|(e, _)| e[0]).min().expect("nonzero form");
    let degree = g
        .terms()
        .map(|(e, _)| (e[0] - a_min) / step_a)
        .max()
        .unwrap_or(0);
    let mut coeffs = vec![BigRational::from_integer(0.into()); degree as usize + 1];
    for (e, c) in g.terms() {
        let offset = e[0] - a_min;
        debug_assert_eq!(offset % step_a, 0, "support must lie on the weight lattice line");
        coeffs[(offset / step_a) as usize] = c.clone();
    }
    UniPoly::new(coeffs)
}

// ---------------------------------------------------------------------------
// Weighted projective presentation of the graded ring.

/// Ambient weighted variables and hypersurface relations presenting the
/// graded ring of an iterated semidegree: one relation
/// `h~_j - x0^(e_j - w_j) s_j` per step, inside the weighted polynomial ring
/// on `x0, x_1..x_n, s_1..s_k` with weights `1, d_i, w_j`.
#[derive(Debug, Clone)]
pub struct PresentationReport {
    pub ambient: Vec<(String, i64)>,
    pub relations: Vec<Polynomial>,
    pub warnings: Vec<String>,
}

pub fn rees_presentation(d: &IteratedSemidegree) -> Result<PresentationReport, IterateError> {
    for s in d.steps() {
        if s.w <= 0 {
            return Err(IterateError::NonpositiveStepWeight(s.w));
        }
    }
    let n = d.n_vars();
    let k = d.steps().len();
    let mut names: Vec<String> = vec!["x0".to_string()];
    names.extend(d.ring().var_names().iter().cloned());
    names.extend((1..=k).map(|j| format!("s{j}")));
    let mut weights: Vec<i64> = vec![1];
    weights.extend(d.base().weights.iter().copied());
    weights.extend(d.steps().iter().map(|s| s.w));
    let pres_ring = Ring::from_names(names.clone(), false);

    let mut warnings = Vec::new();
    for (j, s) in d.steps().iter().enumerate() {
        if s.check != StepCheck::Prime {
            warnings.push(format!(
                "step {} ({}) primality is {:?}; the presentation assumes it",
                j + 1,
                s.h,
                s.check
            ));
        }
    }

    let mut relations = Vec::new();
    for (j, step) in d.steps().iter().enumerate() {
        // rewrite h_j over the earlier steps, then homogenize to weight e_j
        let rewritten = rewrite_over_steps(&step.h, d, j, &pres_ring, n)?;
        let homog = homogenize(&rewritten, &weights, step.e, &pres_ring);
        let mut s_exp = vec![0i64; pres_ring.n_vars()];
        s_exp[0] = step.e - step.w;
        s_exp[1 + n + j] = 1;
        let s_term = Polynomial::monomial(&pres_ring, s_exp, BigRational::from_integer(1.into()));
        relations.push(homog.sub(&s_term)?);
    }
    Ok(PresentationReport {
        ambient: names.into_iter().zip(weights).collect(),
        relations,
        warnings,
    })
}

/// Express `f` in the presentation ring with powers of the first `upto`
/// step elements replaced by the matching `s` variables.
fn rewrite_over_steps(
    f: &Polynomial,
    d: &IteratedSemidegree,
    upto: usize,
    pres_ring: &Arc<Ring>,
    n: usize,
) -> Result<Polynomial, IterateError> {
    if upto == 0 {
        return Ok(embed_x(f, pres_ring, n));
    }
    let step = &d.steps()[upto - 1];
    let coeffs = f_adic_expansion(f, &step.h, d.order())?;
    let mut out = Polynomial::zero(pres_ring);
    for (i, a) in coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let base = rewrite_over_steps(a, d, upto - 1, pres_ring, n)?;
        let mut s_exp = vec![0i64; pres_ring.n_vars()];
        s_exp[1 + n + (upto - 1)] = i as i64;
        let s_pow = Polynomial::monomial(pres_ring, s_exp, BigRational::from_integer(1.into()));
        out = out.add(&base.mul(&s_pow)?)?;
    }
    Ok(out)
}

fn embed_x(f: &Polynomial, pres_ring: &Arc<Ring>, _n: usize) -> Polynomial {
    let terms: Vec<(Exponents, BigRational)> = f
        .terms()
        .map(|(e, c)| {
            let mut e2 = vec![0i64; pres_ring.n_vars()];
            for (i, &x) in e.iter().enumerate() {
                e2[1 + i] = x;
            }
            (e2, c.clone())
        })
        .collect();
    Polynomial::from_terms(pres_ring, terms).expect("embedding preserves validity")
}

fn homogenize(f: &Polynomial, weights: &[i64], target: i64, pres_ring: &Arc<Ring>) -> Polynomial {
    let terms: Vec<(Exponents, BigRational)> = f
        .terms()
        .map(|(e, c)| {
            let w: i64 = e.iter().zip(weights).map(|(a, b)| a * b).sum();
            debug_assert!(w <= target, "term weight exceeds homogenization target");
            let mut e2 = e.clone();
            e2[0] += target - w;
            (e2, c.clone())
        })
        .collect();
    Polynomial::from_terms(pres_ring, terms).expect("homogenization preserves validity")
}

// ---------------------------------------------------------------------------

/// Try to view a finitely generated filtration as an iterated semidegree:
/// variables at their levels give the base weights, nonlinear generators
/// become candidate steps. Fails with the reason when the shape does not
/// match (variable missing a level, or a step that is not prime).
pub fn iterated_from_filtration(
    spec: &crate::rees::FiltrationSpec,
) -> Result<IteratedSemidegree, IterateError> {
    let ring = spec.ring().clone();
    let n = ring.n_vars();
    let mut weights: Vec<Option<i64>> = vec![None; n];
    let mut candidates: Vec<(Polynomial, i64)> = Vec::new();
    for (&level, gens) in spec.level_generators() {
        for g in gens {
            if g.is_constant() {
                continue;
            }
            if let Some(var) = single_variable_of(g) {
                if weights[var].replace(level).is_some() {
                    return Err(IterateError::UnsupportedShape(format!(
                        "variable {} is generated at two levels",
                        ring.var_names()[var]
                    )));
                }
            } else {
                candidates.push((g.clone(), level));
            }
        }
    }
    let weights: Vec<i64> = weights
        .into_iter()
        .enumerate()
        .map(|(i, w)| {
            w.ok_or_else(|| {
                IterateError::UnsupportedShape(format!(
                    "variable {} has no generator level",
                    ring.var_names()[i]
                ))
            })
        })
        .collect::<Result<_, _>>()?;
    let mut out = IteratedSemidegree::weighted(&ring, &weights)?;
    candidates.sort_by_key(|(_, level)| *level);
    for (h, w) in candidates {
        out = out.adjoin(h.clone(), w).map_err(|e| match e {
            IterateError::StepNotPrime => IterateError::UnsupportedShape(format!(
                "generator {h} is not prime for the preceding semidegree"
            )),
            IterateError::WeightNotLowered { w, e } => IterateError::UnsupportedShape(format!(
                "generator {h} at level {w} does not lower its degree {e}"
            )),
            other => other,
        })?;
    }
    Ok(out)
}

fn single_variable_of(g: &Polynomial) -> Option<usize> {
    if g.num_terms() != 1 {
        return None;
    }
    let (e, _) = g.terms().next()?;
    let nonzero: Vec<usize> = (0..e.len()).filter(|&i| e[i] != 0).collect();
    match nonzero.as_slice() {
        [i] if e[*i] == 1 => Some(*i),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rational_from_i64 as ri;

    fn xy() -> Arc<Ring> {
        Ring::new(&["x1", "x2"])
    }

    fn poly(ring: &Arc<Ring>, terms: &[(i64, i64, i64)]) -> Polynomial {
        Polynomial::from_terms(ring, terms.iter().map(|&(c, a, b)| (vec![a, b], ri(c)))).unwrap()
    }

    /// Weighted (3,2) with the cusp x1^2 - x2^3 adjoined at weight 1.
    fn cusp_iteration() -> IteratedSemidegree {
        let r = xy();
        let h = poly(&r, &[(1, 2, 0), (-1, 0, 3)]);
        IteratedSemidegree::weighted(&r, &[3, 2])
            .unwrap()
            .adjoin(h, 1)
            .unwrap()
    }

    #[test]
    fn expansion_reduces_against_the_leading_monomial() {
        let r = xy();
        let f = poly(&r, &[(1, 2, 0)]); // x1^2
        let h = poly(&r, &[(1, 2, 0), (-1, 0, 3)]);
        let ord = MonomialOrder::graded_i64(&[3, 2]);
        let coeffs = f_adic_expansion(&f, &h, &ord).unwrap();
        assert_eq!(coeffs.len(), 2);
        assert_eq!(coeffs[0], poly(&r, &[(1, 0, 3)])); // x2^3
        assert_eq!(coeffs[1], Polynomial::one(&r));
        // f = h itself
        let coeffs = f_adic_expansion(&h, &h, &ord).unwrap();
        assert!(coeffs[0].is_zero());
        assert_eq!(coeffs[1], Polynomial::one(&r));
        // already reduced
        let x2 = Polynomial::var(&r, 1);
        let coeffs = f_adic_expansion(&x2, &h, &ord).unwrap();
        assert_eq!(coeffs, vec![x2]);
    }

    #[test]
    fn expansion_round_trips() {
        let r = xy();
        let h = poly(&r, &[(1, 2, 0), (-1, 0, 3)]);
        let ord = MonomialOrder::graded_i64(&[3, 2]);
        let f = poly(&r, &[(2, 5, 1), (-3, 1, 4), (1, 0, 0), (7, 3, 3)]);
        let coeffs = f_adic_expansion(&f, &h, &ord).unwrap();
        let mut rebuilt = Polynomial::zero(&r);
        for (i, a) in coeffs.iter().enumerate() {
            rebuilt = rebuilt.add(&a.mul(&h.pow(i as u32)).unwrap()).unwrap();
        }
        assert_eq!(rebuilt, f);
    }

    #[test]
    fn cusp_iteration_generator_degrees() {
        let d = cusp_iteration();
        let r = d.ring().clone();
        let x1 = Polynomial::var(&r, 0);
        let x2 = Polynomial::var(&r, 1);
        let h = poly(&r, &[(1, 2, 0), (-1, 0, 3)]);
        assert_eq!(d.evaluate(&x1).unwrap(), DegreeValue::Finite(3));
        assert_eq!(d.evaluate(&x2).unwrap(), DegreeValue::Finite(2));
        assert_eq!(d.evaluate(&h).unwrap(), DegreeValue::Finite(1));
        // multiplicativity on powers of the generators
        assert_eq!(d.evaluate(&x1.pow(2)).unwrap(), DegreeValue::Finite(6));
        let hx = h.pow(2).mul(&x2).unwrap();
        assert_eq!(d.evaluate(&hx).unwrap(), DegreeValue::Finite(4));
    }

    #[test]
    fn zero_steps_is_the_base_weighted_degree() {
        let r = xy();
        let d = IteratedSemidegree::weighted(&r, &[3, 2]).unwrap();
        let f = poly(&r, &[(1, 2, 0), (5, 1, 1), (-1, 0, 3)]);
        assert_eq!(d.evaluate(&f).unwrap(), DegreeValue::Finite(6));
    }

    #[test]
    fn primality_of_leading_forms() {
        let r = xy();
        let base32 = WeightedDegree::new(&[3, 2]);
        let cusp = poly(&r, &[(1, 2, 0), (-1, 0, 3)]);
        assert_eq!(primality_check(&base32, &cusp).unwrap(), Primality::Prime);
        let base21 = WeightedDegree::new(&[2, 1]);
        let node = poly(&r, &[(1, 2, 0), (-1, 0, 4)]); // (x1-x2^2)(x1+x2^2)
        assert_eq!(primality_check(&base21, &node).unwrap(), Primality::NotPrime);
        let x1 = Polynomial::var(&r, 0);
        assert_eq!(primality_check(&base32, &x1).unwrap(), Primality::Prime);
        let sq = poly(&r, &[(1, 2, 0)]);
        assert_eq!(primality_check(&base32, &sq).unwrap(), Primality::NotPrime);
    }

    #[test]
    fn adjoin_rejects_bad_steps() {
        let r = xy();
        let d = IteratedSemidegree::weighted(&r, &[2, 1]).unwrap();
        let node = poly(&r, &[(1, 2, 0), (-1, 0, 4)]);
        assert_eq!(d.clone().adjoin(node.clone(), 1).unwrap_err(), IterateError::StepNotPrime);
        assert!(d.clone().adjoin_asserted(node, 1).is_ok());
        let cusp = poly(&r, &[(1, 2, 0), (-1, 0, 3)]);
        let d32 = IteratedSemidegree::weighted(&r, &[3, 2]).unwrap();
        assert!(matches!(
            d32.adjoin(cusp, 7),
            Err(IterateError::WeightNotLowered { w: 7, e: 6 })
        ));
    }

    #[test]
    fn presentation_reproduces_the_cusp_hypersurface() {
        let d = cusp_iteration();
        let report = rees_presentation(&d).unwrap();
        assert_eq!(
            report.ambient,
            vec![
                ("x0".to_string(), 1),
                ("x1".to_string(), 3),
                ("x2".to_string(), 2),
                ("s1".to_string(), 1)
            ]
        );
        assert_eq!(report.relations.len(), 1);
        // x1^2 - x2^3 - x0^5 s1
        let pres_ring = report.relations[0].ring().clone();
        let expected = Polynomial::from_terms(
            &pres_ring,
            [
                (vec![0, 2, 0, 0], ri(1)),
                (vec![0, 0, 3, 0], ri(-1)),
                (vec![5, 0, 0, 1], ri(-1)),
            ],
        )
        .unwrap();
        assert_eq!(report.relations[0], expected);
        assert!(report.warnings.is_empty());
    }

    #[test]
    fn zero_step_presentation_has_no_relations() {
        let r = xy();
        let d = IteratedSemidegree::weighted(&r, &[1, 1]).unwrap();
        let report = rees_presentation(&d).unwrap();
        assert!(report.relations.is_empty());
        assert_eq!(report.ambient.len(), 3);
    }
}
