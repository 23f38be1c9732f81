//! Sparse multivariate polynomials and Laurent polynomials over the exact
//! rationals, with monomial orders, single-divisor division and bivariate
//! resultants.
//!
//! Every value is immutable after construction and in canonical form: no zero
//! coefficients are stored and term iteration order is the fixed ordering of
//! the exponent map, so equal polynomials are structurally equal.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rational::format_rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials live in different rings (variables or Laurent flag differ)")]
    VariableMismatch,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("operation requires a ring with exactly two variables")]
    NotBivariate,
    #[error("polynomial has degree zero in the elimination variable")]
    DegreeZeroInEliminationVariable,
    #[error("operation is not defined on Laurent polynomials")]
    LaurentRing,
    #[error("negative exponent in a non-Laurent ring")]
    NegativeExponent,
    #[error("substitution image for a Laurent variable must be an invertible monomial")]
    NonInvertibleImage,
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
}

/// Ambient polynomial ring: a fixed ordered variable list plus a Laurent flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    vars: Vec<String>,
    laurent: bool,
}

impl Ring {
    pub fn new(vars: &[&str]) -> Arc<Ring> {
        Arc::new(Ring {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            laurent: false,
        })
    }

    pub fn laurent(vars: &[&str]) -> Arc<Ring> {
        Arc::new(Ring {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            laurent: true,
        })
    }

    pub fn from_names(vars: Vec<String>, laurent: bool) -> Arc<Ring> {
        Arc::new(Ring { vars, laurent })
    }

    pub fn n_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

pub type Exponents = Vec<i64>;

fn dot_weights(weights: &[BigRational], exps: &[i64]) -> BigRational {
    let mut acc = BigRational::zero();
    for (w, &e) in weights.iter().zip(exps) {
        if e != 0 {
            acc += w * BigRational::from_integer(BigInt::from(e));
        }
    }
    acc
}

/// Total monomial order used by division and expansions.
///
/// `GradedByWeights` compares weighted degrees first; ties (and the `Lex`
/// kind) fall back to lexicographic comparison in the ring's fixed variable
/// order, first variable most significant.
#[derive(Debug, Clone, PartialEq)]
pub enum MonomialOrder {
    GradedByWeights(Vec<BigRational>),
    Lex,
}

impl MonomialOrder {
    pub fn graded_i64(weights: &[i64]) -> MonomialOrder {
        MonomialOrder::GradedByWeights(
            weights
                .iter()
                .map(|&w| BigRational::from_integer(BigInt::from(w)))
                .collect(),
        )
    }

    pub fn cmp_exponents(&self, a: &[i64], b: &[i64]) -> Ordering {
        if let MonomialOrder::GradedByWeights(w) = self {
            let da = dot_weights(w, a);
            let db = dot_weights(w, b);
            match da.cmp(&db) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        a.cmp(b)
    }

    pub fn describe(&self) -> String {
        match self {
            MonomialOrder::GradedByWeights(w) => {
                let ws: Vec<String> = w.iter().map(format_rational).collect();
                format!("graded({}) lex tie-break", ws.join(","))
            }
            MonomialOrder::Lex => "lex".to_string(),
        }
    }
}

/// Sparse exact polynomial. Terms map exponent vectors to nonzero rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: BTreeMap<Exponents, BigRational>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: BigRational) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        if !c.is_zero() {
            p.terms.insert(vec![0; ring.n_vars()], c);
        }
        p
    }

    pub fn constant_i64(ring: &Arc<Ring>, c: i64) -> Polynomial {
        Polynomial::constant(ring, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn one(ring: &Arc<Ring>) -> Polynomial {
        Polynomial::constant_i64(ring, 1)
    }

    pub fn var(ring: &Arc<Ring>, index: usize) -> Polynomial {
        let mut exps = vec![0; ring.n_vars()];
        exps[index] = 1;
        let mut p = Polynomial::zero(ring);
        p.terms.insert(exps, BigRational::one());
        p
    }

    /// Build from raw (exponents, coefficient) pairs; merges duplicates.
    pub fn from_terms<I>(ring: &Arc<Ring>, terms: I) -> Result<Polynomial, PolyError>
    where
        I: IntoIterator<Item = (Exponents, BigRational)>,
    {
        let mut p = Polynomial::zero(ring);
        for (exps, coeff) in terms {
            assert_eq!(exps.len(), ring.n_vars(), "exponent arity mismatch");
            if !ring.laurent && exps.iter().any(|&e| e < 0) {
                return Err(PolyError::NegativeExponent);
            }
            p.add_term(exps, coeff);
        }
        Ok(p)
    }

    pub fn monomial(ring: &Arc<Ring>, exps: Exponents, coeff: BigRational) -> Polynomial {
        Polynomial::from_terms(ring, [(exps, coeff)]).expect("invalid monomial")
    }

    fn add_term(&mut self, exps: Exponents, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn n_vars(&self) -> usize {
        self.ring.n_vars()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<Exponents> {
        self.terms.keys().cloned().collect()
    }

    pub fn coeff(&self, exps: &[i64]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&vec![0; self.n_vars()])
    }

    fn check_same_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.ring == other.ring || Arc::ptr_eq(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::VariableMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same_ring(other)?;
        let mut out = Polynomial::zero(&self.ring);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let mut out = Polynomial::zero(&self.ring);
        for (e, q) in &self.terms {
            out.terms.insert(e.clone(), q * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = out.mul(&base).expect("same ring");
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        out
    }

    /// Degree in a single variable; -1 for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> i64 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(-1)
    }

    pub fn min_exponent_in(&self, var: usize) -> i64 {
        self.terms.keys().map(|e| e[var]).min().unwrap_or(0)
    }

    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<i64>())
            .max()
            .unwrap_or(-1)
    }

    /// Coefficient of `var^k` as a polynomial in the same ring.
    pub fn coefficient_of(&self, var: usize, k: i64) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (e, c) in &self.terms {
            if e[var] == k {
                let mut e2 = e.clone();
                e2[var] = 0;
                out.terms.insert(e2, c.clone());
            }
        }
        out
    }

    pub fn leading_exponents<'a>(&'a self, ord: &MonomialOrder) -> Option<&'a Exponents> {
        self.terms
            .keys()
            .max_by(|a, b| ord.cmp_exponents(a, b))
    }

    /// Largest exponent key in the plain map order; the pivot monomial used
    /// by the row-reduction utilities.
    pub fn max_exponents(&self) -> Option<&Exponents> {
        self.terms.keys().next_back()
    }

    /// Simultaneous substitution: `images[i]` replaces variable `i`. All
    /// images must live in one common ring, which becomes the result ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        assert_eq!(images.len(), self.n_vars(), "one image per variable");
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .unwrap_or_else(|| self.ring.clone());
        for im in images {
            if im.ring != target {
                return Err(PolyError::VariableMismatch);
            }
        }
        let mut out = Polynomial::zero(&target);
        for (e, c) in &self.terms {
            let mut term = Polynomial::constant(&target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let factor = if k > 0 {
                    images[i].pow(k as u32)
                } else {
                    invert_monomial(&images[i])?.pow((-k) as u32)
                };
                term = term.mul(&factor)?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Substitute only the listed variables, keeping the rest fixed.
    pub fn substitute_partial(
        &self,
        map: &BTreeMap<usize, Polynomial>,
    ) -> Result<Polynomial, PolyError> {
        let images: Vec<Polynomial> = (0..self.n_vars())
            .map(|i| match map.get(&i) {
                Some(p) => p.clone(),
                None => Polynomial::var(&self.ring, i),
            })
            .collect();
        self.substitute(&images)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational, PolyError> {
        assert_eq!(point.len(), self.n_vars());
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if k < 0 && point[i].is_zero() {
                    return Err(PolyError::NegativeExponent);
                }
                let mut p = BigRational::one();
                let base = if k > 0 {
                    point[i].clone()
                } else {
                    point[i].recip()
                };
                for _ in 0..k.unsigned_abs() {
                    p *= &base;
                }
                term *= p;
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Division with remainder by a single divisor under a fixed order:
    /// `self = q*g + r` where no term of `r` is divisible by the leading
    /// monomial of `g`. The pair `(q, r)` is unique given the order.
    pub fn divide_with_remainder(
        &self,
        g: &Polynomial,
        ord: &MonomialOrder,
    ) -> Result<(Polynomial, Polynomial), PolyError> {
        self.check_same_ring(g)?;
        if self.ring.is_laurent() {
            return Err(PolyError::LaurentRing);
        }
        if g.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        let lead = g.leading_exponents(ord).expect("nonzero divisor").clone();
        let lead_coeff = g.terms[&lead].clone();

        let mut quotient = Polynomial::zero(&self.ring);
        let mut remainder = Polynomial::zero(&self.ring);
        let mut current = self.clone();
        while let Some(top) = current.leading_exponents(ord).cloned() {
            let c = current.terms[&top].clone();
            let divisible = top.iter().zip(&lead).all(|(t, l)| t >= l);
            if divisible {
                let shift: Exponents = top.iter().zip(&lead).map(|(t, l)| t - l).collect();
                let factor = &c / &lead_coeff;
                let mono = Polynomial::monomial(&self.ring, shift.clone(), factor.clone());
                quotient.add_term(shift, factor);
                current = current.sub(&mono.mul(g)?)?;
            } else {
                remainder.add_term(top.clone(), c);
                current.terms.remove(&top);
            }
        }
        Ok((quotient, remainder))
    }

    /// Remainder on division by `g`; zero iff `self` lies in the principal
    /// ideal generated by `g`.
    pub fn reduce_mod(&self, g: &Polynomial, ord: &MonomialOrder) -> Result<Polynomial, PolyError> {
        Ok(self.divide_with_remainder(g, ord)?.1)
    }

    /// Strip the largest monomial factor (content in the monomial sense),
    /// returning the shifted polynomial and the removed exponent vector.
    pub fn strip_monomial_content(&self) -> (Polynomial, Exponents) {
        if self.is_zero() {
            return (self.clone(), vec![0; self.n_vars()]);
        }
        let n = self.n_vars();
        let mut shift = vec![i64::MAX; n];
        for e in self.terms.keys() {
            for i in 0..n {
                shift[i] = shift[i].min(e[i]);
            }
        }
        let mut out = Polynomial::zero(&self.ring);
        for (e, c) in &self.terms {
            let e2: Exponents = e.iter().zip(&shift).map(|(a, s)| a - s).collect();
            out.terms.insert(e2, c.clone());
        }
        (out, shift)
    }

    /// Reinterpret in another ring with the same variable count.
    pub fn with_ring(&self, ring: &Arc<Ring>) -> Result<Polynomial, PolyError> {
        assert_eq!(ring.n_vars(), self.n_vars());
        if !ring.is_laurent() && self.terms.keys().any(|e| e.iter().any(|&x| x < 0)) {
            return Err(PolyError::NegativeExponent);
        }
        Ok(Polynomial {
            ring: ring.clone(),
            terms: self.terms.clone(),
        })
    }
}

fn invert_monomial(p: &Polynomial) -> Result<Polynomial, PolyError> {
    if !p.ring().is_laurent() || p.num_terms() != 1 {
        return Err(PolyError::NonInvertibleImage);
    }
    let (e, c) = p.terms.iter().next().expect("one term");
    let inv: Exponents = e.iter().map(|&x| -x).collect();
    Ok(Polynomial::monomial(p.ring(), inv, c.recip()))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest-degree terms first reads more naturally
        for (e, c) in self.terms.iter().rev() {
            let mut mono = String::new();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(&self.ring.vars[i]);
                if k != 1 {
                    mono.push_str(&format!("^{k}"));
                }
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            let coeff_str = format_rational(&abs);
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            if mono.is_empty() {
                write!(f, "{coeff_str}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{coeff_str}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---------------------------------------------------------------------------
// Bivariate resultants via fraction-free (Bareiss) elimination over Z[t].

type IntPoly = Vec<BigInt>;

fn ip_trim(p: &mut IntPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn ip_is_zero(p: &IntPoly) -> bool {
    p.is_empty()
}

fn ip_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if ip_is_zero(a) || ip_is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    ip_trim(&mut out);
    out
}

fn ip_sub(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    ip_trim(&mut out);
    out
}

/// Exact division, panics if not divisible (Bareiss guarantees divisibility).
fn ip_exact_div(num: &IntPoly, den: &IntPoly) -> IntPoly {
    assert!(!ip_is_zero(den), "exact division by zero polynomial");
    if ip_is_zero(num) {
        return Vec::new();
    }
    let mut rem = num.clone();
    let dl = den.len();
    let lead = &den[dl - 1];
    assert!(rem.len() >= dl);
    let mut q = vec![BigInt::zero(); rem.len() - dl + 1];
    for k in (0..q.len()).rev() {
        let top = rem[k + dl - 1].clone();
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lead);
        assert!(r.is_zero(), "non-exact division in Bareiss step");
        q[k] = c.clone();
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "nonzero remainder in exact division");
    ip_trim(&mut q);
    q
}

/// Determinant of a matrix over Z[t] by Bareiss fraction-free elimination.
fn ip_determinant(mut m: Vec<Vec<IntPoly>>) -> IntPoly {
    let n = m.len();
    if n == 0 {
        return vec![BigInt::one()];
    }
    let mut sign = 1i64;
    let mut prev: IntPoly = vec![BigInt::one()];
    for k in 0..n - 1 {
        if ip_is_zero(&m[k][k]) {
            match (k + 1..n).find(|&r| !ip_is_zero(&m[r][k])) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Vec::new(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = ip_mul(&m[i][j], &m[k][k]);
                let b = ip_mul(&m[i][k], &m[k][j]);
                m[i][j] = ip_exact_div(&ip_sub(&a, &b), &prev);
            }
            m[i][k] = Vec::new();
        }
        prev = m[k][k].clone();
    }
    let mut det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det = ip_sub(&Vec::new(), &det);
    }
    det
}

/// Resultant of two bivariate polynomials, eliminating the given variable.
/// Returns the Sylvester determinant as a polynomial in the remaining
/// variable (same two-variable ring, zero degree in `eliminate`).
pub fn resultant_bivariate(
    p: &Polynomial,
    q: &Polynomial,
    eliminate: usize,
) -> Result<Polynomial, PolyError> {
    p.check_same_ring(q)?;
    if p.n_vars() != 2 {
        return Err(PolyError::NotBivariate);
    }
    if p.ring().is_laurent() {
        return Err(PolyError::LaurentRing);
    }
    let other = 1 - eliminate;
    let m = p.degree_in(eliminate);
    let l = q.degree_in(eliminate);
    if m < 1 || l < 1 {
        return Err(PolyError::DegreeZeroInEliminationVariable);
    }

    // clear denominators; the scaling is divided back out at the end
    let (pi, pc) = clear_denominators(p, eliminate, other, m);
    let (qi, qc) = clear_denominators(q, eliminate, other, l);

    let size = (m + l) as usize;
    let mut mat = vec![vec![Vec::new(); size]; size];
    // standard Sylvester layout: l shifted rows of p's coefficients in
    // descending order, then m rows of q's
    for row in 0..l as usize {
        for (k, coeff) in pi.iter().rev().enumerate() {
            mat[row][row + k] = coeff.clone();
        }
    }
    for row in 0..m as usize {
        for (k, coeff) in qi.iter().rev().enumerate() {
            mat[l as usize + row][row + k] = coeff.clone();
        }
    }
    let det = ip_determinant(mat);

    // Res(c*p, q) = c^(deg q) Res(p, q)
    let scale = pow_rational(&pc, l as u32) * pow_rational(&qc, m as u32);
    let mut out = Polynomial::zero(p.ring());
    for (k, c) in det.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut e = vec![0i64; 2];
        e[other] = k as i64;
        out.terms
            .insert(e, BigRational::from_integer(c.clone()) / &scale);
    }
    Ok(out)
}

fn pow_rational(q: &BigRational, n: u32) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..n {
        out *= q;
    }
    out
}

/// Coefficients of `p` in `var` (descending stored ascending), as integer
/// univariates in `other`, together with the rational that was multiplied
/// in to clear denominators.
fn clear_denominators(
    p: &Polynomial,
    var: usize,
    other: usize,
    deg: i64,
) -> (Vec<IntPoly>, BigRational) {
    let mut denom_lcm = BigInt::one();
    for (_, c) in p.terms() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let scale = BigRational::from_integer(denom_lcm);
    let mut coeffs: Vec<IntPoly> = vec![Vec::new(); deg as usize + 1];
    for (e, c) in p.terms() {
        let k = e[var] as usize;
        let j = e[other] as usize;
        let v = c * &scale;
        debug_assert!(v.is_integer());
        if coeffs[k].len() <= j {
            coeffs[k].resize(j + 1, BigInt::zero());
        }
        coeffs[k][j] += v.to_integer();
    }
    for c in &mut coeffs {
        ip_trim(c);
    }
    (coeffs, scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rational_from_i64 as ri;

    fn xy() -> Arc<Ring> {
        Ring::new(&["x1", "x2"])
    }

    fn p(ring: &Arc<Ring>, terms: &[(i64, i64, i64)]) -> Polynomial {
        Polynomial::from_terms(
            ring,
            terms
                .iter()
                .map(|&(c, a, b)| (vec![a, b], ri(c))),
        )
        .unwrap()
    }

    #[test]
    fn addition_cancels() {
        let r = xy();
        let a = p(&r, &[(1, 1, 0), (1, 0, 1)]); // x1 + x2
        let b = p(&r, &[(1, 1, 0), (-1, 0, 1)]); // x1 - x2
        assert_eq!(a.add(&b).unwrap(), p(&r, &[(2, 1, 0)]));
        assert_eq!(a.add(&Polynomial::zero(&r)).unwrap(), a);
        let c = p(&r, &[(1, 2, 0), (-1, 0, 3)]); // x1^2 - x2^3
        let d = p(&r, &[(1, 0, 3)]);
        assert_eq!(c.add(&d).unwrap(), p(&r, &[(1, 2, 0)]));
    }

    #[test]
    fn products_match_hand_expansion() {
        let r = xy();
        let a = p(&r, &[(1, 1, 0), (1, 0, 1)]);
        let b = p(&r, &[(1, 1, 0), (-1, 0, 1)]);
        assert_eq!(a.mul(&b).unwrap(), p(&r, &[(1, 2, 0), (-1, 0, 2)]));
        // (x1 - x2^2)(x1 + x2^2) = x1^2 - x2^4
        let f = p(&r, &[(1, 1, 0), (-1, 0, 2)]);
        let g = p(&r, &[(1, 1, 0), (1, 0, 2)]);
        assert_eq!(f.mul(&g).unwrap(), p(&r, &[(1, 2, 0), (-1, 0, 4)]));
    }

    #[test]
    fn laurent_inverse_monomials_cancel() {
        let r = Ring::laurent(&["x1", "x2"]);
        let a = Polynomial::monomial(&r, vec![1, -1], ri(1));
        let b = Polynomial::monomial(&r, vec![-1, 1], ri(1));
        assert_eq!(a.mul(&b).unwrap(), Polynomial::one(&r));
    }

    #[test]
    fn negative_exponents_rejected_outside_laurent() {
        let r = xy();
        assert_eq!(
            Polynomial::from_terms(&r, [(vec![-1, 0], ri(1))]).unwrap_err(),
            PolyError::NegativeExponent
        );
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = Polynomial::one(&xy());
        let b = Polynomial::one(&Ring::new(&["u", "v"]));
        assert_eq!(a.add(&b).unwrap_err(), PolyError::VariableMismatch);
    }

    #[test]
    fn division_by_weighted_leading_monomial() {
        // divide x1^2 by x1^2 - x2^3 under weights (3,2): leading monomial of
        // the divisor is x1^2 by the lex tie-break, so q = 1, r = x2^3
        let r = xy();
        let f = p(&r, &[(1, 2, 0)]);
        let g = p(&r, &[(1, 2, 0), (-1, 0, 3)]);
        let ord = MonomialOrder::graded_i64(&[3, 2]);
        let (q, rem) = f.divide_with_remainder(&g, &ord).unwrap();
        assert_eq!(q, Polynomial::one(&r));
        assert_eq!(rem, p(&r, &[(1, 0, 3)]));
        // round trip
        assert_eq!(q.mul(&g).unwrap().add(&rem).unwrap(), f);
    }

    #[test]
    fn division_edge_cases() {
        let r = xy();
        let ord = MonomialOrder::graded_i64(&[1, 1]);
        let x2 = Polynomial::var(&r, 1);
        let x1 = Polynomial::var(&r, 0);
        let (q, rem) = x2.divide_with_remainder(&x1, &ord).unwrap();
        assert!(q.is_zero());
        assert_eq!(rem, x2);
        let g = p(&r, &[(1, 2, 0), (-1, 0, 3)]);
        let (q, rem) = g.divide_with_remainder(&g, &ord).unwrap();
        assert_eq!(q, Polynomial::one(&r));
        assert!(rem.is_zero());
        assert_eq!(
            g.divide_with_remainder(&Polynomial::zero(&r), &ord).unwrap_err(),
            PolyError::ZeroDivisor
        );
    }

    #[test]
    fn resultant_matches_hand_sylvester() {
        let r = xy();
        // Res_{x2}(x2^2 - x1, x2 - 1) = 1 - x1 (3x3 determinant by hand)
        let f = p(&r, &[(1, 0, 2), (-1, 1, 0)]);
        let g = p(&r, &[(1, 0, 1), (-1, 0, 0)]);
        let res = resultant_bivariate(&f, &g, 1).unwrap();
        assert_eq!(res, p(&r, &[(1, 0, 0), (-1, 1, 0)]));
        // Res_{x2}(x2 - x1, x2 + x1) = 2x1 (2x2 determinant)
        let a = p(&r, &[(1, 0, 1), (-1, 1, 0)]);
        let b = p(&r, &[(1, 0, 1), (1, 1, 0)]);
        assert_eq!(resultant_bivariate(&a, &b, 1).unwrap(), p(&r, &[(2, 1, 0)]));
        // common factor gives the zero resultant
        assert!(resultant_bivariate(&f, &f, 1).unwrap().is_zero());
    }

    #[test]
    fn resultant_preconditions() {
        let r = xy();
        let f = p(&r, &[(1, 0, 2), (-1, 1, 0)]);
        let c = p(&r, &[(1, 1, 0)]);
        assert_eq!(
            resultant_bivariate(&f, &c, 1).unwrap_err(),
            PolyError::DegreeZeroInEliminationVariable
        );
        let r3 = Ring::new(&["x", "y", "z"]);
        let g = Polynomial::var(&r3, 0);
        assert_eq!(
            resultant_bivariate(&g, &g, 0).unwrap_err(),
            PolyError::NotBivariate
        );
    }

    #[test]
    fn substitution_expands_exactly() {
        // x1 -> u + x2^2 applied to x1^2 - x2^4 gives u^2 + 2u x2^2
        let r = xy();
        let target = Ring::new(&["u", "x2"]);
        let f = p(&r, &[(1, 2, 0), (-1, 0, 4)]);
        let images = vec![
            p(&target, &[(1, 1, 0), (1, 0, 2)]),
            Polynomial::var(&target, 1),
        ];
        let out = f.substitute(&images).unwrap();
        assert_eq!(out, p(&target, &[(1, 2, 0), (2, 1, 2)]));
        // identity assignment
        let id = vec![Polynomial::var(&r, 0), Polynomial::var(&r, 1)];
        assert_eq!(f.substitute(&id).unwrap(), f);
        // x1 -> 0 in x1 x2 + x2
        let g = p(&r, &[(1, 1, 1), (1, 0, 1)]);
        let z = vec![Polynomial::zero(&r), Polynomial::var(&r, 1)];
        assert_eq!(g.substitute(&z).unwrap(), p(&r, &[(1, 0, 1)]));
    }

    #[test]
    fn display_reads_naturally() {
        let r = xy();
        let f = p(&r, &[(1, 2, 0), (-1, 0, 3), (1, 0, 0)]);
        assert_eq!(f.to_string(), "x1^2 - x2^3 + 1");
    }
}
