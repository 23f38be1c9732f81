//! Dense univariate polynomial utilities over Q: gcd, primitive integer
//! forms, and an exact irreducibility test for the small degrees that occur
//! at desk scale (degree <= 8 enforced).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum UnivarError {
    #[error("irreducibility testing is limited to degree <= 8, got {0}")]
    DegreeTooHigh(usize),
    #[error("irreducibility undecided within the search budget")]
    Undecided,
}

/// Coefficients ascending; no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly(pub Vec<BigRational>);

impl std::fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{}t^{}", crate::rational::format_rational(c), i))
            .collect();
        write!(f, "{}", if parts.is_empty() { "0".into() } else { parts.join(" + ") })
    }
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> UniPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn zero() -> UniPoly {
        UniPoly(Vec::new())
    }

    pub fn from_i64(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; -1 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn leading(&self) -> BigRational {
        self.0.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let mut out = vec![BigRational::zero(); self.0.len().max(other.0.len())];
        for (i, a) in self.0.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in other.0.iter().enumerate() {
            out[i] += b;
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let mut out = vec![BigRational::zero(); self.0.len().max(other.0.len())];
        for (i, a) in self.0.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in other.0.iter().enumerate() {
            out[i] -= b;
        }
        UniPoly::new(out)
    }

    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!divisor.is_zero(), "univariate division by zero");
        let dl = divisor.0.len();
        if self.0.len() < dl {
            return (UniPoly::zero(), self.clone());
        }
        let lead = divisor.leading();
        let mut rem = self.0.clone();
        let mut q = vec![BigRational::zero(); rem.len() - dl + 1];
        for k in (0..q.len()).rev() {
            let c = &rem[k + dl - 1] / &lead;
            if c.is_zero() {
                continue;
            }
            q[k] = c.clone();
            for (j, d) in divisor.0.iter().enumerate() {
                let delta = &c * d;
                rem[k + j] -= delta;
            }
        }
        (UniPoly::new(q), UniPoly::new(rem))
    }

    pub fn divides(&self, other: &UniPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Monic gcd; zero if both inputs are zero.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading();
        UniPoly::new(a.0.iter().map(|c| c / &lead).collect())
    }

    /// Divide out the largest power of t, returning the exponent removed.
    pub fn strip_power(&self) -> (UniPoly, usize) {
        if self.is_zero() {
            return (self.clone(), 0);
        }
        let k = self.0.iter().position(|c| !c.is_zero()).unwrap();
        (UniPoly::new(self.0[k..].to_vec()), k)
    }

    /// Primitive integer form: multiply by the denominator lcm, divide by
    /// the content, make the leading coefficient positive.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut lcm = BigInt::one();
        for c in &self.0 {
            lcm = lcm.lcm(c.denom());
        }
        let scaled: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut content = BigInt::zero();
        for c in &scaled {
            content = content.gcd(c);
        }
        let sign = if scaled.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        content *= sign;
        scaled.iter().map(|c| c / &content).collect()
    }
}

/// All (positive and negative) divisors of a nonzero integer by trial
/// division. Desk-scale values only.
fn all_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    loop {
        let d_sq = &d * &d;
        if d_sq > n {
            break;
        }
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    let mut out = Vec::with_capacity(small.len() * 2);
    for d in small {
        out.push(-&d);
        out.push(d);
    }
    out
}

// --- arithmetic mod a small prime, for factor degree patterns -------------

fn pmod(a: &BigInt, p: u64) -> u64 {
    let r = a.mod_floor(&BigInt::from(p));
    u64::try_from(r).unwrap()
}

fn mp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn mp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + (x as u128 * y as u128 % p as u128) as u64) % p;
        }
    }
    mp_trim(&mut out);
    out
}

fn mp_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut rem: Vec<u64> = a.to_vec();
    mp_trim(&mut rem);
    let dl = m.len();
    let lead_inv = mod_inverse(m[dl - 1], p);
    while rem.len() >= dl {
        let k = rem.len() - dl;
        let top = *rem.last().unwrap();
        let c = (top as u128 * lead_inv as u128 % p as u128) as u64;
        if c != 0 {
            for (j, &d) in m.iter().enumerate() {
                let sub = (c as u128 * d as u128 % p as u128) as u64;
                rem[k + j] = (rem[k + j] + p - sub) % p;
            }
        }
        debug_assert_eq!(*rem.last().unwrap(), 0);
        rem.pop();
        mp_trim(&mut rem);
    }
    rem
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime, a != 0 mod p
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

fn mp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    mp_trim(&mut a);
    mp_trim(&mut b);
    while !b.is_empty() {
        let r = mp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn mp_derivative(a: &[u64], p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| (c as u128 * (i as u64 % p) as u128 % p as u128) as u64)
        .collect();
    mp_trim(&mut out);
    out
}

/// Degrees d such that the factorization of f mod p could contain a factor
/// of total degree d, via distinct-degree splitting. Requires f squarefree
/// mod p with nonzero leading coefficient; returns None otherwise.
fn factor_degree_multiset(f: &[BigInt], p: u64) -> Option<Vec<usize>> {
    let fp: Vec<u64> = f.iter().map(|c| pmod(c, p)).collect();
    let mut fp = fp;
    mp_trim(&mut fp);
    if fp.len() != f.len() {
        return None; // leading coefficient vanished
    }
    let deriv = mp_derivative(&fp, p);
    if deriv.is_empty() {
        return None;
    }
    if mp_gcd(&fp, &deriv, p).len() > 1 {
        return None; // not squarefree mod p
    }
    let n = fp.len() - 1;
    let mut remaining = fp.clone();
    let mut degrees = Vec::new();
    // x^(p^k) mod f, iterated
    let mut xp: Vec<u64> = vec![0, 1]; // x
    for k in 1..=n {
        if remaining.len() <= 1 {
            break;
        }
        // raise to p-th power mod remaining-f (use original fp modulus for
        // stability of the iteration, then gcd with remaining)
        xp = mp_pow_mod(&xp, p, &fp, p);
        let mut diff = xp.clone();
        // diff = x^{p^k} - x
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        mp_trim(&mut diff);
        let g = mp_gcd(&remaining, &diff, p);
        if g.len() > 1 {
            let total = g.len() - 1;
            debug_assert_eq!(total % k, 0);
            for _ in 0..total / k {
                degrees.push(k);
            }
            // remaining /= g
            remaining = mp_div_exact(&remaining, &g, p);
        }
    }
    if remaining.len() > 1 {
        degrees.push(remaining.len() - 1);
    }
    Some(degrees)
}

fn mp_pow_mod(base: &[u64], exp: u64, modulus: &[u64], p: u64) -> Vec<u64> {
    let mut acc: Vec<u64> = vec![1];
    let mut b = mp_rem(base, modulus, p);
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = mp_rem(&mp_mul(&acc, &b, p), modulus, p);
        }
        b = mp_rem(&mp_mul(&b, &b, p), modulus, p);
        e >>= 1;
    }
    acc
}

fn mp_div_exact(num: &[u64], den: &[u64], p: u64) -> Vec<u64> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let lead_inv = mod_inverse(den[dl - 1], p);
    let mut q = vec![0u64; rem.len() - dl + 1];
    for k in (0..q.len()).rev() {
        let c = (rem[k + dl - 1] as u128 * lead_inv as u128 % p as u128) as u64;
        q[k] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                let sub = (c as u128 * d as u128 % p as u128) as u64;
                rem[k + j] = (rem[k + j] + p - sub) % p;
            }
        }
    }
    mp_trim(&mut q);
    q
}

/// Subset sums of a degree multiset, excluding 0 and the full degree.
fn proper_factor_degrees(multiset: &[usize], total: usize) -> Vec<usize> {
    let mut possible = vec![false; total + 1];
    possible[0] = true;
    for &d in multiset {
        for s in (0..=total.saturating_sub(d)).rev() {
            if possible[s] {
                possible[s + d] = true;
            }
        }
    }
    (1..total).filter(|&d| possible[d]).collect()
}

/// Exact irreducibility over Q for degree <= 8.
///
/// Strategy: rational-root test for linear factors (complete for degree <=
/// 3), then mod-p factor degree patterns to rule degrees out, then a
/// Kronecker interpolation search for any degree the patterns leave open.
pub fn is_irreducible_over_q(f: &UniPoly) -> Result<bool, UnivarError> {
    let deg = f.degree();
    if deg <= 0 {
        return Ok(false); // constants are units or zero, not irreducible
    }
    if deg == 1 {
        return Ok(true);
    }
    if deg > 8 {
        return Err(UnivarError::DegreeTooHigh(deg as usize));
    }
    let fi = f.primitive_integer();
    let n = fi.len() - 1;

    // linear factors via the rational root theorem
    if fi[0].is_zero() {
        return Ok(false); // t divides
    }
    for p in all_divisors(&fi[0]) {
        for q in all_divisors(fi.last().unwrap()) {
            if q.is_negative() {
                continue;
            }
            let root = BigRational::new(p.clone(), q.clone());
            if f.eval(&root).is_zero() {
                return Ok(false);
            }
        }
    }
    if n <= 3 {
        return Ok(true);
    }

    // rule out factor degrees with mod-p patterns
    let mut candidates: Vec<usize> = (2..=n / 2).collect();
    for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        if candidates.is_empty() {
            break;
        }
        if let Some(ms) = factor_degree_multiset(&fi, p) {
            let possible = proper_factor_degrees(&ms, n);
            candidates.retain(|d| possible.contains(d));
        }
    }
    if candidates.is_empty() {
        return Ok(true);
    }

    // Kronecker search for the remaining degrees
    for d in candidates {
        if kronecker_has_factor(&fi, d)? {
            return Ok(false);
        }
    }
    Ok(true)
}

const KRONECKER_BUDGET: u64 = 2_000_000;

fn kronecker_has_factor(f: &[BigInt], d: usize) -> Result<bool, UnivarError> {
    let fq = UniPoly::new(
        f.iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect(),
    );
    // evaluation points 0, 1, -1, 2, -2, ...
    let points: Vec<BigInt> = (0..=d as i64)
        .map(|i| {
            let k = (i + 1) / 2;
            BigInt::from(if i % 2 == 1 { k } else { -k })
        })
        .collect();
    let mut divisor_sets: Vec<Vec<BigInt>> = Vec::new();
    let mut budget = 1u64;
    for pt in &points {
        let v = fq.eval(&BigRational::from_integer(pt.clone()));
        let v = v.to_integer();
        if v.is_zero() {
            return Ok(true); // integer root found
        }
        let divs = all_divisors(&v);
        budget = budget.saturating_mul(divs.len() as u64);
        divisor_sets.push(divs);
    }
    if budget > KRONECKER_BUDGET {
        return Err(UnivarError::Undecided);
    }
    // iterate the product of divisor choices, interpolate, and test division
    let mut index = vec![0usize; divisor_sets.len()];
    loop {
        let values: Vec<BigRational> = index
            .iter()
            .zip(&divisor_sets)
            .map(|(&i, s)| BigRational::from_integer(s[i].clone()))
            .collect();
        if let Some(cand) = lagrange_interpolate(&points, &values) {
            if cand.degree() == d as i64 && cand.divides(&fq) {
                return Ok(true);
            }
        }
        // advance the mixed-radix counter
        let mut k = 0;
        loop {
            if k == index.len() {
                return Ok(false);
            }
            index[k] += 1;
            if index[k] < divisor_sets[k].len() {
                break;
            }
            index[k] = 0;
            k += 1;
        }
    }
}

fn lagrange_interpolate(points: &[BigInt], values: &[BigRational]) -> Option<UniPoly> {
    let mut acc = UniPoly::zero();
    for (i, (pi, vi)) in points.iter().zip(values).enumerate() {
        let mut basis = UniPoly::new(vec![BigRational::one()]);
        let mut denom = BigRational::one();
        for (j, pj) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&UniPoly::new(vec![
                BigRational::from_integer(-pj.clone()),
                BigRational::one(),
            ]));
            denom *= BigRational::from_integer(pi - pj);
        }
        let scale = vi / denom;
        acc = acc.add(&UniPoly::new(basis.0.iter().map(|c| c * &scale).collect()));
    }
    Some(acc)
}
