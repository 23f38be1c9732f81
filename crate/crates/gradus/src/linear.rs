//! Exact linear algebra over the rationals: row spaces of polynomials keyed
//! by their monomials, kernel tracking, and Fourier-Motzkin feasibility.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::{Exponents, Polynomial};

/// A vector space of polynomials in reduced row-echelon form over the
/// monomial coordinate frame. Pivot monomials are the largest exponent key
/// of each row; every pivot appears in exactly one row.
#[derive(Clone, Debug)]
pub struct PolySpace {
    rows: Vec<Polynomial>,
    pivots: Vec<Exponents>,
}

impl PolySpace {
    pub fn new() -> PolySpace {
        PolySpace {
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Polynomial] {
        &self.rows
    }

    fn pivot_of(p: &Polynomial) -> Exponents {
        p.max_exponents().expect("nonzero polynomial").clone()
    }

    /// Residual of `p` after eliminating all pivot monomials of the basis.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        self.reduce_tracked(p).0
    }

    /// Residual plus the coefficients of the basis rows that were subtracted:
    /// `p = residual + sum_i coeffs[i] * rows[i]`.
    pub fn reduce_tracked(&self, p: &Polynomial) -> (Polynomial, Vec<BigRational>) {
        let mut coeffs = vec![BigRational::zero(); self.rows.len()];
        let mut current = p.clone();
        loop {
            let mut changed = false;
            for (i, (row, pivot)) in self.rows.iter().zip(&self.pivots).enumerate() {
                let c = current.coeff(pivot);
                if !c.is_zero() {
                    current = current.sub(&row.scale(&c)).expect("same ring");
                    coeffs[i] += c;
                    changed = true;
                }
            }
            if !changed {
                return (current, coeffs);
            }
        }
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }

    /// Insert a polynomial; returns true if the dimension grew.
    pub fn insert(&mut self, p: &Polynomial) -> bool {
        let residual = self.reduce(p);
        if residual.is_zero() {
            return false;
        }
        let pivot = Self::pivot_of(&residual);
        let lead = residual.coeff(&pivot);
        let normalized = residual.scale(&lead.recip());
        // back-eliminate the new pivot from existing rows
        for row in &mut self.rows {
            let c = row.coeff(&pivot);
            if !c.is_zero() {
                *row = row.sub(&normalized.scale(&c)).expect("same ring");
            }
        }
        self.rows.push(normalized);
        self.pivots.push(pivot);
        true
    }

    pub fn insert_all<'a, I: IntoIterator<Item = &'a Polynomial>>(&mut self, polys: I) {
        for p in polys {
            self.insert(p);
        }
    }

    /// Express `p` as an exact combination of the basis rows, if possible.
    pub fn express(&self, p: &Polynomial) -> Option<Vec<BigRational>> {
        let (residual, coeffs) = self.reduce_tracked(p);
        if residual.is_zero() {
            Some(coeffs)
        } else {
            None
        }
    }
}

impl Default for PolySpace {
    fn default() -> Self {
        Self::new()
    }
}

/// Kernel computation for a linear map on a list of polynomials: images are
/// row-reduced while the preimage combination is carried along. Inserting a
/// pair whose image is dependent yields the corresponding kernel element.
#[derive(Clone, Debug)]
pub struct TrackedSpace {
    image_rows: Vec<Polynomial>,
    image_pivots: Vec<Exponents>,
    preimages: Vec<Polynomial>,
}

impl TrackedSpace {
    pub fn new() -> TrackedSpace {
        TrackedSpace {
            image_rows: Vec::new(),
            image_pivots: Vec::new(),
            preimages: Vec::new(),
        }
    }

    /// Returns `Some(kernel_element)` when `image` is linearly dependent on
    /// the rows inserted so far; the element is the matching combination of
    /// preimages subtracted from `preimage`.
    pub fn insert(&mut self, image: Polynomial, preimage: Polynomial) -> Option<Polynomial> {
        let mut img = image;
        let mut pre = preimage;
        loop {
            let mut changed = false;
            for i in 0..self.image_rows.len() {
                let c = img.coeff(&self.image_pivots[i]);
                if !c.is_zero() {
                    img = img.sub(&self.image_rows[i].scale(&c)).expect("same ring");
                    pre = pre.sub(&self.preimages[i].scale(&c)).expect("same ring");
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if img.is_zero() {
            return Some(pre);
        }
        let pivot = img.max_exponents().expect("nonzero image").clone();
        let lead = img.coeff(&pivot);
        let inv = lead.recip();
        self.image_rows.push(img.scale(&inv));
        self.preimages.push(pre.scale(&inv));
        self.image_pivots.push(pivot);
        None
    }
}

impl Default for TrackedSpace {
    fn default() -> Self {
        Self::new()
    }
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin elimination.

/// One linear constraint `sum coeffs[k] * x_k >= rhs`.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub rhs: BigRational,
}

impl Constraint {
    pub fn new(coeffs: Vec<BigRational>, rhs: BigRational) -> Constraint {
        Constraint { coeffs, rhs }
    }
}

/// Exact feasibility for a system of weak linear inequalities by
/// Fourier-Motzkin elimination; returns a rational solution when one exists.
/// Intended for tiny dimension (n <= 4 in all uses).
pub fn feasible_point(n_vars: usize, constraints: &[Constraint]) -> Option<Vec<BigRational>> {
    if n_vars == 0 {
        return if constraints.iter().all(|c| !c.rhs.is_positive()) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let last = n_vars - 1;
    let mut lowers: Vec<Constraint> = Vec::new(); // x_last >= expr
    let mut uppers: Vec<Constraint> = Vec::new(); // x_last <= expr
    let mut rest: Vec<Constraint> = Vec::new();
    for c in constraints {
        let a = &c.coeffs[last];
        if a.is_zero() {
            rest.push(Constraint::new(c.coeffs[..last].to_vec(), c.rhs.clone()));
        } else {
            // a*x + <b, y> >= r  <=>  x >= (r - <b,y>)/a  (a > 0), else <=
            let inv = a.recip();
            let coeffs: Vec<BigRational> =
                c.coeffs[..last].iter().map(|b| -(b * &inv)).collect();
            let bound = Constraint::new(coeffs, BigRational::zero());
            // store as x >= rhs_const + <coeffs, y> with rhs in .rhs
            let mut stored = bound;
            stored.rhs = &c.rhs * &inv;
            if a.is_positive() {
                lowers.push(stored);
            } else {
                uppers.push(stored);
            }
        }
    }
    // each (lower, upper) pair projects to upper_expr >= lower_expr
    for lo in &lowers {
        for up in &uppers {
            let coeffs: Vec<BigRational> = up
                .coeffs
                .iter()
                .zip(&lo.coeffs)
                .map(|(u, l)| u - l)
                .collect();
            let rhs = &lo.rhs - &up.rhs;
            rest.push(Constraint::new(coeffs, rhs));
        }
    }
    let partial = feasible_point(last, &rest)?;
    let eval = |c: &Constraint| -> BigRational {
        let mut acc = c.rhs.clone();
        for (b, v) in c.coeffs.iter().zip(&partial) {
            acc += b * v;
        }
        acc
    };
    let low = lowers.iter().map(&eval).max();
    let high = uppers.iter().map(&eval).min();
    let value = match (low, high) {
        (Some(l), Some(h)) => {
            debug_assert!(l <= h);
            (&l + &h) / BigRational::from_integer(BigInt::from(2))
        }
        (Some(l), None) => l,
        (None, Some(h)) => h,
        (None, None) => BigRational::zero(),
    };
    let mut out = partial;
    out.push(value);
    Some(out)
}

/// Scale a rational point to integers by the lcm of denominators. Only valid
/// for constraint systems that are stable under scaling by integers >= 1
/// (homogeneous inequalities, or right-hand sides in {
/// 0, 1}).
pub fn scale_to_integers(point: &[BigRational]) -> Vec<i64> {
    let mut lcm = BigInt::one();
    for q in point {
        lcm = lcm.lcm(q.denom());
    }
    point
        .iter()
        .map(|q| {
            let v = q * BigRational::from_integer(lcm.clone());
            debug_assert!(v.is_integer());
            i64::try_from(v.to_integer()).expect("witness exponent fits i64")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;
    use crate::rational::{rational, rational_from_i64 as ri};

    #[test]
    fn row_space_membership_and_expression() {
        let r = Ring::new(&["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let one = Polynomial::one(&r);
        let mut space = PolySpace::new();
        assert!(space.insert(&x.add(&one).unwrap()));
        assert!(space.insert(&y.sub(&one).unwrap()));
        assert!(!space.insert(&x.add(&y).unwrap())); // (x+1) + (y-1)
        let target = x.add(&y).unwrap();
        let coeffs = space.express(&target).unwrap();
        let mut rebuilt = Polynomial::zero(&r);
        for (c, row) in coeffs.iter().zip(space.rows()) {
            rebuilt = rebuilt.add(&row.scale(c)).unwrap();
        }
        assert_eq!(rebuilt, target);
        assert!(!space.contains(&x));
    }

    #[test]
    fn tracked_space_finds_kernel_combinations() {
        let r = Ring::new(&["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let mut t = TrackedSpace::new();
        // map b -> b's "image"; send x and y to the same image
        assert!(t.insert(x.clone(), x.clone()).is_none());
        let kernel = t.insert(x.clone(), y.clone()).unwrap();
        assert_eq!(kernel, y.sub(&x).unwrap());
    }

    #[test]
    fn fourier_motzkin_solves_strict_dominance() {
        // alpha with <(1,0), a> >= <(0,1), a> + 1 over Z^2: e.g. (1,-1)
        let cons = vec![Constraint::new(vec![ri(1), ri(-1)], ri(1))];
        let point = feasible_point(2, &cons).unwrap();
        let alpha = scale_to_integers(&point);
        assert!(alpha[0] - alpha[1] >= 1);
        // infeasible: x >= 1 and -x >= 0
        let cons = vec![
            Constraint::new(vec![ri(1)], ri(1)),
            Constraint::new(vec![ri(-1)], ri(0)),
        ];
        assert!(feasible_point(1, &cons).is_none());
        // bounded strip
        let cons = vec![
            Constraint::new(vec![ri(1)], rational(1, 2)),
            Constraint::new(vec![ri(-1)], ri(-3)),
        ];
        let p = feasible_point(1, &cons).unwrap();
        assert!(p[0] >= rational(1, 2) && p[0] <= ri(3));
    }
}
