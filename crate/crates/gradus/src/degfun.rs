//! Degree-like functions: weighted semidegrees, pullback semidegrees,
//! iterated semidegrees, quasidegrees (maxima of semidegrees), and a
//! univariate staircase used as a counterexample function.
//!
//! A degree-like function maps nonzero ring elements to integers with
//! delta(f+g) <= max(delta(f), delta(g)) (strict < forcing equality of the
//! two) and delta(fg) <= delta(f) + delta(g); semidegrees satisfy the
//! product rule with equality. delta(0) is the bottom element.

use std::cmp::Ordering;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::iterate::IteratedSemidegree;
use crate::linear::{feasible_point, scale_to_integers, Constraint};
use crate::poly::{Exponents, PolyError, Polynomial, Ring};
use crate::rational::rational_from_i64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DegfunError {
    #[error("polynomial does not live in the ring this degree function expects")]
    RingMismatch,
    #[error("leading form of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("leading forms of iterated semidegrees are not supported")]
    UnsupportedSemidegreeKind,
    #[error("quasidegree parts are defined on incompatible rings")]
    UnsupportedPartKind,
    #[error("substitution is not triangular: {0}")]
    NotTriangular(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Value of a degree-like function: an integer or the bottom element,
/// reserved for the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeValue {
    NegInfinity,
    Finite(i64),
}

impl DegreeValue {
    pub fn finite(self) -> Option<i64> {
        match self {
            DegreeValue::Finite(v) => Some(v),
            DegreeValue::NegInfinity => None,
        }
    }

    pub fn add_i64(self, k: i64) -> DegreeValue {
        self + DegreeValue::Finite(k)
    }

    pub fn times(self, m: i64) -> DegreeValue {
        match self {
            DegreeValue::Finite(v) => DegreeValue::Finite(v.checked_mul(m).expect("overflow")),
            DegreeValue::NegInfinity => DegreeValue::NegInfinity,
        }
    }
}

impl std::ops::Add for DegreeValue {
    type Output = DegreeValue;

    fn add(self, other: DegreeValue) -> DegreeValue {
        match (self, other) {
            (DegreeValue::Finite(a), DegreeValue::Finite(b)) => {
                DegreeValue::Finite(a.checked_add(b).expect("degree overflow"))
            }
            _ => DegreeValue::NegInfinity,
        }
    }
}

impl PartialOrd for DegreeValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DegreeValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (DegreeValue::NegInfinity, DegreeValue::NegInfinity) => Ordering::Equal,
            (DegreeValue::NegInfinity, _) => Ordering::Less,
            (_, DegreeValue::NegInfinity) => Ordering::Greater,
            (DegreeValue::Finite(a), DegreeValue::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for DegreeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeValue::NegInfinity => write!(f, "-inf"),
            DegreeValue::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for DegreeValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            DegreeValue::Finite(v) => s.serialize_i64(*v),
            DegreeValue::NegInfinity => s.serialize_str("-inf"),
        }
    }
}

// ---------------------------------------------------------------------------

/// Weighted degree: the maximum of `<weights, alpha>` over the support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDegree {
    pub weights: Vec<i64>,
    pub laurent_ok: bool,
}

impl WeightedDegree {
    pub fn new(weights: &[i64]) -> WeightedDegree {
        WeightedDegree {
            weights: weights.to_vec(),
            laurent_ok: false,
        }
    }

    pub fn laurent(weights: &[i64]) -> WeightedDegree {
        WeightedDegree {
            weights: weights.to_vec(),
            laurent_ok: true,
        }
    }

    pub fn n_vars(&self) -> usize {
        self.weights.len()
    }

    pub fn monomial_value(&self, exps: &[i64]) -> i64 {
        self.weights
            .iter()
            .zip(exps)
            .map(|(w, e)| w.checked_mul(*e).expect("degree overflow"))
            .sum()
    }

    pub fn evaluate(&self, f: &Polynomial) -> Result<DegreeValue, DegfunError> {
        if f.n_vars() != self.n_vars() {
            return Err(DegfunError::RingMismatch);
        }
        if f.ring().is_laurent() && !self.laurent_ok {
            return Err(DegfunError::RingMismatch);
        }
        Ok(f.terms()
            .map(|(e, _)| DegreeValue::Finite(self.monomial_value(e)))
            .max()
            .unwrap_or(DegreeValue::NegInfinity))
    }

    /// Terms realizing the maximum weight.
    pub fn leading_form(&self, f: &Polynomial) -> Result<Polynomial, DegfunError> {
        if f.is_zero() {
            return Err(DegfunError::ZeroPolynomial);
        }
        let top = self
            .evaluate(f)?
            .finite()
            .expect("nonzero polynomial has finite weighted degree");
        let terms: Vec<_> = f
            .terms()
            .filter(|(e, _)| self.monomial_value(e) == top)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Ok(Polynomial::from_terms(f.ring(), terms)?)
    }
}

/// Triangular shift substitution `x_i -> x_i + g_i`, where the dependency
/// graph of the shifts is acyclic, so back-substitution inverts it exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangularSubstitution {
    ring: Arc<Ring>,
    shifts: Vec<Polynomial>,
    topo: Vec<usize>, // variables in an order where shifts use later ones only
}

impl TriangularSubstitution {
    /// `shifts[i]` is added to variable `i`; it must not involve variable
    /// `i` itself and the dependency graph must be acyclic.
    pub fn new(ring: &Arc<Ring>, shifts: Vec<Polynomial>) -> Result<Self, DegfunError> {
        let n = ring.n_vars();
        assert_eq!(shifts.len(), n, "one shift per variable");
        let uses = |g: &Polynomial, j: usize| g.terms().any(|(e, _)| e[j] != 0);
        for (i, g) in shifts.iter().enumerate() {
            if g.ring() != ring {
                return Err(DegfunError::RingMismatch);
            }
            if uses(g, i) {
                return Err(DegfunError::NotTriangular(format!(
                    "shift of {} involves the variable itself",
                    ring.var_names()[i]
                )));
            }
        }
        // topological order of the dependency graph
        let mut deps: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, g) in shifts.iter().enumerate() {
            for j in 0..n {
                if uses(g, j) {
                    deps[i].push(j);
                }
            }
        }
        let mut state = vec![0u8; n]; // 0 unvisited, 1 in progress, 2 done
        let mut topo = Vec::new();
        fn visit(
            v: usize,
            deps: &[Vec<usize>],
            state: &mut [u8],
            topo: &mut Vec<usize>,
        ) -> Result<(), ()> {
            match state[v] {
                2 => return Ok(()),
                1 => return Err(()),
                _ => {}
            }
            state[v] = 1;
            for &w in &deps[v] {
                visit(w, deps, state, topo)?;
            }
            state[v] = 2;
            topo.push(v);
            Ok(())
        }
        for v in 0..n {
            visit(v, &deps, &mut state, &mut topo)
                .map_err(|_| DegfunError::NotTriangular("cyclic shift dependencies".into()))?;
        }
        Ok(TriangularSubstitution {
            ring: ring.clone(),
            shifts,
            topo,
        })
    }

    /// Shift a single variable: `x_index -> x_index + g`.
    pub fn single(ring: &Arc<Ring>, index: usize, g: Polynomial) -> Result<Self, DegfunError> {
        let mut shifts: Vec<Polynomial> = (0..ring.n_vars())
            .map(|_| Polynomial::zero(ring))
            .collect();
        shifts[index] = g;
        TriangularSubstitution::new(ring, shifts)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn shifts(&self) -> &[Polynomial] {
        &self.shifts
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial, DegfunError> {
        if f.ring() != &self.ring {
            return Err(DegfunError::RingMismatch);
        }
        let images: Vec<Polynomial> = (0..self.ring.n_vars())
            .map(|i| {
                Polynomial::var(&self.ring, i)
                    .add(&self.shifts[i])
                    .expect("same ring")
            })
            .collect();
        Ok(f.substitute(&images)?)
    }

    /// Polynomials `u_i` with `apply(u_i) = x_i`, built by back-substitution
    /// in reverse dependency order. These are the coordinate generators of
    /// the pullback frame.
    pub fn inverse_generators(&self) -> Vec<Polynomial> {
        let n = self.ring.n_vars();
        let mut inv: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&self.ring, i)).collect();
        for &i in &self.topo {
            // inv[i] = x_i - shifts[i](inv)
            let shifted = self
                .shifts[i]
                .substitute(&inv)
                .expect("same ring substitution");
            inv[i] = Polynomial::var(&self.ring, i)
                .sub(&shifted)
                .expect("same ring");
        }
        inv
    }
}

/// Weighted degree read in sheared coordinates: the value of `f` is the base
/// weighted degree of `f` after the triangular substitution.
#[derive(Debug, Clone, PartialEq)]
pub struct PullbackSemidegree {
    pub substitution: TriangularSubstitution,
    pub base: WeightedDegree,
}

impl PullbackSemidegree {
    pub fn new(
        substitution: TriangularSubstitution,
        base: WeightedDegree,
    ) -> Result<Self, DegfunError> {
        if base.n_vars() != substitution.ring().n_vars() {
            return Err(DegfunError::RingMismatch);
        }
        Ok(PullbackSemidegree { substitution, base })
    }

    pub fn evaluate(&self, f: &Polynomial) -> Result<DegreeValue, DegfunError> {
        self.base.evaluate(&self.substitution.apply(f)?)
    }

    /// Leading form in the pullback coordinates.
    pub fn leading_form(&self, f: &Polynomial) -> Result<Polynomial, DegfunError> {
        if f.is_zero() {
            return Err(DegfunError::ZeroPolynomial);
        }
        self.base.leading_form(&self.substitution.apply(f)?)
    }
}

/// Any semidegree the library can represent.
#[derive(Debug, Clone)]
pub enum Semidegree {
    Weighted(WeightedDegree),
    Pullback(PullbackSemidegree),
    Iterated(IteratedSemidegree),
}

impl Semidegree {
    pub fn evaluate(&self, f: &Polynomial) -> Result<DegreeValue, DegfunError> {
        match self {
            Semidegree::Weighted(w) => w.evaluate(f),
            Semidegree::Pullback(p) => p.evaluate(f),
            Semidegree::Iterated(it) => it.evaluate(f),
        }
    }

    pub fn n_vars(&self) -> usize {
        match self {
            Semidegree::Weighted(w) => w.n_vars(),
            Semidegree::Pullback(p) => p.base.n_vars(),
            Semidegree::Iterated(it) => it.n_vars(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Semidegree::Weighted(w) => format!("weighted{:?}", w.weights),
            Semidegree::Pullback(p) => format!(
                "pullback{:?} after shifts [{}]",
                p.base.weights,
                p.substitution
                    .shifts()
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
            Semidegree::Iterated(it) => it.describe(),
        }
    }
}

/// Leading form of `f` under a semidegree whose graded pieces are spanned by
/// monomial images (weighted or pullback kinds).
pub fn leading_form(d: &Semidegree, f: &Polynomial) -> Result<Polynomial, DegfunError> {
    match d {
        Semidegree::Weighted(w) => w.leading_form(f),
        Semidegree::Pullback(p) => p.leading_form(f),
        Semidegree::Iterated(_) => Err(DegfunError::UnsupportedSemidegreeKind),
    }
}

/// Pointwise maximum of finitely many semidegrees.
#[derive(Debug, Clone)]
pub struct Quasidegree {
    parts: Vec<Semidegree>,
    minimal: bool,
}

impl Quasidegree {
    pub fn new(parts: Vec<Semidegree>) -> Result<Quasidegree, DegfunError> {
        assert!(!parts.is_empty(), "a quasidegree needs at least one part");
        let n = parts[0].n_vars();
        if parts.iter().any(|p| p.n_vars() != n) {
            return Err(DegfunError::UnsupportedPartKind);
        }
        Ok(Quasidegree {
            parts,
            minimal: false,
        })
    }

    pub fn parts(&self) -> &[Semidegree] {
        &self.parts
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn n_vars(&self) -> usize {
        self.parts[0].n_vars()
    }

    pub fn evaluate(&self, f: &Polynomial) -> Result<DegreeValue, DegfunError> {
        let mut best = DegreeValue::NegInfinity;
        for part in &self.parts {
            best = best.max(part.evaluate(f)?);
        }
        Ok(best)
    }

    /// Drop parts that are provably redundant and mark the presentation
    /// minimal when every surviving part has a verified witness. Parts are
    /// only dropped when the witness search is conclusive for them.
    pub fn minimize(mut self, ring: &Arc<Ring>) -> Result<Quasidegree, DegfunError> {
        loop {
            if self.parts.len() == 1 {
                self.minimal = true;
                return Ok(self);
            }
            let mut drop_index = None;
            let mut all_found = true;
            for i in 0..self.parts.len() {
                match nonredundancy_witness(&self, ring, i)? {
                    WitnessOutcome::Found(_) => {}
                    WitnessOutcome::NotFound { conclusive } => {
                        all_found = false;
                        if conclusive {
                            drop_index = Some(i);
                            break;
                        }
                    }
                }
            }
            match drop_index {
                Some(i) => {
                    self.parts.remove(i);
                }
                None => {
                    self.minimal = all_found;
                    return Ok(self);
                }
            }
        }
    }
}

/// Staircase monomial rule on a univariate ring: the value of `x^k` is
/// `ceil(num*k/den)`; subadditive but not multiplicative when den > 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseDegree {
    pub num: i64,
    pub den: i64,
}

impl StaircaseDegree {
    pub fn new(num: i64, den: i64) -> StaircaseDegree {
        assert!(den > 0 && num > 0);
        StaircaseDegree { num, den }
    }

    pub fn monomial_value(&self, k: i64) -> i64 {
        // ceiling of num*k/den for k >= 0
        let prod = self.num.checked_mul(k).expect("degree overflow");
        prod.div_euclid(self.den) + i64::from(prod.rem_euclid(self.den) != 0)
    }

    pub fn evaluate(&self, f: &Polynomial) -> Result<DegreeValue, DegfunError> {
        if f.n_vars() != 1 || f.ring().is_laurent() {
            return Err(DegfunError::RingMismatch);
        }
        Ok(f.terms()
            .map(|(e, _)| DegreeValue::Finite(self.monomial_value(e[0])))
            .max()
            .unwrap_or(DegreeValue::NegInfinity))
    }
}

/// Tagged union of every representable degree-like function.
#[derive(Debug, Clone)]
pub enum DegreeFunction {
    Weighted(WeightedDegree),
    Pullback(PullbackSemidegree),
    Iterated(IteratedSemidegree),
    Quasidegree(Quasidegree),
    Staircase(StaircaseDegree),
}

impl DegreeFunction {
    pub fn evaluate(&self, f: &Polynomial) -> Result<DegreeValue, DegfunError> {
        match self {
            DegreeFunction::Weighted(w) => w.evaluate(f),
            DegreeFunction::Pullback(p) => p.evaluate(f),
            DegreeFunction::Iterated(it) => it.evaluate(f),
            DegreeFunction::Quasidegree(q) => q.evaluate(f),
            DegreeFunction::Staircase(s) => s.evaluate(f),
        }
    }

    pub fn as_semidegree(&self) -> Option<Semidegree> {
        match self {
            DegreeFunction::Weighted(w) => Some(Semidegree::Weighted(w.clone())),
            DegreeFunction::Pullback(p) => Some(Semidegree::Pullback(p.clone())),
            DegreeFunction::Iterated(it) => Some(Semidegree::Iterated(it.clone())),
            _ => None,
        }
    }
}

// ---------------------------------------------------------------------------
// Axiom checking.

/// Sampling plan for the axiom checkers; fixed seed gives fixed reports.
#[derive(Debug, Clone)]
pub struct SampleSpec {
    pub degree_bound: i64,
    pub random_pairs: usize,
    pub seed: u64,
    pub max_terms: usize,
    pub coeff_bound: i64,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec {
            degree_bound: 6,
            random_pairs: 1000,
            seed: 1,
            max_terms: 6,
            coeff_bound: 100,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AxiomRule {
    /// delta(f+g) <= max(delta f, delta g)
    SumBound,
    /// strict < in the sum rule must force delta f = delta g
    StrictSumForcesEquality,
    /// delta(fg) <= delta f + delta g
    ProductBound,
    /// delta(constant) <= 0
    ConstantNonpositive,
    /// semidegree only: delta(fg) = delta f + delta g
    ProductEquality,
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub rule: AxiomRule,
    pub f: String,
    pub g: String,
    pub left: DegreeValue,
    pub right: DegreeValue,
}

/// Outcome of the axiom sweep. Degree-like failures live in `violations`;
/// `product_equality_failures` records where the product rule is strict,
/// which only counts against semidegree claims.
#[derive(Debug, Clone, Serialize, Default)]
pub struct AxiomReport {
    pub checked_monomial_pairs: usize,
    pub checked_random_pairs: usize,
    pub violations: Vec<Violation>,
    pub product_equality_failures: Vec<Violation>,
}

impl AxiomReport {
    pub fn degree_like_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn semidegree_ok(&self) -> bool {
        self.violations.is_empty() && self.product_equality_failures.is_empty()
    }
}

fn record_pair(
    d: &DegreeFunction,
    f: &Polynomial,
    g: &Polynomial,
    report: &mut AxiomReport,
) -> Result<(), DegfunError> {
    let df = d.evaluate(f)?;
    let dg = d.evaluate(g)?;
    let sum = f.add(g)?;
    let dsum = d.evaluate(&sum)?;
    let bound = df.max(dg);
    if dsum > bound {
        report.violations.push(Violation {
            rule: AxiomRule::SumBound,
            f: f.to_string(),
            g: g.to_string(),
            left: dsum,
            right: bound,
        });
    } else if dsum < bound && df != dg {
        report.violations.push(Violation {
            rule: AxiomRule::StrictSumForcesEquality,
            f: f.to_string(),
            g: g.to_string(),
            left: df,
            right: dg,
        });
    }
    let prod = f.mul(g)?;
    let dprod = d.evaluate(&prod)?;
    let psum = df + dg;
    if dprod > psum {
        report.violations.push(Violation {
            rule: AxiomRule::ProductBound,
            f: f.to_string(),
            g: g.to_string(),
            left: dprod,
            right: psum,
        });
    } else if dprod < psum {
        report.product_equality_failures.push(Violation {
            rule: AxiomRule::ProductEquality,
            f: f.to_string(),
            g: g.to_string(),
            left: dprod,
            right: psum,
        });
    }
    Ok(())
}

fn enumerate_monomials(ring: &Arc<Ring>, bound: i64) -> Vec<Polynomial> {
    let n = ring.n_vars();
    let mut out = Vec::new();
    let mut exps = vec![if ring.is_laurent() { -bound } else { 0 }; n];
    loop {
        let total: i64 = exps.iter().map(|e| e.abs()).sum();
        if total <= bound && total > 0 {
            out.push(Polynomial::monomial(
                ring,
                exps.clone(),
                rational_from_i64(1),
            ));
        }
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            exps[i] += 1;
            if exps[i] <= bound {
                break;
            }
            exps[i] = if ring.is_laurent() { -bound } else { 0 };
            i += 1;
        }
    }
}

pub fn random_polynomial(ring: &Arc<Ring>, spec: &SampleSpec, rng: &mut ChaCha8Rng) -> Polynomial {
    let n = ring.n_vars();
    let n_terms = rng.gen_range(1..=spec.max_terms);
    let mut terms = Vec::new();
    for _ in 0..n_terms {
        let mut exps = vec![0i64; n];
        let mut left = spec.degree_bound;
        for e in exps.iter_mut() {
            let lo = if ring.is_laurent() { -left } else { 0 };
            *e = rng.gen_range(lo..=left);
            left -= e.abs();
        }
        let mut c = 0i64;
        while c == 0 {
            c = rng.gen_range(-spec.coeff_bound..=spec.coeff_bound);
        }
        terms.push((exps, rational_from_i64(c)));
    }
    Polynomial::from_terms(ring, terms).expect("sampled exponents fit the ring")
}

/// Sweep the degree-like axioms over exhaustive monomial pairs plus seeded
/// random polynomial pairs; report-only, never panics on a violation.
pub fn check_degree_like(
    d: &DegreeFunction,
    ring: &Arc<Ring>,
    spec: &SampleSpec,
) -> Result<AxiomReport, DegfunError> {
    let mut report = AxiomReport::default();
    // constants
    for c in [-2i64, -1, 1, 2, 17] {
        let k = Polynomial::constant_i64(ring, c);
        let v = d.evaluate(&k)?;
        if v > DegreeValue::Finite(0) {
            report.violations.push(Violation {
                rule: AxiomRule::ConstantNonpositive,
                f: k.to_string(),
                g: String::new(),
                left: v,
                right: DegreeValue::Finite(0),
            });
        }
    }
    let monos = enumerate_monomials(ring, spec.degree_bound);
    for f in &monos {
        for g in &monos {
            record_pair(d, f, g, &mut report)?;
            report.checked_monomial_pairs += 1;
        }
    }
    // structured pairs: nonredundancy witnesses of quasidegree parts expose
    // strict submultiplicativity that random sampling misses
    if let DegreeFunction::Quasidegree(q) = d {
        let mut witnesses = Vec::new();
        for i in 0..q.parts().len() {
            if let WitnessOutcome::Found(w) = nonredundancy_witness(q, ring, i)? {
                witnesses.push(w.witness);
            }
        }
        for f in &witnesses {
            for g in &witnesses {
                record_pair(d, f, g, &mut report)?;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..spec.random_pairs {
        let f = random_polynomial(ring, spec, &mut rng);
        let g = random_polynomial(ring, spec, &mut rng);
        if f.is_zero() || g.is_zero() {
            continue;
        }
        record_pair(d, &f, &g, &mut report)?;
        report.checked_random_pairs += 1;
    }
    Ok(report)
}

/// Same sweep, but product-rule equality failures count as violations.
pub fn check_semidegree(
    d: &DegreeFunction,
    ring: &Arc<Ring>,
    spec: &SampleSpec,
) -> Result<AxiomReport, DegfunError> {
    check_degree_like(d, ring, spec)
}

// ---------------------------------------------------------------------------
// Nonredundancy witnesses.

/// A monomial-in-some-frame witness that part `i` strictly dominates every
/// other part somewhere.
#[derive(Debug, Clone)]
pub struct Witness {
    pub exponents: Exponents,
    pub frame: String,
    pub witness: Polynomial,
}

#[derive(Debug, Clone)]
pub enum WitnessOutcome {
    Found(Witness),
    /// `conclusive` is true only when the search space provably covers all
    /// candidates (all parts weighted in the shared frame), in which case
    /// NotFound means the part is redundant and may be dropped.
    NotFound {
        conclusive: bool,
    },
}

struct Frame {
    label: String,
    generators: Vec<Polynomial>,
    laurent: bool,
}

fn candidate_frames(q: &Quasidegree, ring: &Arc<Ring>) -> Vec<Frame> {
    let mut frames = vec![Frame {
        label: "monomial".to_string(),
        generators: (0..ring.n_vars())
            .map(|i| Polynomial::var(ring, i))
            .collect(),
        laurent: ring.is_laurent(),
    }];
    for (idx, part) in q.parts().iter().enumerate() {
        if let Semidegree::Pullback(p) = part {
            let gens = p.substitution.inverse_generators();
            if frames.iter().any(|f| f.generators == gens) {
                continue;
            }
            frames.push(Frame {
                label: format!("pullback-part-{idx}"),
                generators: gens,
                laurent: false,
            });
        }
    }
    frames
}

/// Search for a monomial witness of part `i`'s non-redundancy: an exponent
/// `alpha` (in some admissible coordinate frame) with
/// `delta_i(m^alpha) > delta_j(m^alpha)` for every other part `j`.
///
/// Because every part is multiplicative, part values are linear in the frame
/// exponent, so strict dominance is an exact Fourier-Motzkin feasibility
/// problem. Every returned witness is re-verified by direct evaluation.
pub fn nonredundancy_witness(
    q: &Quasidegree,
    ring: &Arc<Ring>,
    i: usize,
) -> Result<WitnessOutcome, DegfunError> {
    assert!(i < q.parts().len());
    if q.n_vars() != ring.n_vars() {
        return Err(DegfunError::RingMismatch);
    }
    if q.parts().len() == 1 {
        let witness = Polynomial::one(ring);
        return Ok(WitnessOutcome::Found(Witness {
            exponents: vec![0; ring.n_vars()],
            frame: "monomial".to_string(),
            witness,
        }));
    }
    let all_weighted = q
        .parts()
        .iter()
        .all(|p| matches!(p, Semidegree::Weighted(_)));
    for frame in candidate_frames(q, ring) {
        // value matrix: rows are parts, columns frame generators
        let mut values: Vec<Vec<i64>> = Vec::new();
        let mut ok = true;
        for part in q.parts() {
            let mut row = Vec::new();
            for g in &frame.generators {
                match part.evaluate(g)?.finite() {
                    Some(v) => row.push(v),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                break;
            }
            values.push(row);
        }
        if !ok {
            continue;
        }
        let n = frame.generators.len();
        let mut constraints = Vec::new();
        for (j, row) in values.iter().enumerate() {
            if j == i {
                continue;
            }
            let coeffs: Vec<BigRational> = (0..n)
                .map(|k| rational_from_i64(values[i][k] - row[k]))
                .collect();
            constraints.push(Constraint::new(coeffs, rational_from_i64(1)));
        }
        if !frame.laurent {
            for k in 0..n {
                let mut coeffs = vec![BigRational::zero(); n];
                coeffs[k] = rational_from_i64(1);
                constraints.push(Constraint::new(coeffs, BigRational::zero()));
            }
        }
        let Some(point) = feasible_point(n, &constraints) else {
            continue;
        };
        let alpha = scale_to_integers(&point);
        let mut witness = Polynomial::one(ring);
        for (k, &a) in alpha.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let factor = if a > 0 {
                frame.generators[k].pow(a as u32)
            } else {
                // negative exponents only in the Laurent monomial frame
                Polynomial::monomial(
                    ring,
                    {
                        let mut e = vec![0; ring.n_vars()];
                        e[k] = a;
                        e
                    },
                    rational_from_i64(1),
                )
            };
            witness = witness.mul(&factor)?;
        }
        // verify strict dominance by direct evaluation
        let vi = q.parts()[i].evaluate(&witness)?;
        let dominated = (0..q.parts().len())
            .filter(|&j| j != i)
            .all(|j| match q.parts()[j].evaluate(&witness) {
                Ok(vj) => vj < vi,
                Err(_) => false,
            });
        if dominated {
            return Ok(WitnessOutcome::Found(Witness {
                exponents: alpha,
                frame: frame.label,
                witness,
            }));
        }
    }
    Ok(WitnessOutcome::NotFound {
        conclusive: all_weighted,
    })
}

// ---------------------------------------------------------------------------
// Part recovery by stabilization.

#[derive(Debug, Clone, Serialize)]
pub struct StabilizationReport {
    pub sequence: Vec<DegreeValue>,
    /// `(value, k)` once the tail of the sequence is the constant `value`
    /// from index `k` on; `None` when not stabilized by the bound.
    pub stabilized: Option<(i64, usize)>,
}

/// The sequence `delta(f_i^k f) - delta(f_i^k)` for k = 0..k_max. For a
/// quasidegree this recovers the part value picked out by `f_i` once the
/// dominating part stabilizes.
pub fn recover_part_limit(
    d: &DegreeFunction,
    f_i: &Polynomial,
    f: &Polynomial,
    k_max: usize,
) -> Result<StabilizationReport, DegfunError> {
    let mut sequence = Vec::with_capacity(k_max + 1);
    let mut power = Polynomial::one(f_i.ring());
    for _ in 0..=k_max {
        let num = d.evaluate(&power.mul(f)?)?;
        let den = d.evaluate(&power)?;
        let value = match (num, den) {
            (DegreeValue::Finite(a), DegreeValue::Finite(b)) => DegreeValue::Finite(a - b),
            _ => DegreeValue::NegInfinity,
        };
        sequence.push(value);
        power = power.mul(f_i)?;
    }
    let stabilized = match sequence.last() {
        Some(DegreeValue::Finite(v)) => {
            let k0 = (0..sequence.len())
                .rev()
                .take_while(|&k| sequence[k] == DegreeValue::Finite(*v))
                .last()
                .unwrap_or(sequence.len() - 1);
            // require at least two agreeing tail entries to call it stable
            if sequence.len() - k0 >= 2 {
                Some((*v, k0))
            } else {
                None
            }
        }
        _ => None,
    };
    Ok(StabilizationReport {
        sequence,
        stabilized,
    })
}

/// Convenience: evaluate on a monomial given by exponents.
pub fn monomial_poly(ring: &Arc<Ring>, exps: Exponents) -> Polynomial {
    Polynomial::monomial(ring, exps, BigRational::from_integer(BigInt::from(1)))
}
