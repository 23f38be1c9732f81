//! Finitely generated filtrations as computable objects: graded pieces by
//! exact linear algebra, degree evaluation by membership, graded-ring
//! element bookkeeping, certificate-driven filtration constructions, the
//! sound preserves-at-infinity checker and the normalized degree probe.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::degfun::{DegfunError, DegreeFunction, DegreeValue};
use crate::linear::{PolySpace, TrackedSpace};
use crate::poly::{MonomialOrder, PolyError, Polynomial, Ring};
use crate::rational::format_rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReesError {
    #[error("certificate identity fails with nonzero residual: {0}")]
    CertificateIdentityFails(String),
    #[error("only principal ideals are supported, got {0} generators")]
    NotPrincipal(usize),
    #[error("certificate has a zero leading coefficient for variable {0}")]
    LeadingCoefficientZero(usize),
    #[error("certificate member {member} for ideal {ideal} is not a multiple of its generator")]
    MemberNotInIdeal { ideal: usize, member: String },
    #[error("certificate remainder for variable {0} is not univariate of lower degree")]
    BadRemainder(usize),
    #[error("element has level above the computed bound")]
    AboveBound,
    #[error("rees element level {level} is below the filtration degree {degree}")]
    LevelBelowDegree { level: i64, degree: i64 },
    #[error("filtration levels must be positive, got {0}")]
    NonpositiveLevel(i64),
    #[error("the powers-of-level-one closure only accepts level-1 generators")]
    GeneratorsAboveLevelOne,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Degfun(#[from] DegfunError),
}

/// How the graded pieces beyond the explicit spans are generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClosureRule {
    /// F_d = F_1^d
    PowersOfF1,
    /// F_d = sum over j of F_j F_(d-j), plus the explicit spans at level d
    Convolution,
}

/// Generator-level description of a finitely generated filtration. Level 0
/// is always the constants; explicit spans at positive levels are closed
/// under the chosen rule.
#[derive(Debug, Clone)]
pub struct FiltrationSpec {
    ring: Arc<Ring>,
    level_generators: BTreeMap<i64, Vec<Polynomial>>,
    closure: ClosureRule,
}

impl FiltrationSpec {
    pub fn new(
        ring: &Arc<Ring>,
        level_generators: BTreeMap<i64, Vec<Polynomial>>,
        closure: ClosureRule,
    ) -> Result<FiltrationSpec, ReesError> {
        for (&level, gens) in &level_generators {
            if level <= 0 {
                return Err(ReesError::NonpositiveLevel(level));
            }
            if closure == ClosureRule::PowersOfF1 && level != 1 {
                return Err(ReesError::GeneratorsAboveLevelOne);
            }
            for g in gens {
                if g.ring() != ring {
                    return Err(ReesError::Poly(PolyError::VariableMismatch));
                }
            }
        }
        Ok(FiltrationSpec {
            ring: ring.clone(),
            level_generators,
            closure,
        })
    }

    /// Convenience: a powers-of-F1 filtration from the level-1 span.
    pub fn powers_of_level_one(
        ring: &Arc<Ring>,
        gens: Vec<Polynomial>,
    ) -> Result<FiltrationSpec, ReesError> {
        FiltrationSpec::new(ring, BTreeMap::from([(1, gens)]), ClosureRule::PowersOfF1)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn level_generators(&self) -> &BTreeMap<i64, Vec<Polynomial>> {
        &self.level_generators
    }

    pub fn closure(&self) -> ClosureRule {
        self.closure
    }

    /// All nonconstant generators with their levels; together with the
    /// level shift these generate the graded ring.
    pub fn algebra_generators(&self) -> Vec<(Polynomial, i64)> {
        let mut out = Vec::new();
        for (&level, gens) in &self.level_generators {
            for g in gens {
                if !g.is_constant() {
                    out.push((g.clone(), level));
                }
            }
        }
        out
    }

    pub fn table(&self, d_max: i64) -> FiltrationTable {
        FiltrationTable::build(self, d_max)
    }
}

/// Graded pieces F_0 .. F_d_max as reduced row spaces over the monomial
/// frame. Build once, then query; instances are cheap to keep per thread.
#[derive(Debug, Clone)]
pub struct FiltrationTable {
    spec: FiltrationSpec,
    levels: Vec<PolySpace>,
}

impl FiltrationTable {
    fn build(spec: &FiltrationSpec, d_max: i64) -> FiltrationTable {
        assert!(d_max >= 0);
        let ring = spec.ring();
        let mut levels: Vec<PolySpace> = Vec::with_capacity(d_max as usize + 1);
        let mut f0 = PolySpace::new();
        f0.insert(&Polynomial::one(ring));
        levels.push(f0);
        for d in 1..=d_max {
            let mut space = levels[(d - 1) as usize].clone();
            if let Some(gens) = spec.level_generators.get(&d) {
                space.insert_all(gens);
            }
            // product spans: F_1 * F_(d-1) for the powers closure, all
            // complementary pairs for the convolution closure
            let pairs: Vec<(i64, i64)> = match spec.closure {
                ClosureRule::PowersOfF1 => {
                    if d >= 2 {
                        vec![(1, d - 1)]
                    } else {
                        Vec::new()
                    }
                }
                ClosureRule::Convolution => (1..d).map(|j| (j, d - j)).collect(),
            };
            for (j, k) in pairs {
                for a in levels[j as usize].rows().to_vec() {
                    for b in levels[k as usize].rows() {
                        space.insert(&a.mul(b).expect("same ring"));
                    }
                }
            }
            levels.push(space);
        }
        FiltrationTable {
            spec: spec.clone(),
            levels,
        }
    }

    pub fn spec(&self) -> &FiltrationSpec {
        &self.spec
    }

    pub fn d_max(&self) -> i64 {
        self.levels.len() as i64 - 1
    }

    pub fn level(&self, d: i64) -> &PolySpace {
        &self.levels[d as usize]
    }

    pub fn dim(&self, d: i64) -> usize {
        self.levels[d as usize].dim()
    }

    /// Smallest level containing `f`, or `AboveBound` past the table.
    pub fn degree(&self, f: &Polynomial) -> Result<DegreeValue, ReesError> {
        if f.is_zero() {
            return Ok(DegreeValue::NegInfinity);
        }
        for d in 0..=self.d_max() {
            if self.levels[d as usize].contains(f) {
                return Ok(DegreeValue::Finite(d));
            }
        }
        Err(ReesError::AboveBound)
    }
}

/// Smallest d <= d_max with `f` in the span of the computed F_d basis.
pub fn filtration_degree(
    spec: &FiltrationSpec,
    f: &Polynomial,
    d_max: i64,
) -> Result<DegreeValue, ReesError> {
    spec.table(d_max).degree(f)
}

/// An element of the graded ring: a polynomial placed at a level at least
/// its filtration degree.
#[derive(Debug, Clone, PartialEq)]
pub struct ReesElement {
    pub poly: Polynomial,
    pub level: i64,
}

impl ReesElement {
    /// Checked constructor; the table must already cover `level`.
    pub fn new(table: &FiltrationTable, poly: Polynomial, level: i64) -> Result<Self, ReesError> {
        let degree = table.degree(&poly)?;
        if let DegreeValue::Finite(d) = degree {
            if d > level {
                return Err(ReesError::LevelBelowDegree { level, degree: d });
            }
        }
        Ok(ReesElement { poly, level })
    }

    /// The distinguished degree-shift element (1 placed at level 1).
    pub fn shift(ring: &Arc<Ring>) -> ReesElement {
        ReesElement {
            poly: Polynomial::one(ring),
            level: 1,
        }
    }

    pub fn mul(&self, other: &ReesElement) -> Result<ReesElement, ReesError> {
        Ok(ReesElement {
            poly: self.poly.mul(&other.poly)?,
            level: self.level + other.level,
        })
    }
}

// ---------------------------------------------------------------------------
// Certificate-driven constructions.

/// Data certifying that each coordinate power lies in the ideal sum of the
/// target subvarieties up to a low-degree univariate remainder:
/// `x_i^(d_i) = f_(i,1) + ... + f_(i,m) + g_i` with `f_(i,j)` a multiple of
/// the j-th principal generator and `deg g_i < d_i`.
#[derive(Debug, Clone)]
pub struct IntersectionCertificate {
    pub ideal_generators: Vec<Polynomial>,
    pub entries: Vec<IntersectionEntry>,
}

#[derive(Debug, Clone)]
pub struct IntersectionEntry {
    pub var: usize,
    pub exponent: i64,
    pub members: Vec<Polynomial>,
    pub remainder: Polynomial,
}

impl IntersectionCertificate {
    /// Verify every identity exactly; errors carry the failing residual.
    pub fn verify(&self) -> Result<(), ReesError> {
        let ord = MonomialOrder::Lex;
        for entry in &self.entries {
            if entry.members.len() != self.ideal_generators.len() {
                return Err(ReesError::NotPrincipal(entry.members.len()));
            }
            let ring = entry.remainder.ring();
            // remainder univariate in entry.var of degree < exponent
            for (e, _) in entry.remainder.terms() {
                let univariate = (0..e.len()).all(|i| i == entry.var || e[i] == 0);
                if !univariate || e[entry.var] >= entry.exponent {
                    return Err(ReesError::BadRemainder(entry.var));
                }
            }
            let mut sum = entry.remainder.clone();
            for (j, member) in entry.members.iter().enumerate() {
                if !member.is_zero() {
                    let rem = member.reduce_mod(&self.ideal_generators[j], &ord)?;
                    if !rem.is_zero() {
                        return Err(ReesError::MemberNotInIdeal {
                            ideal: j,
                            member: member.to_string(),
                        });
                    }
                }
                sum = sum.add(member)?;
            }
            let mut e = vec![0i64; ring.n_vars()];
            e[entry.var] = entry.exponent;
            let power = Polynomial::monomial(ring, e, BigRational::one());
            let residual = power.sub(&sum)?;
            if !residual.is_zero() {
                return Err(ReesError::CertificateIdentityFails(residual.to_string()));
            }
        }
        Ok(())
    }
}

/// Filtration from a verified intersection certificate: the level-1 span is
/// the variables together with all ideal members, closed by powers.
pub fn build_from_intersection_certificate(
    cert: &IntersectionCertificate,
) -> Result<FiltrationSpec, ReesError> {
    cert.verify()?;
    let ring = cert
        .ideal_generators
        .first()
        .map(|g| g.ring().clone())
        .expect("at least one ideal");
    let mut gens: Vec<Polynomial> = (0..ring.n_vars())
        .map(|i| Polynomial::var(&ring, i))
        .collect();
    for entry in &cert.entries {
        for m in &entry.members {
            if !m.is_zero() && !m.is_constant() && !gens.contains(m) {
                gens.push(m.clone());
            }
        }
    }
    FiltrationSpec::powers_of_level_one(&ring, gens)
}

/// Integral-dependence data for a quasifinite map with components `f_i`:
/// for each source variable an identity
/// `sum_j g_(i,j)(f_1..f_n) x_i^(k_i - j) = 0` with `g_(i,0)` nonzero. The
/// `g_(i,j)` live in a separate ring of target coordinates.
#[derive(Debug, Clone)]
pub struct QuasifiniteCertificate {
    pub components: Vec<Polynomial>,
    pub target_ring: Arc<Ring>,
    pub entries: Vec<QuasifiniteEntry>,
}

#[derive(Debug, Clone)]
pub struct QuasifiniteEntry {
    pub var: usize,
    pub degree: i64,
    /// coefficients g_(i,0) .. g_(i,k_i) in the target coordinates
    pub coefficients: Vec<Polynomial>,
}

impl QuasifiniteCertificate {
    pub fn verify(&self) -> Result<(), ReesError> {
        for entry in &self.entries {
            assert_eq!(entry.coefficients.len() as i64, entry.degree + 1);
            if entry.coefficients[0].is_zero() {
                return Err(ReesError::LeadingCoefficientZero(entry.var));
            }
            let ring = self.components[0].ring();
            let mut sum = Polynomial::zero(ring);
            for (j, g) in entry.coefficients.iter().enumerate() {
                let pulled = g.substitute(&self.components)?;
                let mut e = vec![0i64; ring.n_vars()];
                e[entry.var] = entry.degree - j as i64;
                let power = Polynomial::monomial(ring, e, BigRational::one());
                sum = sum.add(&pulled.mul(&power)?)?;
            }
            if !sum.is_zero() {
                return Err(ReesError::CertificateIdentityFails(sum.to_string()));
            }
        }
        Ok(())
    }
}

/// Filtration from a verified quasifinite certificate, following the
/// integral-dependence recipe: level 1 is spanned by the variables, the map
/// components, the pulled-back monomial downsets of the top coefficients and
/// the variable-times-downset terms of the next coefficients; level k adds
/// `x_i^k` times the downsets of `g_(i, k_i - k)`. Also returns the product
/// of the leading coefficients: fibers over points where it does not vanish
/// are the ones the construction guarantees.
pub fn build_from_quasifinite_certificate(
    cert: &QuasifiniteCertificate,
) -> Result<(FiltrationSpec, Polynomial), ReesError> {
    cert.verify()?;
    let ring = cert.components[0].ring().clone();
    let mut levels: BTreeMap<i64, Vec<Polynomial>> = BTreeMap::new();
    let push = |level: i64, p: Polynomial, levels: &mut BTreeMap<i64, Vec<Polynomial>>| {
        if p.is_zero() || p.is_constant() {
            return;
        }
        let entry = levels.entry(level).or_default();
        if !entry.contains(&p) {
            entry.push(p);
        }
    };
    for i in 0..ring.n_vars() {
        push(1, Polynomial::var(&ring, i), &mut levels);
    }
    for f in &cert.components {
        push(1, f.clone(), &mut levels);
    }
    for entry in &cert.entries {
        let k_i = entry.degree;
        for (j, g) in entry.coefficients.iter().enumerate() {
            let k = k_i - j as i64; // x_i power that multiplies this coefficient
            let level = k.max(1);
            for beta in downset_of_support(g) {
                // product of component powers matching the target exponent
                let mut pulled = Polynomial::one(&ring);
                for (t, &b) in beta.iter().enumerate() {
                    if b > 0 {
                        pulled = pulled.mul(&cert.components[t].pow(b as u32))?;
                    }
                }
                if k > 0 {
                    let mut e = vec![0i64; ring.n_vars()];
                    e[entry.var] = k;
                    pulled = pulled.mul(&Polynomial::monomial(&ring, e, BigRational::one()))?;
                }
                push(level, pulled, &mut levels);
            }
        }
    }
    let spec = FiltrationSpec::new(&ring, levels, ClosureRule::Convolution)?;
    let mut genericity = Polynomial::one(&cert.target_ring);
    for entry in &cert.entries {
        genericity = genericity.mul(&entry.coefficients[0])?;
    }
    Ok((spec, genericity))
}

/// All exponent vectors componentwise below some support point of `g`.
fn downset_of_support(g: &Polynomial) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = Vec::new();
    for (alpha, _) in g.terms() {
        // enumerate the box 0..=alpha componentwise with an odometer
        let mut beta = vec![0i64; alpha.len()];
        'boxed: loop {
            if !out.contains(&beta) {
                out.push(beta.clone());
            }
            let mut i = 0;
            loop {
                if i == beta.len() {
                    break 'boxed;
                }
                beta[i] += 1;
                if beta[i] <= alpha[i] {
                    break;
                }
                beta[i] = 0;
                i += 1;
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Preservation at infinity.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PreservationBounds {
    pub d_max: i64,
    pub n_max: i64,
}

impl Default for PreservationBounds {
    fn default() -> Self {
        PreservationBounds { d_max: 8, n_max: 8 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PreservationOutcome {
    /// Sound: every generator has a verified power in the computed ideal.
    Certified,
    /// Inconclusive by design; larger bounds may certify.
    NotCertifiedWithinBounds,
}

#[derive(Debug, Clone, Serialize)]
pub struct CombinationTerm {
    pub coeff: String,
    pub element: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorCertificate {
    pub generator: String,
    pub level: i64,
    /// the certifying power, when one was found within bounds
    pub power: Option<i64>,
    /// the explicit combination of ideal-piece basis elements expressing
    /// the power (nonzero coefficients only)
    pub combination: Vec<CombinationTerm>,
    /// membership re-verified by expanding the explicit combination
    pub verified: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PreservationReport {
    pub outcome: PreservationOutcome,
    pub d_max: i64,
    pub n_max: i64,
    pub generators: Vec<GeneratorCertificate>,
}

/// Decide (one-sidedly) whether the completion determined by the filtration
/// keeps the given hypersurfaces from meeting at infinity: compute the
/// graded pieces of the ideal generated by the homogenized hypersurface
/// ideals together with the degree shift, and look for a power of every
/// algebra generator inside them.
///
/// The degree-d piece of the ideal is the span of the principal-ideal
/// members of F_d (kernels of the reduce-by-h maps) plus F_(d-1) shifted up.
/// `Certified` is sound: each membership is re-expanded from its explicit
/// coefficients and compared exactly. The negative answer only means the
/// search bounds were exhausted.
pub fn preserves_at_infinity(
    spec: &FiltrationSpec,
    hypersurfaces: &[Polynomial],
    bounds: PreservationBounds,
) -> Result<PreservationReport, ReesError> {
    let table = spec.table(bounds.d_max);
    let ord = MonomialOrder::graded_i64(&vec![1; spec.ring().n_vars()]);

    // ideal pieces per level
    let mut ideal: Vec<PolySpace> = Vec::with_capacity(bounds.d_max as usize + 1);
    ideal.push(PolySpace::new()); // level 0 piece is zero for fibers
    for d in 1..=bounds.d_max {
        let mut piece = PolySpace::new();
        piece.insert_all(table.level(d - 1).rows());
        for h in hypersurfaces {
            let mut tracked = TrackedSpace::new();
            for b in table.level(d).rows() {
                let image = b.reduce_mod(h, &ord)?;
                if let Some(kernel) = tracked.insert(image, b.clone()) {
                    piece.insert(&kernel);
                }
            }
        }
        ideal.push(piece);
    }

    let mut generators = Vec::new();
    let mut all_certified = true;
    for (g, level) in spec.algebra_generators() {
        let mut found: Option<i64> = None;
        let mut verified = false;
        let mut combination = Vec::new();
        let mut power = g.clone();
        let mut n = 1i64;
        while n <= bounds.n_max && n * level <= bounds.d_max {
            let piece = &ideal[(n * level) as usize];
            if let Some(coeffs) = piece.express(&power) {
                // re-verify: expand the combination and compare exactly
                let mut rebuilt = Polynomial::zero(spec.ring());
                for (c, row) in coeffs.iter().zip(piece.rows()) {
                    rebuilt = rebuilt.add(&row.scale(c))?;
                }
                verified = rebuilt == power;
                if verified {
                    found = Some(n);
                    combination = coeffs
                        .iter()
                        .zip(piece.rows())
                        .filter(|(c, _)| !c.is_zero())
                        .map(|(c, row)| CombinationTerm {
                            coeff: format_rational(c),
                            element: row.to_string(),
                        })
                        .collect();
                }
                break;
            }
            n += 1;
            if n <= bounds.n_max && n * level <= bounds.d_max {
                power = power.mul(&g)?;
            }
        }
        if found.is_none() || !verified {
            all_certified = false;
        }
        generators.push(GeneratorCertificate {
            generator: g.to_string(),
            level,
            power: found,
            combination,
            verified,
        });
    }
    Ok(PreservationReport {
        outcome: if all_certified {
            PreservationOutcome::Certified
        } else {
            PreservationOutcome::NotCertifiedWithinBounds
        },
        d_max: bounds.d_max,
        n_max: bounds.n_max,
        generators,
    })
}

// ---------------------------------------------------------------------------
// Normalized degree probe.

#[derive(Debug, Clone, Serialize)]
pub struct ProbeReport {
    /// pairs (m, delta(h^m)/m) rendered exactly
    pub values: Vec<(i64, String)>,
    pub last: String,
    /// last two scheduled values agree
    pub stabilized: bool,
    /// denominator of the last value; the empirical ramification index
    pub implied_denominator: Option<String>,
}

fn probe_from_values(values: Vec<(i64, BigRational)>) -> ProbeReport {
    let stabilized = values.len() >= 2
        && values[values.len() - 1].1 == values[values.len() - 2].1;
    let last = values
        .last()
        .map(|(_, v)| v.clone())
        .unwrap_or_else(BigRational::zero);
    ProbeReport {
        values: values
            .iter()
            .map(|(m, v)| (*m, format_rational(v)))
            .collect(),
        last: format_rational(&last),
        stabilized,
        implied_denominator: Some(last.denom().to_string()),
    }
}

pub const DEFAULT_PROBE_SCHEDULE: [i64; 5] = [1, 2, 4, 8, 16];

/// The sequence delta(h^m)/m on the schedule for a degree-like function.
/// Reports stabilization of the tail, never claims the limit.
pub fn normalized_degree_probe(
    d: &DegreeFunction,
    h: &Polynomial,
    schedule: &[i64],
) -> Result<ProbeReport, ReesError> {
    let mut values = Vec::new();
    for &m in schedule {
        assert!(m >= 1);
        let v = d.evaluate(&h.pow(m as u32))?;
        let v = match v {
            DegreeValue::Finite(x) => BigRational::new(BigInt::from(x), BigInt::from(m)),
            DegreeValue::NegInfinity => BigRational::zero(),
        };
        values.push((m, v));
    }
    Ok(probe_from_values(values))
}

/// Filtration-backed probe; the level bound grows with the scheduled power.
pub fn normalized_degree_probe_filtration(
    spec: &FiltrationSpec,
    h: &Polynomial,
    schedule: &[i64],
) -> Result<ProbeReport, ReesError> {
    let base = filtration_degree_with_growth(spec, h)?;
    let mut values = Vec::new();
    for &m in schedule {
        let power = h.pow(m as u32);
        let bound = base
            .finite()
            .map(|d| d * m + 2)
            .unwrap_or(2)
            .max(2);
        let table = spec.table(bound);
        let v = match table.degree(&power)? {
            DegreeValue::Finite(x) => BigRational::new(BigInt::from(x), BigInt::from(m)),
            DegreeValue::NegInfinity => BigRational::zero(),
        };
        values.push((m, v));
    }
    Ok(probe_from_values(values))
}

fn filtration_degree_with_growth(
    spec: &FiltrationSpec,
    f: &Polynomial,
) -> Result<DegreeValue, ReesError> {
    let mut bound = 8;
    loop {
        match spec.table(bound).degree(f) {
            Ok(v) => return Ok(v),
            Err(ReesError::AboveBound) if bound < 64 => bound *= 2,
            Err(e) => return Err(e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rational_from_i64 as ri;

    fn xy() -> Arc<Ring> {
        Ring::new(&["x", "y"])
    }

    fn poly(ring: &Arc<Ring>, terms: &[(i64, i64, i64)]) -> Polynomial {
        Polynomial::from_terms(ring, terms.iter().map(|&(c, a, b)| (vec![a, b], ri(c)))).unwrap()
    }

    /// F_1 = span{1, x, y, x^3}, powers closure: the completion adapted to
    /// the map (x, y + x^3).
    fn shifted_cubic_filtration(ring: &Arc<Ring>) -> FiltrationSpec {
        FiltrationSpec::powers_of_level_one(
            ring,
            vec![
                Polynomial::var(ring, 0),
                Polynomial::var(ring, 1),
                poly(ring, &[(1, 3, 0)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn filtration_degrees_match_the_span_structure() {
        let r = xy();
        let spec = shifted_cubic_filtration(&r);
        let table = spec.table(4);
        let x3 = poly(&r, &[(1, 3, 0)]);
        let x2 = poly(&r, &[(1, 2, 0)]);
        let y = Polynomial::var(&r, 1);
        assert_eq!(table.degree(&x3).unwrap(), DegreeValue::Finite(1));
        assert_eq!(table.degree(&x2).unwrap(), DegreeValue::Finite(2));
        assert_eq!(table.degree(&y).unwrap(), DegreeValue::Finite(1));
        assert_eq!(
            table.degree(&Polynomial::one(&r)).unwrap(),
            DegreeValue::Finite(0)
        );
    }

    #[test]
    fn graded_pieces_are_monotone() {
        let r = xy();
        let spec = shifted_cubic_filtration(&r);
        let table = spec.table(5);
        for d in 1..=5 {
            for row in table.level(d - 1).rows() {
                assert!(table.level(d).contains(row));
            }
        }
    }

    #[test]
    fn induced_degree_is_submultiplicative() {
        let r = xy();
        let spec = shifted_cubic_filtration(&r);
        let table = spec.table(8);
        let polys = [
            Polynomial::var(&r, 0),
            Polynomial::var(&r, 1),
            poly(&r, &[(1, 3, 0)]),
            poly(&r, &[(1, 1, 1), (1, 0, 0)]),
            poly(&r, &[(1, 2, 0), (-2, 0, 1)]),
        ];
        for f in &polys {
            for g in &polys {
                let df = table.degree(f).unwrap().finite().unwrap();
                let dg = table.degree(g).unwrap().finite().unwrap();
                if df + dg <= 8 {
                    let dfg = table.degree(&f.mul(g).unwrap()).unwrap().finite().unwrap();
                    assert!(dfg <= df + dg);
                }
            }
        }
    }

    #[test]
    fn rees_element_levels() {
        let r = xy();
        let spec = shifted_cubic_filtration(&r);
        let table = spec.table(4);
        let x = Polynomial::var(&r, 0);
        let e = ReesElement::new(&table, x.clone(), 1).unwrap();
        let t = ReesElement::shift(&r);
        let prod = e.mul(&t).unwrap();
        assert_eq!(prod.level, 2);
        assert_eq!(prod.poly, x);
        // x^2 does not fit at level 1
        let x2 = poly(&r, &[(1, 2, 0)]);
        assert!(matches!(
            ReesElement::new(&table, x2, 1),
            Err(ReesError::LevelBelowDegree { .. })
        ));
    }

    #[test]
    fn intersection_certificate_for_the_shifted_cubic_map() {
        // ideals <x> and <y + x^3>; identity y = -x^3 + (y + x^3)
        let r = xy();
        let q1 = Polynomial::var(&r, 0);
        let q2 = poly(&r, &[(1, 0, 1), (1, 3, 0)]);
        let cert = IntersectionCertificate {
            ideal_generators: vec![q1.clone(), q2.clone()],
            entries: vec![
                IntersectionEntry {
                    var: 0,
                    exponent: 1,
                    members: vec![q1.clone(), Polynomial::zero(&r)],
                    remainder: Polynomial::zero(&r),
                },
                IntersectionEntry {
                    var: 1,
                    exponent: 1,
                    members: vec![poly(&r, &[(-1, 3, 0)]), q2.clone()],
                    remainder: Polynomial::zero(&r),
                },
            ],
        };
        let spec = build_from_intersection_certificate(&cert).unwrap();
        // the level-1 span is {1, x, y, x^3} up to linear algebra
        let table = spec.table(1);
        assert_eq!(table.dim(1), 4);
        assert!(table.level(1).contains(&poly(&r, &[(1, 3, 0)])));
    }

    #[test]
    fn corrupted_certificates_are_rejected() {
        let r = xy();
        let q1 = Polynomial::var(&r, 0);
        let cert = IntersectionCertificate {
            ideal_generators: vec![q1.clone()],
            entries: vec![IntersectionEntry {
                var: 1,
                exponent: 1,
                members: vec![q1.clone()],
                remainder: Polynomial::zero(&r),
            }],
        };
        assert!(matches!(
            cert.verify(),
            Err(ReesError::CertificateIdentityFails(_))
        ));
        // remainder degree too high
        let cert = IntersectionCertificate {
            ideal_generators: vec![q1.clone()],
            entries: vec![IntersectionEntry {
                var: 0,
                exponent: 1,
                members: vec![Polynomial::zero(&r)],
                remainder: Polynomial::var(&r, 0),
            }],
        };
        assert!(matches!(cert.verify(), Err(ReesError::BadRemainder(0))));
    }

    #[test]
    fn disjoint_varieties_certificate_is_accepted() {
        // V(x) and V(x - 1) are disjoint; x = x*x - x*(x-1)
        let r1 = Ring::new(&["x"]);
        let x = Polynomial::var(&r1, 0);
        let xm1 = x.sub(&Polynomial::one(&r1)).unwrap();
        let cert = IntersectionCertificate {
            ideal_generators: vec![x.clone(), xm1.clone()],
            entries: vec![IntersectionEntry {
                var: 0,
                exponent: 1,
                members: vec![x.mul(&x).unwrap(), x.mul(&xm1).unwrap().neg()],
                remainder: Polynomial::zero(&r1),
            }],
        };
        assert!(cert.verify().is_ok());
    }

    #[test]
    fn preservation_of_the_shifted_cubic_fiber_at_origin() {
        let r = xy();
        let spec = shifted_cubic_filtration(&r);
        let h1 = Polynomial::var(&r, 0);
        let h2 = poly(&r, &[(1, 0, 1), (1, 3, 0)]);
        let report = preserves_at_infinity(
            &spec,
            &[h1, h2],
            PreservationBounds { d_max: 2, n_max: 2 },
        )
        .unwrap();
        assert_eq!(report.outcome, PreservationOutcome::Certified);
        for g in &report.generators {
            assert_eq!(g.power, Some(1));
            assert!(g.verified);
        }
    }

    #[test]
    fn staircase_probe_stabilizes_at_three_halves() {
        use crate::degfun::StaircaseDegree;
        let r = Ring::new(&["x"]);
        let d = DegreeFunction::Staircase(StaircaseDegree::new(3, 2));
        let x = Polynomial::var(&r, 0);
        let report = normalized_degree_probe(&d, &x, &[1, 2, 4, 8]).unwrap();
        assert_eq!(
            report.values,
            vec![
                (1, "2".to_string()),
                (2, "3/2".to_string()),
                (4, "3/2".to_string()),
                (8, "3/2".to_string())
            ]
        );
        assert!(report.stabilized);
        assert_eq!(report.implied_denominator.as_deref(), Some("2"));
    }

    #[test]
    fn quasidegree_probe_is_constant_from_the_start() {
        use crate::degfun::{Quasidegree, Semidegree, WeightedDegree};
        let r = xy();
        let q = Quasidegree::new(vec![
            Semidegree::Weighted(WeightedDegree::new(&[2, 1])),
            Semidegree::Weighted(WeightedDegree::new(&[1, 2])),
        ])
        .unwrap();
        let d = DegreeFunction::Quasidegree(q);
        let f = poly(&r, &[(1, 1, 0), (3, 0, 1), (1, 0, 0)]);
        let report = normalized_degree_probe(&d, &f, &DEFAULT_PROBE_SCHEDULE).unwrap();
        assert!(report.stabilized);
        let first = &report.values[0].1;
        assert!(report.values.iter().all(|(_, v)| v == first));
    }

    #[test]
    fn probe_on_constants_is_zero() {
        let r = xy();
        let d = DegreeFunction::Weighted(crate::degfun::WeightedDegree::new(&[1, 1]));
        let c = Polynomial::constant_i64(&r, 3);
        let report = normalized_degree_probe(&d, &c, &DEFAULT_PROBE_SCHEDULE).unwrap();
        assert!(report.values.iter().all(|(_, v)| v == "0"));
    }
}
