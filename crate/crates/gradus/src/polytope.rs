//! Exact rational convex polytopes in dimension at most three: hulls with
//! primitive outward facet normals, volumes, Minkowski sums, mixed volumes
//! in the root-count normalization, directional faces, and the quasidegree
//! a full-dimensional polytope with interior origin determines.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::degfun::{DegfunError, DegreeValue, Quasidegree, Semidegree, WeightedDegree};
use crate::poly::{Polynomial, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("polytopes are supported up to dimension 3, got {0}")]
    DimensionTooHigh(usize),
    #[error("ambient dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("the origin must be strictly interior")]
    OriginNotInterior,
    #[error("the polytope must be full-dimensional")]
    NotFullDimensional,
    #[error("direction vector must be nonzero")]
    ZeroDirection,
    #[error("need at least one point")]
    NoPoints,
}

pub type Point = Vec<BigRational>;

/// A facet `{x : <normal, x> <= offset}` with primitive integer normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub offset: BigRational,
}

/// Convex polytope in V-representation with, when full-dimensional, the
/// matching H-representation. Lower-dimensional hulls keep an empty facet
/// list and are flagged degenerate.
#[derive(Debug, Clone)]
pub struct Polytope {
    ambient: usize,
    vertices: Vec<Point>,
    facets: Vec<Facet>,
    full_dim: bool,
}

pub fn point_i64(coords: &[i64]) -> Point {
    coords
        .iter()
        .map(|&c| BigRational::from_integer(BigInt::from(c)))
        .collect()
}

fn dot(a: &[BigInt], x: &[BigRational]) -> BigRational {
    let mut acc = BigRational::zero();
    for (c, v) in a.iter().zip(x) {
        acc += BigRational::from_integer(c.clone()) * v;
    }
    acc
}

fn dot_i64(a: &[i64], x: &[BigRational]) -> BigRational {
    let mut acc = BigRational::zero();
    for (&c, v) in a.iter().zip(x) {
        acc += BigRational::from_integer(BigInt::from(c)) * v;
    }
    acc
}

/// Scale a rational vector to a primitive integer vector (positive content).
fn primitive_normal(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in v {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if content.is_zero() {
        return ints;
    }
    ints.iter().map(|c| c / &content).collect()
}

impl Polytope {
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.full_dim
    }

    /// Exact Euclidean volume; zero for degenerate hulls.
    pub fn volume(&self) -> BigRational {
        if !self.full_dim {
            return BigRational::zero();
        }
        match self.ambient {
            1 => {
                let min = self.vertices.iter().map(|p| &p[0]).min().unwrap();
                let max = self.vertices.iter().map(|p| &p[0]).max().unwrap();
                max - min
            }
            2 => {
                let ordered = ccw_order(&self.vertices);
                shoelace(&ordered)
            }
            3 => volume_3d(self),
            _ => unreachable!("dimension checked at construction"),
        }
    }

    /// Vertices minimizing `<alpha, .>`; the face in the minimizing
    /// convention used by the sparse-system machinery.
    pub fn face_in_direction(&self, alpha: &[i64]) -> Result<Vec<Point>, PolytopeError> {
        if alpha.iter().all(|&a| a == 0) {
            return Err(PolytopeError::ZeroDirection);
        }
        let values: Vec<BigRational> = self
            .vertices
            .iter()
            .map(|v| dot_i64(alpha, v))
            .collect();
        let min = values.iter().min().cloned().expect("nonempty");
        Ok(self
            .vertices
            .iter()
            .zip(&values)
            .filter(|(_, val)| **val == min)
            .map(|(v, _)| v.clone())
            .collect())
    }

    pub fn contains(&self, x: &[BigRational]) -> bool {
        if self.full_dim {
            self.facets.iter().all(|f| dot(&f.normal, x) <= f.offset)
        } else {
            // degenerate: express as a convex combination is overkill here;
            // membership for degenerate hulls is only needed in tests
            unimplemented!("membership for degenerate hulls")
        }
    }
}

/// Convex hull of rational points in dimension at most three.
pub fn hull(points: &[Point]) -> Result<Polytope, PolytopeError> {
    let ambient = points.first().ok_or(PolytopeError::NoPoints)?.len();
    if ambient > 3 {
        return Err(PolytopeError::DimensionTooHigh(ambient));
    }
    let mut pts: Vec<Point> = Vec::new();
    for p in points {
        assert_eq!(p.len(), ambient, "mixed point dimensions");
        if !pts.contains(p) {
            pts.push(p.clone());
        }
    }
    let rank = affine_rank(&pts);
    if rank < ambient {
        return Ok(degenerate_hull(pts, ambient, rank));
    }
    match ambient {
        1 => {
            let min = pts.iter().cloned().min_by(|a, b| a[0].cmp(&b[0])).unwrap();
            let max = pts.iter().cloned().max_by(|a, b| a[0].cmp(&b[0])).unwrap();
            Ok(Polytope {
                ambient,
                facets: vec![
                    Facet {
                        normal: vec![BigInt::one()],
                        offset: max[0].clone(),
                    },
                    Facet {
                        normal: vec![-BigInt::one()],
                        offset: -min[0].clone(),
                    },
                ],
                vertices: vec![min, max],
                full_dim: true,
            })
        }
        2 => Ok(hull_2d(pts)),
        3 => Ok(hull_3d(pts)),
        _ => unreachable!(),
    }
}

fn affine_rank(pts: &[Point]) -> usize {
    if pts.len() <= 1 {
        return 0;
    }
    let base = &pts[0];
    let mut rows: Vec<Point> = Vec::new();
    for p in &pts[1..] {
        let mut v: Point = p.iter().zip(base).map(|(a, b)| a - b).collect();
        // eliminate against current rows
        for r in &rows {
            let pivot = r.iter().position(|c| !c.is_zero()).unwrap();
            if !v[pivot].is_zero() {
                let factor = &v[pivot] / &r[pivot];
                for (vi, ri) in v.iter_mut().zip(r) {
                    *vi -= &factor * ri;
                }
            }
        }
        if v.iter().any(|c| !c.is_zero()) {
            rows.push(v);
        }
    }
    rows.len()
}

fn degenerate_hull(pts: Vec<Point>, ambient: usize, rank: usize) -> Polytope {
    let vertices = match rank {
        0 => vec![pts[0].clone()],
        1 => {
            // endpoints along the span direction
            let base = pts[0].clone();
            let dir: Point = pts
                .iter()
                .find_map(|p| {
                    let d: Point = p.iter().zip(&base).map(|(a, b)| a - b).collect();
                    d.iter().any(|c| !c.is_zero()).then_some(d)
                })
                .expect("rank 1 has a direction");
            let param = |p: &Point| -> BigRational {
                // projection onto dir (scaled); exact and order-preserving
                p.iter()
                    .zip(&dir)
                    .map(|(a, d)| a * d)
                    .fold(BigRational::zero(), |acc, v| acc + v)
            };
            let min = pts.iter().min_by_key(|p| param(p)).unwrap().clone();
            let max = pts.iter().max_by_key(|p| param(p)).unwrap().clone();
            vec![min, max]
        }
        2 => {
            // planar set in 3-space: project out the largest normal axis
            let base = pts[0].clone();
            let mut dirs: Vec<Point> = Vec::new();
            for p in &pts[1..] {
                let d: Point = p.iter().zip(&base).map(|(a, b)| a - b).collect();
                if d.iter().any(|c| !c.is_zero())
                    && (dirs.is_empty() || (dirs.len() == 1 && !is_parallel(&dirs[0], &d)))
                {
                    dirs.push(d);
                }
            }
            let n = cross(&dirs[0], &dirs[1]);
            let drop = (0..3).max_by_key(|&i| n[i].abs()).unwrap();
            let keep: Vec<usize> = (0..3).filter(|&i| i != drop).collect();
            let projected: Vec<Point> = pts
                .iter()
                .map(|p| keep.iter().map(|&i| p[i].clone()).collect())
                .collect();
            let hull2 = hull_2d_vertices(&projected);
            hull2
                .into_iter()
                .map(|q| {
                    pts.iter()
                        .find(|p| keep.iter().map(|&i| p[i].clone()).collect::<Point>() == q)
                        .expect("projected vertex has a source point")
                        .clone()
                })
                .collect()
        }
        _ => unreachable!(),
    };
    Polytope {
        ambient,
        vertices,
        facets: Vec::new(),
        full_dim: false,
    }
}

fn is_parallel(a: &Point, b: &Point) -> bool {
    cross(a, b).iter().all(|c| c.is_zero())
}

fn cross(a: &Point, b: &Point) -> Point {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn orient2d(p: &Point, q: &Point, r: &Point) -> BigRational {
    (&q[0] - &p[0]) * (&r[1] - &p[1]) - (&q[1] - &p[1]) * (&r[0] - &p[0])
}

/// Monotone chain; returns vertices in counterclockwise order.
fn hull_2d_vertices(pts: &[Point]) -> Vec<Point> {
    let mut sorted: Vec<Point> = pts.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() <= 2 {
        return sorted;
    }
    let mut lower: Vec<Point> = Vec::new();
    for p in &sorted {
        while lower.len() >= 2
            && !orient2d(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point> = Vec::new();
    for p in sorted.iter().rev() {
        while upper.len() >= 2
            && !orient2d(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn hull_2d(pts: Vec<Point>) -> Polytope {
    let vertices = hull_2d_vertices(&pts);
    let mut facets = Vec::new();
    let m = vertices.len();
    for i in 0..m {
        let a = &vertices[i];
        let b = &vertices[(i + 1) % m];
        // counterclockwise boundary: outward normal is the edge rotated by
        // -90 degrees
        let edge = [&b[0] - &a[0], &b[1] - &a[1]];
        let normal = primitive_normal(&[edge[1].clone(), -edge[0].clone()]);
        let offset = dot(&normal, a);
        facets.push(Facet { normal, offset });
    }
    Polytope {
        ambient: 2,
        vertices,
        facets,
        full_dim: true,
    }
}

/// Brute-force supporting-plane enumeration; adequate at desk scale and
/// uniform over degeneracies (coplanar point sets on a facet).
fn hull_3d(pts: Vec<Point>) -> Polytope {
    let n = pts.len();
    let mut facets: Vec<Facet> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let u: Point = (0..3).map(|t| &pts[j][t] - &pts[i][t]).collect();
                let v: Point = (0..3).map(|t| &pts[k][t] - &pts[i][t]).collect();
                let normal = cross(&u, &v);
                if normal.iter().all(|c| c.is_zero()) {
                    continue;
                }
                let normal = primitive_normal(&normal);
                let offset = dot(&normal, &pts[i]);
                let mut above = false;
                let mut below = false;
                for p in &pts {
                    match dot(&normal, p).cmp(&offset) {
                        std::cmp::Ordering::Greater => above = true,
                        std::cmp::Ordering::Less => below = true,
                        std::cmp::Ordering::Equal => {}
                    }
                }
                let facet = if !above {
                    Facet {
                        normal,
                        offset,
                    }
                } else if !below {
                    Facet {
                        normal: normal.iter().map(|c| -c).collect(),
                        offset: -offset,
                    }
                } else {
                    continue;
                };
                if !facets.contains(&facet) {
                    facets.push(facet);
                }
            }
        }
    }
    // vertices: points on at least three distinct facet planes
    let vertices: Vec<Point> = pts
        .iter()
        .filter(|p| {
            facets
                .iter()
                .filter(|f| dot(&f.normal, p) == f.offset)
                .count()
                >= 3
        })
        .cloned()
        .collect();
    Polytope {
        ambient: 3,
        vertices,
        facets,
        full_dim: true,
    }
}

fn ccw_order(vertices: &[Point]) -> Vec<Point> {
    hull_2d_vertices(vertices)
}

fn shoelace(ccw: &[Point]) -> BigRational {
    let m = ccw.len();
    let mut acc = BigRational::zero();
    for i in 0..m {
        let a = &ccw[i];
        let b = &ccw[(i + 1) % m];
        acc += &a[0] * &b[1] - &b[0] * &a[1];
    }
    acc / BigRational::from_integer(BigInt::from(2))
}

fn volume_3d(p: &Polytope) -> BigRational {
    let mut total = BigRational::zero();
    for facet in &p.facets {
        // vertices incident to this facet, ordered around its centroid
        let incident: Vec<Point> = p
            .vertices
            .iter()
            .filter(|v| dot(&facet.normal, v) == facet.offset)
            .cloned()
            .collect();
        let ordered = order_facet_cycle(&incident, &facet.normal);
        // cone from the origin over a fan triangulation of the facet
        for t in 1..ordered.len() - 1 {
            let det = det3(&ordered[0], &ordered[t], &ordered[t + 1]);
            total += det;
        }
    }
    (total / BigRational::from_integer(BigInt::from(6))).abs()
}

fn det3(a: &Point, b: &Point, c: &Point) -> BigRational {
    &a[0] * (&b[1] * &c[2] - &b[2] * &c[1]) - &a[1] * (&b[0] * &c[2] - &b[2] * &c[0])
        + &a[2] * (&b[0] * &c[1] - &b[1] * &c[0])
}

/// Order coplanar points cyclically (consistently with the facet normal) by
/// exact half-plane classification around their centroid.
fn order_facet_cycle(points: &[Point], normal: &[BigInt]) -> Vec<Point> {
    let m = BigRational::from_integer(BigInt::from(points.len() as i64));
    let centroid: Point = (0..3)
        .map(|i| {
            points
                .iter()
                .map(|p| p[i].clone())
                .fold(BigRational::zero(), |a, b| a + b)
                / &m
        })
        .collect();
    // in-plane axes: u = any edge direction, v = normal x u
    let u: Point = points
        .iter()
        .find_map(|p| {
            let d: Point = p.iter().zip(&centroid).map(|(a, b)| a - b).collect();
            d.iter().any(|c| !c.is_zero()).then_some(d)
        })
        .expect("facet has extent");
    let nq: Point = normal
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let v = cross(&nq, &u);
    let coords: Vec<(BigRational, BigRational, Point)> = points
        .iter()
        .map(|p| {
            let d: Point = p.iter().zip(&centroid).map(|(a, b)| a - b).collect();
            let x = d.iter().zip(&u).map(|(a, b)| a * b).fold(BigRational::zero(), |s, t| s + t);
            let y = d.iter().zip(&v).map(|(a, b)| a * b).fold(BigRational::zero(), |s, t| s + t);
            (x, y, p.clone())
        })
        .collect();
    let half = |x: &BigRational, y: &BigRational| -> u8 {
        if y.is_positive() || (y.is_zero() && x.is_positive()) {
            0
        } else {
            1
        }
    };
    let mut sorted = coords;
    sorted.sort_by(|(ax, ay, _), (bx, by, _)| {
        let ha = half(ax, ay);
        let hb = half(bx, by);
        if ha != hb {
            return ha.cmp(&hb);
        }
        // same half-plane: compare by cross product
        let cr = ax * by - bx * ay;
        if cr.is_positive() {
            std::cmp::Ordering::Less
        } else if cr.is_negative() {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Equal
        }
    });
    sorted.into_iter().map(|(_, _, p)| p).collect()
}

/// Hull of all pairwise vertex sums.
pub fn minkowski_sum(p: &Polytope, q: &Polytope) -> Result<Polytope, PolytopeError> {
    if p.ambient != q.ambient {
        return Err(PolytopeError::DimensionMismatch(p.ambient, q.ambient));
    }
    let mut sums = Vec::with_capacity(p.vertices.len() * q.vertices.len());
    for a in &p.vertices {
        for b in &q.vertices {
            let s: Point = a.iter().zip(b).map(|(x, y)| x + y).collect();
            if !sums.contains(&s) {
                sums.push(s);
            }
        }
    }
    hull(&sums)
}

/// Mixed volume of `n` polytopes in dimension `n <= 3`, normalized so that
/// `mixed_volume(P, ..., P) = n! * volume(P)`; the root-count convention.
pub fn mixed_volume(polytopes: &[Polytope]) -> Result<BigRational, PolytopeError> {
    let n = polytopes.len();
    assert!(n >= 1, "need at least one polytope");
    if n > 3 {
        return Err(PolytopeError::DimensionTooHigh(n));
    }
    for p in polytopes {
        if p.ambient != n {
            return Err(PolytopeError::DimensionMismatch(p.ambient, n));
        }
    }
    // inclusion-exclusion over nonempty subsets
    let mut acc = BigRational::zero();
    for mask in 1u32..(1 << n) {
        let mut sum: Option<Polytope> = None;
        for (i, p) in polytopes.iter().enumerate() {
            if mask & (1 << i) != 0 {
                sum = Some(match sum {
                    None => p.clone(),
                    Some(s) => minkowski_sum(&s, p)?,
                });
            }
        }
        let vol = sum.expect("nonempty subset").volume();
        let sign = if (n as u32 - mask.count_ones()).is_multiple_of(2) {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        acc += sign * vol;
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// The quasidegree of a polytope.

/// The scaled membership degree of a full-dimensional rational polytope with
/// the origin strictly interior: on a Laurent monomial the value is
/// `k * inf{r : alpha in r*P}`, realized as the maximum of one weighted
/// degree per facet with integer weights `(k/c) * eta`.
#[derive(Debug, Clone)]
pub struct PolytopeQuasidegree {
    pub source: Polytope,
    pub k: i64,
    quasi: Quasidegree,
}

impl PolytopeQuasidegree {
    pub fn quasidegree(&self) -> &Quasidegree {
        &self.quasi
    }

    pub fn evaluate(&self, f: &Polynomial) -> Result<DegreeValue, DegfunError> {
        self.quasi.evaluate(f)
    }

    /// Brute-force oracle: the smallest `r` in `(1/k)Z` with `alpha` inside
    /// `r * P`, scaled by `k`; membership tested against the facets.
    pub fn scaling_oracle(&self, alpha: &[i64]) -> i64 {
        if alpha.iter().all(|&a| a == 0) {
            return 0;
        }
        let point: Point = alpha
            .iter()
            .map(|&a| BigRational::from_integer(BigInt::from(a)))
            .collect();
        let k = BigInt::from(self.k);
        let mut numer = BigInt::zero();
        loop {
            let r = BigRational::new(numer.clone(), k.clone());
            let inside = self.source.facets().iter().all(|f| {
                dot(&f.normal, &point) <= &r * &f.offset
            });
            if inside {
                return i64::try_from(numer).expect("oracle value fits i64");
            }
            numer += 1;
        }
    }
}

/// Build the facet quasidegree of `p`. Fails unless `p` is full-dimensional
/// with the origin strictly inside.
pub fn polytope_quasidegree(p: &Polytope) -> Result<PolytopeQuasidegree, PolytopeError> {
    if !p.full_dim {
        return Err(PolytopeError::NotFullDimensional);
    }
    let origin: Point = vec![BigRational::zero(); p.ambient];
    for f in &p.facets {
        if dot(&f.normal, &origin) >= f.offset {
            return Err(PolytopeError::OriginNotInterior);
        }
    }
    // k = lcm of the offset numerators: (k / c) * eta is then integral
    let mut k = BigInt::one();
    for f in &p.facets {
        k = k.lcm(f.offset.numer());
    }
    let parts: Vec<Semidegree> = p
        .facets
        .iter()
        .map(|f| {
            let scale = BigRational::from_integer(k.clone()) / &f.offset;
            let weights: Vec<i64> = f
                .normal
                .iter()
                .map(|c| {
                    let w = BigRational::from_integer(c.clone()) * &scale;
                    debug_assert!(w.is_integer());
                    i64::try_from(w.to_integer()).expect("weight fits i64")
                })
                .collect();
            Semidegree::Weighted(WeightedDegree::laurent(&weights))
        })
        .collect();
    let quasi = Quasidegree::new(parts).expect("facet parts share the ambient arity");
    Ok(PolytopeQuasidegree {
        source: p.clone(),
        k: i64::try_from(k).expect("k fits i64"),
        quasi,
    })
}

/// The ambient Laurent ring matching a polytope quasidegree's arity.
pub fn laurent_ring_for(p: &Polytope) -> Arc<Ring> {
    let names: Vec<String> = (1..=p.ambient_dim()).map(|i| format!("x{i}")).collect();
    Ring::from_names(names, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rational_from_i64 as ri;

    fn pts(coords: &[[i64; 2]]) -> Vec<Point> {
        coords.iter().map(|c| point_i64(c)).collect()
    }

    #[test]
    fn triangle_hull() {
        let p = hull(&pts(&[[0, 0], [1, 0], [0, 1]])).unwrap();
        assert_eq!(p.vertices().len(), 3);
        assert_eq!(p.facets().len(), 3);
        assert!(p.is_full_dimensional());
        assert_eq!(p.volume(), crate::rational::rational(1, 2));
    }

    #[test]
    fn square_hull_has_axis_facets() {
        let p = hull(&pts(&[[1, 1], [1, -1], [-1, 1], [-1, -1]])).unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.facets().len(), 4);
        for f in p.facets() {
            let n: Vec<i64> = f.normal.iter().map(|c| i64::try_from(c).unwrap()).collect();
            assert!(matches!(
                n.as_slice(),
                [1, 0] | [-1, 0] | [0, 1] | [0, -1]
            ));
            assert_eq!(f.offset, ri(1));
        }
        assert_eq!(p.volume(), ri(4));
    }

    #[test]
    fn collinear_points_degenerate() {
        let p = hull(&pts(&[[0, 0], [1, 1], [2, 2], [3, 3]])).unwrap();
        assert!(!p.is_full_dimensional());
        assert_eq!(p.vertices().len(), 2);
        assert!(p.volume().is_zero());
    }

    #[test]
    fn interior_points_are_dropped() {
        let p = hull(&pts(&[[0, 0], [4, 0], [0, 4], [1, 1]])).unwrap();
        assert_eq!(p.vertices().len(), 3);
    }

    #[test]
    fn minkowski_sums() {
        let seg_x = hull(&pts(&[[0, 0], [1, 0]])).unwrap();
        let seg_y = hull(&pts(&[[0, 0], [0, 1]])).unwrap();
        let square = minkowski_sum(&seg_x, &seg_y).unwrap();
        assert!(square.is_full_dimensional());
        assert_eq!(square.volume(), ri(1));
        // P + {origin} = P
        let origin = hull(&pts(&[[0, 0]])).unwrap();
        let tri = hull(&pts(&[[0, 0], [1, 0], [0, 1]])).unwrap();
        let same = minkowski_sum(&tri, &origin).unwrap();
        assert_eq!(same.volume(), tri.volume());
        assert_eq!(same.vertices().len(), 3);
        // simplex + simplex = 2 simplex
        let double = minkowski_sum(&tri, &tri).unwrap();
        assert_eq!(double.volume(), ri(2));
        // doubling scales area by 4
        assert_eq!(double.volume(), tri.volume() * ri(4));
    }

    #[test]
    fn mixed_volume_normalization() {
        let tri = hull(&pts(&[[0, 0], [1, 0], [0, 1]])).unwrap();
        // two generic lines meet once
        assert_eq!(mixed_volume(&[tri.clone(), tri.clone()]).unwrap(), ri(1));
        // MV(P, P) = 2 vol(P)
        let square = hull(&pts(&[[0, 0], [1, 0], [0, 1], [1, 1]])).unwrap();
        assert_eq!(
            mixed_volume(&[square.clone(), square.clone()]).unwrap(),
            ri(2)
        );
        // scaled simplices give the product of the degrees
        for d1 in 1..=3i64 {
            for d2 in 1..=3i64 {
                let p1 = hull(&pts(&[[0, 0], [d1, 0], [0, d1]])).unwrap();
                let p2 = hull(&pts(&[[0, 0], [d2, 0], [0, d2]])).unwrap();
                assert_eq!(mixed_volume(&[p1, p2]).unwrap(), ri(d1 * d2));
            }
        }
    }

    #[test]
    fn mixed_volume_is_multilinear_in_2d() {
        let p = hull(&pts(&[[0, 0], [1, 0], [0, 1]])).unwrap();
        let q = hull(&pts(&[[0, 0], [2, 1], [1, 2], [0, 2], [2, 0]])).unwrap();
        let r = hull(&pts(&[[0, 0], [1, 1], [2, 0]])).unwrap();
        let pq = minkowski_sum(&p, &q).unwrap();
        let left = mixed_volume(&[pq, r.clone()]).unwrap();
        let right = mixed_volume(&[p.clone(), r.clone()]).unwrap()
            + mixed_volume(&[q.clone(), r.clone()]).unwrap();
        assert_eq!(left, right);
        // symmetry
        assert_eq!(
            mixed_volume(&[p.clone(), q.clone()]).unwrap(),
            mixed_volume(&[q, p]).unwrap()
        );
    }

    #[test]
    fn faces_in_directions() {
        let square = hull(&pts(&[[1, 1], [1, -1], [-1, 1], [-1, -1]])).unwrap();
        // minimizing <(0,-1), .> picks the top edge
        let top = square.face_in_direction(&[0, -1]).unwrap();
        assert_eq!(top.len(), 2);
        assert!(top.iter().all(|p| p[1] == ri(1)));
        let corner = square.face_in_direction(&[-1, -1]).unwrap();
        assert_eq!(corner, vec![point_i64(&[1, 1])]);
        assert_eq!(
            square.face_in_direction(&[0, 0]).unwrap_err(),
            PolytopeError::ZeroDirection
        );
        // orthogonal direction on a segment returns the whole segment
        let seg = hull(&pts(&[[0, 0], [2, 2]])).unwrap();
        let whole = seg.face_in_direction(&[1, -1]).unwrap();
        assert_eq!(whole.len(), 2);
    }

    #[test]
    fn cube_hull_and_volume() {
        let mut corners = Vec::new();
        for x in [0i64, 2] {
            for y in [0i64, 2] {
                for z in [0i64, 2] {
                    corners.push(point_i64(&[x, y, z]));
                }
            }
        }
        let cube = hull(&corners).unwrap();
        assert_eq!(cube.vertices().len(), 8);
        assert_eq!(cube.facets().len(), 6);
        assert_eq!(cube.volume(), ri(8));
        let simplex = hull(&[
            point_i64(&[0, 0, 0]),
            point_i64(&[1, 0, 0]),
            point_i64(&[0, 1, 0]),
            point_i64(&[0, 0, 1]),
        ])
        .unwrap();
        assert_eq!(simplex.volume(), crate::rational::rational(1, 6));
        // MV(S, S, S) = 3! vol(S) = 1
        assert_eq!(
            mixed_volume(&[simplex.clone(), simplex.clone(), simplex.clone()]).unwrap(),
            ri(1)
        );
    }

    #[test]
    fn square_quasidegree_values() {
        let square = hull(&pts(&[[1, 1], [1, -1], [-1, 1], [-1, -1]])).unwrap();
        let qd = polytope_quasidegree(&square).unwrap();
        assert_eq!(qd.k, 1);
        let ring = laurent_ring_for(&square);
        let m = |e: &[i64]| Polynomial::monomial(&ring, e.to_vec(), ri(1));
        assert_eq!(
            qd.evaluate(&m(&[2, 1])).unwrap(),
            DegreeValue::Finite(2)
        );
        assert_eq!(
            qd.evaluate(&m(&[-1, -1])).unwrap(),
            DegreeValue::Finite(1)
        );
        assert_eq!(qd.scaling_oracle(&[2, 1]), 2);
        assert_eq!(qd.scaling_oracle(&[-1, -1]), 1);
    }

    #[test]
    fn triangle_quasidegree_values() {
        let tri = hull(&pts(&[[-1, -1], [2, -1], [-1, 2]])).unwrap();
        let qd = polytope_quasidegree(&tri).unwrap();
        assert_eq!(qd.k, 1);
        let ring = laurent_ring_for(&tri);
        let m = Polynomial::monomial(&ring, vec![1, 1], ri(1));
        assert_eq!(qd.evaluate(&m).unwrap(), DegreeValue::Finite(2));
        assert_eq!(qd.scaling_oracle(&[1, 1]), 2);
    }

    #[test]
    fn origin_must_be_interior() {
        let shifted = hull(&pts(&[[0, 0], [1, 0], [0, 1]])).unwrap();
        assert_eq!(
            polytope_quasidegree(&shifted).unwrap_err(),
            PolytopeError::OriginNotInterior
        );
    }

    #[test]
    fn octahedron_quasidegree_is_the_l1_norm() {
        let mut vertices = Vec::new();
        for i in 0..3 {
            for s in [1i64, -1] {
                let mut v = vec![0i64; 3];
                v[i] = s;
                vertices.push(point_i64(&v));
            }
        }
        let oct = hull(&vertices).unwrap();
        assert_eq!(oct.facets().len(), 8);
        assert_eq!(oct.volume(), crate::rational::rational(4, 3));
        let qd = polytope_quasidegree(&oct).unwrap();
        assert_eq!(qd.k, 1);
        let ring = laurent_ring_for(&oct);
        for alpha in [[1i64, 2, -3], [0, 0, 4], [-1, -1, -1], [2, 0, 1]] {
            let mono = Polynomial::monomial(&ring, alpha.to_vec(), ri(1));
            let l1: i64 = alpha.iter().map(|a| a.abs()).sum();
            assert_eq!(qd.evaluate(&mono).unwrap(), DegreeValue::Finite(l1));
            assert_eq!(qd.scaling_oracle(&alpha), l1);
        }
    }
}
