//! Exact computational machinery for degree-like functions on polynomial
//! and Laurent rings: semidegrees, quasidegrees, the filtrations and graded
//! rings they determine, affine Bezout bounds with equality certification,
//! and the mixed-volume root-count equality test for sparse bivariate
//! systems.
//!
//! Everything is exact rational arithmetic; there is no floating point
//! anywhere in the library. See the `examples/` directory for one runnable
//! walk-through per capability and the `gradus` binary for the batch job
//! front end.

pub mod bernstein;
pub mod bezout;
pub mod degfun;
pub mod iterate;
pub mod jobs;
pub mod linear;
pub mod poly;
pub mod polytope;
pub mod rational;
pub mod rees;
pub mod univar;

pub use degfun::{DegreeFunction, DegreeValue, Quasidegree, Semidegree, WeightedDegree};
pub use poly::{MonomialOrder, PolyError, Polynomial, Ring};
