//! Sparse Laurent polynomials in `z, w` over a pluggable scalar field, plus
//! the matrix operations the dimer pipeline needs: determinants, adjugate
//! columns, restriction to a boundary ray, resultants and root finding.

mod json;
mod matrix;
mod poly;
mod scalar;
pub mod univariate;

pub use json::{parse_rational, rational_to_string, LaurentJson, ScalarJson, TermJson};
pub use matrix::{adjugate_column, det, resultant_in_w, PolyMatrix};
pub use poly::{restrict_to_ray, LaurentPoly, RayRestriction};
pub use scalar::Scalar;

pub use num_complex::Complex64;
pub use num_rational::BigRational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("expected an exact rational, found a complex value")]
    NotExact,
}
