//! Lattice polygons in Z², their normal fans, and Q-divisors supported on
//! the boundary lines of the toric surface a fan defines.
//!
//! A polygon is stored as the intersection of half-planes
//! `<m, u_ρ> >= -a_ρ`, one per ray `ρ` of its normal fan; a divisor
//! `Σ c_ρ D_ρ` is the same data with rational right-hand sides.

mod divisor;
mod polygon;
mod ray;

pub use divisor::{divisor_to_polygon, RationalDivisor, RationalPolygon};
pub use polygon::{Fan, NewtonPolygon, PolygonEdge};
pub use ray::RayBasis;

use num_integer::Integer;
use thiserror::Error;

/// Exact rationals used for divisor coefficients.
pub type Q = num_rational::Rational64;

/// A lattice point or vector.
pub type Point = [i64; 2];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("zero edge vector")]
    ZeroVector,
    #[error("edge vectors do not close up (sum is {0:?})")]
    OpenPolygon(Point),
    #[error("polygon has empty interior")]
    DegenerateNewton,
    #[error("vector {0:?} is not primitive")]
    NotPrimitive(Point),
    #[error("vector {0:?} is not orthogonal to normal {1:?}")]
    NotOrthogonal(Point, Point),
    #[error("polygon contains no lattice points")]
    NoLatticePoints,
    #[error("divisor has {got} coefficients but the fan has {expected} rays")]
    FanMismatch { expected: usize, got: usize },
}

pub fn dot(a: Point, b: Point) -> i64 {
    a[0] * b[0] + a[1] * b[1]
}

/// `det(a, b)`; positive when `b` is counterclockwise of `a`.
pub fn cross(a: Point, b: Point) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

pub fn content(v: Point) -> i64 {
    v[0].gcd(&v[1])
}

pub fn is_primitive(v: Point) -> bool {
    content(v) == 1
}

/// Divides out the content; the zero vector is returned unchanged.
pub fn primitive(v: Point) -> Point {
    let g = content(v);
    if g == 0 {
        v
    } else {
        [v[0] / g, v[1] / g]
    }
}

/// Counterclockwise quarter turn. For a counterclockwise boundary this maps
/// an edge direction to the inward normal.
pub fn rot90(v: Point) -> Point {
    [-v[1], v[0]]
}

/// Total order on directions by angle in `[0, 2π)` measured from `(1, 0)`.
pub fn angle_cmp(a: Point, b: Point) -> std::cmp::Ordering {
    fn half(v: Point) -> u8 {
        if v[1] > 0 || (v[1] == 0 && v[0] > 0) {
            0
        } else {
            1
        }
    }
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&cross(a, b)))
}
