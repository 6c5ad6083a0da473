//! The inverse spectral transform: from a spectral curve, its divisor and the
//! Casimirs back to the face weights and monodromies of a minimal torus
//! graph.
//!
//! For each black vertex `b` the function `V_b` (proportional to the adjugate
//! entry `Q_{b,w}` at the root white vertex) is the unique section on a small
//! polygon vanishing at the divisor and at some points at infinity. Ratios of
//! these functions at the points at infinity then give the weights of loops.

mod abel;
mod reconstruct;
mod small;
mod system;
mod type2;
mod wedge;

pub use abel::{abel_data, discrete_abel, rational_abel, AbelData, DiscreteAbel};
pub use reconstruct::{placed_offsets, reconstruct_weights, InverseInput, InverseOptions, Reconstruction};
pub use small::{small_polygon, strip_polygon, SmallPolygon};
pub use system::{build_system, solve_v, LinearSystem, NullVector, NULLSPACE_GAP};
pub use type2::{strip_type2, type2_shortcut, type2_zigzags};
pub use wedge::{loop_weight, wedge_ratio, wedges_of_loop, Wedge};

use kasteleyn::KasteleynError;
use lattice_toric::LatticeError;
use laurent_algebra::AlgebraError;
use spectral_forward::ForwardError;
use thiserror::Error;
use torus_graph::GraphError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InverseError {
    #[error("Abel map propagation is inconsistent: {0}")]
    InconsistentPropagation(String),
    #[error("strip rule disagrees with the divisor formula for ({black}, {white}): {detail}")]
    StripMismatch { black: String, white: String, detail: String },
    #[error("zig-zag {0} has a negative coefficient in the type-2 divisor")]
    NegativeCoefficient(String),
    #[error("zig-zag {zigzag} would contribute {multiplicity} type-2 rows; only 0 or 1 is supported")]
    UnsupportedMultiplicity { zigzag: String, multiplicity: i64 },
    #[error("small polygon of {0} has no lattice points")]
    EmptyPolygon(String),
    #[error("the system for {0} has only the zero solution")]
    NullspaceDim0(String),
    #[error("the system for {0} has more than one independent solution")]
    NullspaceDimHigh(String),
    #[error("numerator and denominator orders differ at zig-zag {zigzag} ({numerator} vs {denominator})")]
    OrderMismatch { zigzag: String, numerator: i64, denominator: i64 },
    #[error("wedge ratio denominator vanishes at zig-zag {0}")]
    ZeroDenominator(String),
    #[error("not a wedge path: {0}")]
    NotAWedgePath(String),
    #[error("Newton polygon of P is not the zig-zag polygon")]
    PolygonMismatch,
    #[error("expected {expected} divisor points, got {found}")]
    DivisorCount { found: usize, expected: usize },
    #[error("recovered face weights multiply to {0}, not 1")]
    FaceProduct(String),
    #[error(transparent)]
    Forward(#[from] ForwardError),
    #[error(transparent)]
    Kasteleyn(#[from] KasteleynError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}
