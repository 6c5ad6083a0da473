//! The forward spectral transform: from a weighted torus graph to its
//! spectral curve `P = 0`, the divisor cut out by one column of the adjugate
//! of the Kasteleyn matrix, and the points at infinity labelled by zig-zags.

mod data;
mod divisor;
mod infinity;

pub use data::{forward, DivisorPointJson, InfinityJson, SpectralData, SpectralJson};
pub use divisor::{relative_residual, spectral_divisor, SpectralPoint, DIVISOR_RESIDUAL};
pub use infinity::{infinity_points, InfinityPoint};

use kasteleyn::KasteleynError;
use laurent_algebra::AlgebraError;
use thiserror::Error;
use torus_graph::GraphError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ForwardError {
    #[error("zig-zags {first} and {second} on one ray have equal Casimirs")]
    CasimirCollision { first: String, second: String },
    #[error("1/C of zig-zag {zigzag} is not a root of the leading polynomial (residual {residual:e})")]
    RootMismatch { zigzag: String, residual: f64 },
    #[error("found {found} divisor points, expected {expected}")]
    WrongCount { found: usize, expected: usize },
    #[error("the adjugate column vanishes")]
    EmptyColumn,
    #[error("unknown zig-zag {0:?}")]
    UnknownZigZag(String),
    #[error("no point at infinity given for zig-zag {0:?}")]
    MissingZigZag(String),
    #[error("unsupported schema {0:?}")]
    Schema(String),
    #[error(transparent)]
    Kasteleyn(#[from] KasteleynError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
