//! Bipartite graphs embedded in the torus.
//!
//! Edges are oriented black to white and carry a homology offset `(dz, dw)`,
//! the exponents of the monomial they contribute to the Kasteleyn matrix.
//! Faces are counterclockwise cyclic lists of edge sides; a side `+e` runs
//! black to white and `-e` runs white to black.

mod cycles;
mod graph;
mod matching;
mod spec;
mod zigzag;

pub use graph::{Color, Edge, Face, Side, TorusGraph};
pub use matching::Matching;
pub use spec::{CyclesSpec, EdgeSpec, FaceSpec, GraphSpec, VertexSpec, SCHEMA};
pub use zigzag::{MinimalityViolation, ZigZag, ZigZagFan};

use lattice_toric::LatticeError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate id {0:?}")]
    DuplicateId(String),
    #[error("unknown id {0:?}")]
    UnknownId(String),
    #[error("not bipartite: {0}")]
    NonBipartite(String),
    #[error("V - E + F = {0}, a torus graph needs 0")]
    EulerMismatch(i64),
    #[error("inconsistent faces: {0}")]
    FaceInconsistency(String),
    #[error("face {0:?} has odd length")]
    OddFace(String),
    #[error("edge {0:?} has a sign other than +1 or -1, or signs are only partly given")]
    InvalidSign(String),
    #[error("malformed edge side {0:?}")]
    BadSide(String),
    #[error("cycle {0:?} is not a closed walk")]
    BadCycle(String),
    #[error("cycles a and b do not form a homology basis")]
    NoHomologyBasis,
    #[error("no perfect matching")]
    NoPerfectMatching,
    #[error("zig-zag {0} is null-homologous")]
    NullZigZag(usize),
    #[error("zig-zag {0} has a non-primitive class")]
    NonPrimitiveZigZag(usize),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}
