//! Kasteleyn matrices of weighted torus graphs.
//!
//! Weights enter as a cohomology class: one value per face (their product is
//! one) plus the monodromies `A`, `B` along the two generator cycles. A
//! representative edge cocycle is solved for on a spanning tree.

mod cocycle;
mod matrix;
mod weights;

pub use cocycle::{check_signs, coboundary, kasteleyn_signs, loop_product, weight_cocycle, weight_exponents};
pub use matrix::{casimirs, Kasteleyn};
pub use weights::{WeightClass, WeightValue, Weights, WeightsSpec};

use laurent_algebra::AlgebraError;
use thiserror::Error;
use torus_graph::GraphError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KasteleynError {
    #[error("face weights multiply to {0}, not 1")]
    InconsistentClass(String),
    #[error("no weight given for {0:?}")]
    MissingWeight(String),
    #[error("weight given for unknown {0:?}")]
    UnknownWeight(String),
    #[error("weights must be given either per edge or as a class, not both")]
    MixedWeights,
    #[error("weight for {0:?} is zero")]
    ZeroWeight(String),
    #[error("given signs violate the Kasteleyn condition on face {0:?}")]
    BadSigns(String),
    #[error("no Kasteleyn sign satisfies every face")]
    Unsatisfiable,
    #[error("face and cycle constraints are not unimodular")]
    NotUnimodular,
    #[error("det K vanishes identically")]
    ZeroDeterminant,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
