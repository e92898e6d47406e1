//! Invariant Basis Number for algebras of regular hypergraphs (the rank
//! criterion on the coefficient matrices, with explicit witnesses) and
//! finite-dimensional representations: dimension functions, the canonical
//! realisation and the invertibility condition (H).

pub mod ibn;
pub mod rep;

use graph_core::{GraphError, LambdaClass};
use thiserror::Error;

pub use ibn::{
    coeff_matrices, default_depth, default_max_shift, has_ibn, ibn_decision, ibn_witness, ibn_witness_with, k0_span,
    CoeffMatrices, Confirmation, IbnDecision, IbnWitness, K0Span, CONFLUENCE_CAVEAT,
};
pub use rep::{
    build_representation, check_condition_h, dimension_functions, findim_rep_witness, ghost_matrices,
    has_nonzero_findim_rep, is_dimension_function, lambda_matrix, ConditionH, DimensionFunctions,
    LambdaCheck, QuiverRep,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IbnError {
    #[error("hyperedge {lambda} has class {class}; only two-sided hyperedges are supported")]
    NotTwoSided { lambda: String, class: LambdaClass },
    #[error("the given dimensions violate a hyperedge constraint")]
    NotDimensionFunction,
    #[error("representation shape error: {0}")]
    Shape(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
