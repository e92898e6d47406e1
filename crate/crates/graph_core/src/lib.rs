//! Finite bi-separated graphs `Ė = (E, C, D, S, T)` and B-hypergraphs.
//!
//! A bi-separated graph partitions the out-edges of every non-sink into
//! row blocks (`C`) and the in-edges of every non-source into column
//! blocks (`D`), with `|X ∩ Y| ≤ 1`, and marks the blocks that carry
//! relations (`S ⊆ C`, `T ⊆ D`). A B-hypergraph additionally groups the
//! blocks into hyperedges. This crate provides the data model, the
//! validators, the standard constructions and the bisaturation
//! combinatorics (closures, admissible triples, quotients).

pub mod bisep;
pub mod catalog;
pub mod construct;
pub mod error;
pub mod graph;
pub mod hyper;
pub mod saturation;

pub use bisep::{lambda_partition, BiSepGraph, Block, LambdaPartition};
pub use construct::{
    ck_bisep, ck_leavitt, hypergraph_bisep, separated_bisep, standard_bisep, trivial_bisep, weighted_bisep, HyperEdge,
};
pub use error::{GraphError, Violation};
pub use graph::{Edge, Graph};
pub use hyper::{BHypergraph, Lambda, LambdaClass};
pub use saturation::{
    bisaturated_closure, check_triple, cobisaturated_subhypergraphs, enumerate_bisaturated, fin_s_over,
    full_subhypergraph, in_lambda_over, inside, is_bisaturated, is_cobisaturated, quotient_bhypergraph,
    sigma_theta_saturation, subset_guard, t_fin_over, x_over, y_over, AdmissibleTriple, VertexSet,
};

/// Validates a bi-separated graph, returning every violation found.
pub fn validate(g: &BiSepGraph) -> Result<(), Vec<Violation>> {
    g.validate()
}

/// Splits a bi-separated graph into its connected components.
pub fn connected_components(g: &BiSepGraph) -> Vec<BiSepGraph> {
    g.connected_components()
}
