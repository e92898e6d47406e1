//! Error and violation types shared by every constructor and validator.

use std::fmt;
use thiserror::Error;

/// A single structural defect found while validating a bi-separated graph
/// or a B-hypergraph. Validators collect all of them rather than stopping
/// at the first one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    EmptyBlock(String),
    RowBlockMixedSource(String),
    ColBlockMixedRange(String),
    EdgeInNoRowBlock(String),
    EdgeInNoColBlock(String),
    EdgeInSeveralRowBlocks(String),
    EdgeInSeveralColBlocks(String),
    DuplicateBlock(String),
    UnknownEdgeInBlock { block: String, edge: String },
    BlocksMeetTwice { row: String, col: String },
    UnknownSBlock(String),
    UnknownTBlock(String),
    // B-hypergraph conditions
    EmptyLambdaSide(String),
    UnknownLambdaBlock { lambda: String, block: String },
    OpenBlocksMeet { row: String, col: String },
    DistinctLambdasMeet { row: String, col: String },
    LambdaNotComplete { lambda: String, row: String, col: String },
    ClassMismatch { lambda: String, block: String },
    BlockNotCovered(String),
    BlockCoveredTwice(String),
    InfiniteClass(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            EmptyBlock(b) => write!(f, "block {b} is empty"),
            RowBlockMixedSource(b) => write!(f, "row block {b} contains edges with different sources"),
            ColBlockMixedRange(b) => write!(f, "column block {b} contains edges with different ranges"),
            EdgeInNoRowBlock(e) => write!(f, "edge {e} lies in no row block"),
            EdgeInNoColBlock(e) => write!(f, "edge {e} lies in no column block"),
            EdgeInSeveralRowBlocks(e) => write!(f, "edge {e} lies in several row blocks"),
            EdgeInSeveralColBlocks(e) => write!(f, "edge {e} lies in several column blocks"),
            DuplicateBlock(b) => write!(f, "duplicate block id {b}"),
            UnknownEdgeInBlock { block, edge } => write!(f, "block {block} references unknown edge {edge}"),
            BlocksMeetTwice { row, col } => write!(f, "row block {row} and column block {col} share more than one edge"),
            UnknownSBlock(b) => write!(f, "S references unknown row block {b}"),
            UnknownTBlock(b) => write!(f, "T references unknown column block {b}"),
            EmptyLambdaSide(l) => write!(f, "hyperedge {l} has an empty block family"),
            UnknownLambdaBlock { lambda, block } => write!(f, "hyperedge {lambda} references unknown block {block}"),
            OpenBlocksMeet { row, col } => write!(f, "row block {row} (not in S) meets column block {col} (not in T)"),
            DistinctLambdasMeet { row, col } => write!(f, "blocks {row} and {col} of different hyperedges intersect"),
            LambdaNotComplete { lambda, row, col } => write!(f, "in hyperedge {lambda}, {row} does not meet {col}"),
            ClassMismatch { lambda, block } => write!(f, "block {block} does not fit the class of hyperedge {lambda}"),
            BlockNotCovered(b) => write!(f, "block {b} belongs to no hyperedge"),
            BlockCoveredTwice(b) => write!(f, "block {b} belongs to several hyperedges"),
            InfiniteClass(l) => write!(f, "hyperedge {l} has an infinite class, unsupported for finite graphs"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(String),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(String),
    #[error("edge {edge} references unknown vertex {vertex}")]
    UnknownVertex { edge: String, vertex: String },
    #[error("unknown vertex {0}")]
    NoSuchVertex(String),
    #[error("unknown edge {0}")]
    NoSuchEdge(String),
    #[error("invalid structure: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("not a B-hypergraph: {0}")]
    NotBHypergraph(String),
    #[error("vertex {0} is a sink and cannot carry a row relation")]
    SinkInS(String),
    #[error("edge weights must be positive (edge {0})")]
    BadWeight(String),
    #[error("graph has parallel edges {0} and {1}; the standard bi-separation needs a simple graph")]
    NotSimple(String, String),
    #[error("enumeration over 2^{n} subsets exceeds the guard of {limit} (set BSA_MAX_SUBSETS to raise it)")]
    Guard { n: usize, limit: u128 },
    #[error("invalid admissible triple: {0}")]
    BadTriple(String),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}
