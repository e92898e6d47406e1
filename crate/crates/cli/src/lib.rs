//! Command-line front end: the graph document format, the expression
//! parser and the `bisep` subcommands.

pub mod commands;
pub mod doc;
pub mod expr;

use graph_core::GraphError;
use ibn_repr::IbnError;
use thiserror::Error;

pub use commands::{fixture, parse_triple, run, Cli, Command, Output};
pub use doc::{parse_graph, resolve, to_document, GraphDocument, Loaded};
pub use expr::parse_expr;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("expression: {0}")]
    Expr(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ibn(#[from] IbnError),
}
