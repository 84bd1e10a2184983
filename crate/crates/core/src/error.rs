//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop rejected at vertex {0}")]
    LoopEdge(usize),

    #[error("invalid parameters (n={n}, t={t}, k={k}): {reason}")]
    InvalidParams {
        n: usize,
        t: usize,
        k: usize,
        reason: &'static str,
    },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("k = {k} out of range for a graph on {n} vertices")]
    KOutOfRange { k: usize, n: usize },

    #[error("invalid tolerance {0}; must be positive")]
    InvalidTolerance(f64),

    #[error("spanning-subgraph precondition violated: {0}")]
    NotSpanningSubgraph(String),

    #[error(
        "power iteration did not converge within {iterations} iterations \
         (best rho {rho}, residual {residual})"
    )]
    NonConvergence {
        rho: f64,
        residual: f64,
        iterations: usize,
    },

    #[error("invalid generator parameters: {0}")]
    InvalidGenerator(String),

    #[error("invalid campaign configuration: {0}")]
    InvalidConfig(String),
}
