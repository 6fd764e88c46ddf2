use thiserror::Error;

use crate::graph::Vertex;

/// Errors raised for malformed input or refused workloads.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("invalid edge {u}-{v}: {reason}")]
    InvalidEdge {
        u: Vertex,
        v: Vertex,
        reason: &'static str,
    },

    /// A brute-force routine or a small-core solver refused an instance that
    /// is larger than its configured limit.
    #[error("{what}: size {size} exceeds the limit of {limit}")]
    GuardExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown generator family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
