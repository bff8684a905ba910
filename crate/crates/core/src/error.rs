use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {index} is empty")]
    EmptyEdge { index: usize },

    #[error("edge {index} has size 1 (edges must have at least two vertices)")]
    SingletonEdge { index: usize },

    #[error("graph edge {u}-{v} is a self-loop")]
    SelfLoop { u: usize, v: usize },

    #[error("parallel graph edges between {u} and {v}")]
    ParallelEdge { u: usize, v: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("vertex {vertex} is isolated")]
    IsolatedVertex { vertex: usize },

    #[error("the dual is a multigraph: vertices {u} and {v} lie in the same two edges")]
    Multigraph { u: usize, v: usize },

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("instance exceeds cap: {what} is {got}, cap is {cap}")]
    CapExceeded { what: &'static str, got: usize, cap: usize },

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
