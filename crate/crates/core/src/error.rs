use std::io;

/// Errors produced by graph construction, parsing and the verifiers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Graph(#[from] GraphError),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("target e+c = {target} is unreachable (maximum {max})")]
    Unreachable { target: usize, max: usize },

    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Structural violations when assembling a [`ColoredGraph`](crate::ColoredGraph).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("{0} vertices exceeds the supported maximum of {max}", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("color must be a positive integer")]
    NonPositiveColor,
    #[error("vertex {0} listed twice")]
    RepeatedVertex(usize),
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(message: impl Into<String>) -> Error {
    Error::InvalidArgument(message.into())
}
