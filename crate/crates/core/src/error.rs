use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge sign must be +1 or -1, got {0}")]
    BadSign(i64),
    #[error("{what} = {value} exceeds supported bound {bound}")]
    TooLarge {
        what: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("not found: {0}")]
    NotFound(String),
    #[error("underlying graph is disconnected")]
    Disconnected,
    #[error("eigenvalue sweep cap {0} reached before convergence")]
    NoConvergence(usize),
    #[error("graph is not regular")]
    NotRegular,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("unknown construction: {0}")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("catalog entry '{name}' failed validation: {message}")]
    ValidationFailed { name: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
