use thiserror::Error;

/// Errors raised while building or parsing graphs.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("graph has {n} vertices, the configured limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid graph6 string: {0}")]
    Graph6(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    /// An operation was called outside its stated preconditions.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A guarantee that should follow from the preconditions did not hold.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("not a subdivision of K4: {0}")]
    NotK4Subdivision(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
