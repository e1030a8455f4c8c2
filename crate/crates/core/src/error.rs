use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} too large: {size} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("precoloured set is not a clique of at most two vertices: {0}")]
    NotAClique(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("colouring covers {got} vertices, graph has {expected}")]
    PartialColouring { expected: usize, got: usize },

    #[error("internal assertion failed: {0}")]
    Assertion(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
