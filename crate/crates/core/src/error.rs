use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },

    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),

    #[error("loop edge at vertex {0}")]
    LoopEdge(Vertex),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    /// A desk-scale bound was exceeded. The solvers never fall back to a
    /// heuristic; they refuse instead.
    #[error("{what} bound exceeded: {actual} > {limit}")]
    BoundExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("invalid construction: {0}")]
    InvalidSpec(String),

    #[error("m/n = {m}/{n} is not admissible: violates {violated}")]
    InvalidRatio {
        m: usize,
        n: usize,
        violated: &'static str,
    },

    #[error("ratio mu/nu is undefined for a graph without edges")]
    UndefinedRatio,

    #[error("graph is not connected")]
    Disconnected,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("input/output: {0}")]
    Io(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("loop edge at vertex {0}")]
    Loop(Vertex),
    #[error("vertex {vertex} is not below the declared vertex count {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("header 'n <count>' must come first and only once")]
    MisplacedHeader,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("invalid byte {byte:#04x} at offset {offset}")]
    InvalidChar { offset: usize, byte: u8 },
    #[error("truncated input: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} unexpected trailing bytes")]
    Trailing(usize),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
