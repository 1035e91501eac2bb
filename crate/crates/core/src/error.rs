use thiserror::Error;

use crate::graph::Vertex;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    NoVertices,

    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("loop at vertex {0}")]
    Loop(Vertex),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for dimension {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("polynomials over {left} and {right} variables cannot be combined")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("{what} exceeds the configured limit ({actual} > {limit})")]
    CapabilityExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("exactness violated: {0}")]
    InexactDivision(String),

    #[error("rank-one perturbation is not upper triangular (first violation at row {row}, column {col})")]
    NotTriangular { row: usize, col: usize },

    #[error("vector entries sum to zero; the perturbation identity cannot recover the tree count")]
    ZeroSum,

    #[error("invalid construction order: {0}")]
    InvalidConstructionOrder(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("closed form is undefined here: {0}")]
    DegenerateFormula(String),

    #[error("method not applicable: {0}")]
    NotApplicable(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
