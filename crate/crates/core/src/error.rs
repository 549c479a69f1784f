use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("uniformity must be at least 2, got {0}")]
    UniformityTooSmall(usize),
    #[error("operation requires a {expected}-uniform hypergraph, got r = {got}")]
    UnsupportedUniformity { expected: usize, got: usize },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {edge:?} has {got} vertices, expected {expected}")]
    WrongEdgeSize {
        edge: Vec<usize>,
        expected: usize,
        got: usize,
    },
    #[error("edge {0:?} repeats a vertex")]
    RepeatedVertex(Vec<usize>),
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<usize>),
    #[error("{what} requires n >= {min}, got {n}")]
    InvalidSize {
        what: &'static str,
        n: usize,
        min: usize,
    },
    #[error("{{{0}, {1}}} is not an edge of the shadow")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} is not reachable from the reference vertex")]
    Unreachable(usize),
    #[error("reference vertex {vertex} lies on the edge {{{u}, {w}}}")]
    VertexOnEdge { vertex: usize, u: usize, w: usize },
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("vector is zero or has a negative entry")]
    InvalidVector,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("no convergence after {iterations} iterations, bracket [{low}, {high}]")]
    NotConverged {
        iterations: usize,
        low: f64,
        high: f64,
    },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error at line {line}, field `{field}`: {message}")]
    Parse {
        line: usize,
        field: String,
        message: String,
    },
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Short machine-readable category name.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::UniformityTooSmall(_)
            | Error::UnsupportedUniformity { .. }
            | Error::VertexOutOfRange { .. }
            | Error::WrongEdgeSize { .. }
            | Error::RepeatedVertex(_)
            | Error::DuplicateEdge(_) => "invalid-hypergraph",
            Error::InvalidSize { .. } | Error::InvalidConfig(_) => "validation",
            Error::NotAnEdge(..)
            | Error::Unreachable(_)
            | Error::VertexOnEdge { .. }
            | Error::NotTwoConnected => "invalid-query",
            Error::InvalidTriangulation(_) => "invalid-triangulation",
            Error::LengthMismatch { .. } | Error::InvalidVector => "invalid-vector",
            Error::NotConverged { .. } => "not-converged",
            Error::Precondition(_) => "precondition",
            Error::Parse { .. } => "parse",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
