use thiserror::Error;

/// Errors shared across the solver toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {v} out of range (graph has {n} vertices)")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("edge id {id} out of range (graph has {m} edges)")]
    EdgeOutOfRange { id: usize, m: usize },

    #[error("no edge between vertices {u} and {v}")]
    NoSuchEdge { u: usize, v: usize },

    #[error("input graph contains a cycle; expected a forest")]
    NotAForest,

    #[error("input graph is not connected")]
    NotConnected,

    #[error("input graph is not bipartite")]
    NotBipartite,

    #[error("input graph has no degree-1 vertex")]
    NoDegreeOneVertex,

    #[error("{n} is not a triangular number; use the exhaustive solver instead")]
    NotTriangular { n: usize },

    #[error("order must be at least {min}, got {got}")]
    OrderTooSmall { min: usize, got: usize },

    #[error("budget must be at least {min}, got {got}")]
    BudgetTooSmall { min: usize, got: usize },

    #[error("search cap exceeded: {what} is {value}, cap is {cap}; best verified upper bound so far: {upper_bound}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
        upper_bound: usize,
    },

    #[error("graph splits into {expected} components but {got} sub-results were supplied")]
    ComponentMismatch { expected: usize, got: usize },

    #[error("internal error: constructed deletion set fails verification at edge ({u},{v}); please report this")]
    CertificateInvalid { u: usize, v: usize },

    #[error("internal error: {0}; please report this")]
    Internal(&'static str),

    #[error("generator error: {0}")]
    Generator(String),

    #[error("method not applicable: {0}")]
    MethodNotApplicable(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
