use thiserror::Error;

use crate::spectral::SpectralResult;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge index {index} out of range for graph with {edges} edges")]
    EdgeOutOfRange { index: usize, edges: usize },

    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),

    #[error("vertex sets overlap")]
    OverlappingSets,

    #[error("graph has an isolated vertex (minimum degree 0)")]
    IsolatedVertex,

    #[error("{what} refused: n = {n} exceeds cap {cap}")]
    ScaleCap { what: &'static str, n: usize, cap: usize },

    #[error("no edge subset of size {m} in a graph with {edges} edges")]
    NoCandidate { m: usize, edges: usize },

    #[error("power iteration did not converge after {} iterations (rho = {}, residual = {})", .0.iterations, .0.rho, .0.residual)]
    NonConvergence(Box<SpectralResult>),

    #[error("jacobi sweeps did not converge (off-diagonal mass {0:e})")]
    JacobiNonConvergence(f64),

    /// An internal identity that must always hold was violated. Signals a bug.
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
