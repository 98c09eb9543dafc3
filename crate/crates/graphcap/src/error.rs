//! Crate-wide error type.

use crate::capacity::CapacityResult;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("vertex {vertex} has a loop; operation requires an irreflexive graph")]
    LoopPresent { vertex: usize },

    #[error("edge endpoint {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("duplicate edge ({from}, {to})")]
    DuplicateEdge { from: usize, to: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("size limit exceeded: {got} > {limit}")]
    SizeLimit { limit: usize, got: usize },

    #[error("optimizer did not converge within the restart budget; best value so far {}", best.value)]
    NonConvergence { best: Box<CapacityResult> },

    #[error("index {index} out of range for window {window}")]
    IndexOutOfRange { index: usize, window: usize },

    #[error("operation requires an exchangeable model variant (Bernoulli or mixture)")]
    NotExchangeable,

    #[error("indices must be strictly increasing")]
    NonIncreasingIndices,

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("zone overlap at colour {color}")]
    ZoneOverlap { color: usize },

    #[error("requested size {requested} infeasible; max achievable is {max_achievable}")]
    Infeasible {
        requested: usize,
        max_achievable: usize,
    },

    #[error("metric transform stuck at index {index}: distances to the point at infinity do not decay enough")]
    MetricStuck { index: usize },

    #[error("invalid metric: {0}")]
    InvalidMetric(String),

    #[error("malformed input: {0}")]
    Format(String),
}

impl Error {
    /// Largest achievable size carried by an [`Error::Infeasible`], if any.
    pub fn max_achievable(&self) -> Option<usize> {
        match self {
            Error::Infeasible { max_achievable, .. } => Some(*max_achievable),
            _ => None,
        }
    }
}
