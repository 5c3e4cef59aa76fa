use thiserror::Error;

use crate::detect::StarCutset;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph has {0} vertices, above the supported maximum of {max}", max = crate::graph::MAX_VERTICES)]
    TooLarge(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("4-tuple ({0}, {1}, {2}, {3}) is not proper")]
    NotProper(usize, usize, usize, usize),
    #[error("invalid seed set: {0}")]
    InvalidSeed(String),
    #[error("graph has a star cutset centered at {}: {:?}", .0.center, .0.cutset)]
    StarCutset(StarCutset),
    #[error("oracle cap exceeded: n = {n}, limit {limit}")]
    OracleCap { n: usize, limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
