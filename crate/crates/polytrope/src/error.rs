use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("matrix has a positive cycle (max cycle mean {0}), Kleene closure diverges")]
    PositiveCycle(String),

    #[error("blocks do not form a partition of the node set")]
    InvalidPartition,

    #[error("not a connected relation: {0}")]
    NotConnectedRelation(String),

    #[error("resource limit exceeded: {what} only supported up to {max}, got {got}")]
    ResourceLimit {
        what: &'static str,
        max: usize,
        got: usize,
    },

    #[error("cone has no relative-interior point with strict inequalities")]
    Degenerate,

    #[error("graph has no spanning in-directed tree rooted in its sink")]
    NoSpanningTree,

    #[error("graph has no cycle")]
    NoCycle,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
