use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {0} is a loop")]
    LoopEdge(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("duplicate id {0}")]
    DuplicateId(String),
    #[error("invalid rotation: {0}")]
    InvalidRotation(String),
    #[error("rotation system is not planar (n - m + f = {euler}, expected 2)")]
    NonPlanarRotation { euler: i64 },
    #[error("graph is not biconnected")]
    NotBiconnected,
    #[error("graph needs at least two edges")]
    TooSmall,
    #[error("graph is not planar (a rigid skeleton has no planar embedding)")]
    NonPlanarSkeleton,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("more than {limit} embeddings")]
    SizeGuardExceeded { limit: u64 },
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("k must be odd, got {0}")]
    InvalidParity(u32),
    #[error("formula outside the supported regime: {0}")]
    RegimeViolation(String),
    #[error("too many variables for brute force ({0})")]
    TooLarge(usize),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
