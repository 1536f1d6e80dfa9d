use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unknown pattern `{0}`")]
    UnknownPattern(String),
    #[error("unknown certificate `{0}`")]
    UnknownCertificate(String),
    #[error("uniformity mismatch: expected {expected}, found {found}")]
    UniformityMismatch { expected: usize, found: usize },
    #[error("coloring is partial ({unassigned} unassigned edges)")]
    PartialColoring { unassigned: u64 },
    #[error("color {color} out of range for {k} colors")]
    ColorOutOfRange { color: u16, k: u16 },
    #[error("host too large: {0}")]
    HostTooLarge(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not a 3-(v,4,1) design: {0}")]
    NotSteinerQuadruple(String),
}

pub type Result<T> = std::result::Result<T, Error>;
