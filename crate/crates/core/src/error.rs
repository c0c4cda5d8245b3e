use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {element} does not belong to the carrier of {hyperfield}")]
    CarrierMismatch { hyperfield: String, element: String },
    #[error("hyperfields differ: {0} vs {1}")]
    HyperfieldMismatch(String, String),
    #[error("zero has no multiplicative inverse")]
    InverseOfZero,
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("unknown hyperfield `{0}`")]
    UnknownHyperfield(String),
    #[error("leading coefficient must be nonzero")]
    ZeroLeading,
    #[error("{0} requires a finite carrier")]
    NotFinite(&'static str),
    #[error("degree {degree} exceeds the limit {limit}")]
    DegreeLimit { degree: usize, limit: usize },
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("{0}")]
    Unsupported(String),
    #[error("internal verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
