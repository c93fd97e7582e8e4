use thiserror::Error;

/// Errors surfaced by any layer of the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("group order cap exceeded: enumerated more than {cap} elements")]
    OrderCapExceeded { cap: usize },

    #[error("class functions belong to different groups")]
    GroupMismatch,

    #[error("unsupported Cartan type: {0}")]
    UnsupportedType(String),

    #[error("family data unavailable for type {0}")]
    FamilyDataUnavailable(String),

    #[error("coefficient data unavailable for type {0} and no override supplied")]
    CoefficientDataUnavailable(String),

    #[error("subset is not a closed symmetric subsystem: {0}")]
    NotASubsystem(String),

    #[error("data integrity error: {0}")]
    DataIntegrity(String),

    #[error("magnitude comparison within decision margin: {0}")]
    AmbiguousMagnitude(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
