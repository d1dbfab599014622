use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    #[error("domain error in {op}: {detail}")]
    Domain { op: &'static str, detail: String },

    #[error("{op} does not support {species}")]
    UnsupportedSpecies { op: &'static str, species: String },

    #[error("Fock weight {0} is not typical (integer coordinate)")]
    NotTypical(String),

    #[error("twist is not a scalar on the non-simple module {0}")]
    NonSemisimpleTwist(String),

    #[error("not the K-class of a projective module: {0}")]
    NotProjectiveClass(String),

    #[error("oracle subtraction went negative: {0}")]
    OracleSubtractionFailure(String),

    #[error("oracle derivation is inconsistent: {0}")]
    OracleInconsistent(String),

    #[error("module {0} does not induce to a local module")]
    NotLocal(String),
}

impl Error {
    pub(crate) fn domain(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            op,
            detail: detail.into(),
        }
    }

    /// True for errors that indicate a broken internal invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::OracleSubtractionFailure(_) | Error::OracleInconsistent(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
