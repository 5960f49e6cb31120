//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide error enumeration.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two entries of a rook matrix would share a row or a column.
    #[error("injectivity violation: {0}")]
    Injectivity(String),

    /// Operands live over different board sizes or colour orders.
    #[error("mismatch: {0}")]
    Mismatch(String),

    /// The requested computation exceeds the configured size cap.
    #[error("resource cap exceeded: {needed} exceeds cap {cap}")]
    ResourceCap { needed: u128, cap: u128 },

    /// A floating-point search could not separate spectra at the requested
    /// tolerance, even after the retry budget was spent.
    #[error("numeric degeneracy: {message} (residual {residual:.3e}; suggested tolerance {suggested:.3e})")]
    NumericDegeneracy {
        message: String,
        residual: f64,
        suggested: f64,
    },

    /// A multiplication table fails one of the group axioms.
    #[error("invalid group table: {0}")]
    InvalidTable(String),

    /// A serialized document does not match the expected schema.
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn mismatch(msg: impl Into<String>) -> Self {
        Error::Mismatch(msg.into())
    }

    pub(crate) fn schema(msg: impl Into<String>) -> Self {
        Error::Schema(msg.into())
    }
}
