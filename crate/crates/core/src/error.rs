use thiserror::Error;

/// Errors raised by the invariant computations and the claims runner.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("polarization does not divide anticanonical: -K = O({anticanonical}), polarization O({polarization})")]
    NotDivisible { anticanonical: i64, polarization: i64 },

    #[error("bundle cannot be nonspecial: degree {degree} on genus {genus} gives deg - g + 1 < 0")]
    NotNonspecial { degree: i64, genus: i64 },

    #[error("surfaces do not match: F_{left} vs F_{right}")]
    SurfaceMismatch { left: i64, right: i64 },

    #[error("negative geometric genus: p_a = {arithmetic}, total delta = {delta}")]
    NegativeGenus { arithmetic: i64, delta: i64 },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("manifest error: {0}")]
    Manifest(String),

    #[error("recipe error in `{op}`: {message}")]
    Recipe { op: String, message: String },

    #[error("unknown claim selector(s) {unknown:?}; valid ids: {valid}")]
    UnknownClaim { unknown: Vec<String>, valid: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
