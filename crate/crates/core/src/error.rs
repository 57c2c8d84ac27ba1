use thiserror::Error;

/// Errors raised by evaluators, certificates and the report layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the domain of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The argument sits inside a guard zone around a removable singularity,
    /// where the enclosure cannot be resolved without losing all precision.
    #[error("inconclusive precision: {0}")]
    InconclusivePrecision(String),

    /// The result is not representable as a finite binary64 enclosure.
    #[error("overflow: {0}")]
    Overflow(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
