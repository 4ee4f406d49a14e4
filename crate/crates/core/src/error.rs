use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition parts must be positive integers, got {0}")]
    NonPositivePart(i64),

    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: i64,
        reason: &'static str,
    },

    #[error("series has a non-unit constant term and cannot be inverted")]
    NonUnitConstant,

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("{what} = {requested} exceeds the resource ceiling {ceiling}")]
    ResourceCeiling {
        what: &'static str,
        requested: u64,
        ceiling: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, value: impl Into<i64>, reason: &'static str) -> Error {
    Error::InvalidParameter {
        name,
        value: value.into(),
        reason,
    }
}
