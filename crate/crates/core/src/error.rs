use alloc::string::String;

use num_bigint::BigUint;

/// Errors raised by the arithmetic and formula layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("valuation of zero is undefined")]
    ZeroInput,

    #[error("{0} is not prime")]
    NotPrime(BigUint),

    /// The `l`-part of the quantity is a proper fraction, so it cannot be a group order.
    #[error("{l}-adic valuation {valuation} is negative")]
    NegativeValuation { l: BigUint, valuation: i64 },

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("l = {l} divides the field size q = {q}")]
    CharacteristicClash { l: BigUint, q: BigUint },

    #[error("zeta evaluated at a pole")]
    PoleEvaluation,

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn hypothesis(msg: impl Into<String>) -> Self {
        Error::HypothesisViolation(msg.into())
    }

    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn negative(l: BigUint, valuation: i64) -> Self {
        Error::NegativeValuation { l, valuation }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
