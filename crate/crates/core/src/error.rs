use thiserror::Error;

/// Errors raised by the algebra layers (fields, series, theta expansion, evaluation).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclotomic orders differ: {left} vs {right}")]
    OrderMismatch { left: u64, right: u64 },

    #[error("cannot embed order {from} into order {to}: {from} does not divide {to}")]
    IncompatibleOrders { from: u64, to: u64 },

    #[error("order {0} is not divisible by 4, so real and imaginary parts are undefined")]
    OrderNotDivisibleBy4(u64),

    #[error("element is not invertible")]
    NotInvertible,

    #[error("scaled monomial coefficient must be nonzero")]
    ZeroCoefficient,

    #[error("requested degree {requested} exceeds series validity {validity}")]
    ValidityExceeded { requested: i64, validity: i64 },

    #[error("series is empty")]
    EmptySeries,

    #[error("non-convergent arguments: total degree {0} must be positive")]
    NonConvergent(i64),

    #[error("theta argument does not fold to a single scaled monomial: {0}")]
    NonMonomialArgument(String),

    #[error("negative power of a non-monomial: {0}")]
    NegativePowerOfSeries(String),

    #[error("invalid dissection parameters m={m}, k={k}")]
    InvalidDissection { m: i64, k: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
