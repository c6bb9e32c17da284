use thiserror::Error;

/// Errors raised by parameter validation across the crate.
///
/// Negative mathematical verdicts (a polynomial that is not Weil, an
/// unbounded LP) are ordinary return values, not errors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial has degree 0")]
    ConstantPolynomial,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("{0} is not a prime power")]
    NotPrimePower(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus must be a positive integer, got {0}")]
    BadModulus(String),
    #[error("reversal identity fails")]
    ReversalFails,
    #[error("polynomial has odd degree {0}")]
    OddDegree(usize),
    #[error("polynomial vanishes at a square root of the modulus")]
    RootAtSqrtModulus,
    #[error("interval endpoints out of order")]
    EmptyInterval,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("argument {0} outside the allowed range")]
    OutOfDomain(f64),
    #[error("density cannot be normalized: {0}")]
    Unnormalizable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
