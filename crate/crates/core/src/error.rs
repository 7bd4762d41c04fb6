use thiserror::Error;

/// Errors surfaced by the kernel. Preconditions the spec marks as
/// "errors: none" are enforced with assertions instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("denominator is divisible by the characteristic {p}")]
    ZeroDenominator { p: u64 },

    #[error("non-homogeneous input: {0}")]
    NonHomogeneous(String),

    #[error("change of coordinates is singular")]
    SingularTransform,

    #[error("invalid transform: {0}")]
    InvalidTransform(String),

    #[error("not the Hilbert function of an ideal: segment at degree {degree} does not contain all multiples of the previous segment")]
    InvalidHilbertFunction { degree: usize },

    #[error("Borel precondition failed: {0}")]
    BorelPrecondition(String),

    #[error("input error: {0}")]
    Input(String),

    #[error("generic initial ideal did not stabilize over {trials} trials (raise trials or height)")]
    UnstableGin { trials: usize },

    #[error("failed to sample an invertible matrix after {0} attempts")]
    SamplingFailed(usize),

    #[error("Taylor complex too large: {gens} generators; use the syzygy resolution instead")]
    TaylorTooLarge { gens: usize },

    #[error("resolution truncated: need homological degree {needed}, have {have}")]
    Truncation { needed: usize, have: usize },

    #[error("internal self-check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
