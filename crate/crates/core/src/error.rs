//! Error type shared by the library modules.

use thiserror::Error;

/// Errors surfaced by fallible operations. Violations of internal closure
/// invariants (exact divisibility, coefficient cancellation) panic instead:
/// they indicate a bug, not bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational literal {0:?} (expected `-?digits(/digits)?` with a positive denominator)")]
    InvalidRational(String),

    #[error("denominator polynomial is zero")]
    ZeroDenominator,

    #[error("series reciprocal requires an invertible constant term, got {0}")]
    NonInvertibleConstant(String),

    #[error("index k is required for Stirling numbers and only for them")]
    StirlingIndex,

    #[error("Bernstein index k={k} exceeds degree n={n}")]
    BernsteinIndex { k: usize, n: usize },

    #[error("polylogarithm partial sums require |z| < 1, got z = {0}")]
    PolylogDomain(String),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u32),

    #[error("p^N exceeds the size cap: p = {p}, N = {level}, cap = {cap}")]
    CapExceeded { p: u32, level: u32, cap: u64 },
}
