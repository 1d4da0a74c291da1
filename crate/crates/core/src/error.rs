use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A size limit that keeps enumeration or Ryser runs bounded was exceeded.
    #[error("size guard `{guard}`: got {got}, limit is {limit}")]
    SizeGuard {
        guard: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("cyclotomic field mismatch: order {left} vs order {right}")]
    FieldMismatch { left: usize, right: usize },

    #[error("division by zero")]
    DivisionByZero,

    /// Two coordinates of a point vector coincide, so some `x_j - x_k` vanishes.
    #[error("duplicate points at positions {first} and {second}")]
    DuplicatePoints { first: usize, second: usize },

    #[error("determinant requires a field; this scalar ring has non-invertible elements")]
    NonField,

    #[error("degenerate denominator 1 - zeta^{diff} in Q(zeta_{order})")]
    DegenerateDenominator { order: usize, diff: i64 },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("{0} is not prime")]
    NonPrime(u64),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn guard(guard: &'static str, got: usize, limit: usize) -> Result<()> {
    if got > limit {
        Err(Error::SizeGuard { guard, got, limit })
    } else {
        Ok(())
    }
}
