use thiserror::Error;

/// Errors raised by the combinatorial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("period must be at least 2, got {0}")]
    InvalidPeriod(usize),

    #[error("invalid window {window:?}: {reason}")]
    InvalidWindow { window: Vec<i64>, reason: String },

    #[error("letter {letter} is not a residue modulo {n}")]
    InvalidLetter { letter: usize, n: usize },

    #[error("period mismatch: {0} vs {1}")]
    PeriodMismatch(usize, usize),

    #[error("cyclic set must be a proper subset of Z/{0}Z")]
    FullCyclicSet(usize),

    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<usize>, reason: String },

    #[error("invalid cylindric shape: {0}")]
    InvalidShape(String),

    #[error("{what} exceeds cap: {value} > {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("grading mismatch: {0}")]
    GradingMismatch(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("linear solve failed: {0}")]
    Solve(String),

    #[error("internal assertion failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_cap(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        Err(Error::CapExceeded { what, value, cap })
    } else {
        Ok(())
    }
}

/// Checked coefficient arithmetic. Overflow is a hard failure.
pub(crate) fn add_coeff(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("coefficient overflow")
}

pub(crate) fn mul_coeff(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("coefficient overflow")
}
