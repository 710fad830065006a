use thiserror::Error;

/// Errors shared by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("empty range")]
    EmptyRange,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial must be squarefree")]
    NotSquarefree,
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("factor-degree oracle claimed degree {0} but the gcd split was trivial")]
    OracleLied(usize),
    #[error("loop budget exceeded")]
    LoopBudgetExceeded,
    #[error("oracle inconsistent: {0}")]
    OracleInconsistent(String),
    #[error("f - chi_f vanished; the characteristic divides the smallest-degree factor count")]
    DegenerateDifference,
    #[error("validation failed")]
    ValidationFailed,
    #[error("stuck: {0}")]
    Stuck(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
