use thiserror::Error;

/// Errors produced by the algebra kernel, the generator builders and the
/// Gröbner engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("parse error at offset {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
