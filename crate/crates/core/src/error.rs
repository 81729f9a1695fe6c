use thiserror::Error;

use crate::monomial::IndexSet;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("too many variables: {0} (at most {max} supported)", max = crate::MAX_VARS)]
    TooManyVariables(usize),

    #[error("value {0} exceeds the supported maximum of {max}", max = crate::MAX_VALUE)]
    ValueTooLarge(u64),

    #[error("index {index} is out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("{0}: the zero ideal has no meaningful answer here")]
    ZeroIdealInput(&'static str),

    #[error("{0}: the unit ideal has no meaningful answer here")]
    UnitIdealInput(&'static str),

    #[error("zero ideal: the caps sum to {sum} but the degree is {d} (need a_1 + ... + a_n >= d)")]
    EmptyPolymatroid { d: u64, sum: u64 },

    #[error("invalid base set: {0}")]
    InvalidBaseSet(String),

    #[error("base set violates the exchange property")]
    NotPolymatroid,

    #[error("base set violates the strong exchange property")]
    NotStrongExchange,

    #[error("parameters are not in normalized form (need d > a_1 >= ... >= a_n >= 1)")]
    NotNormalized,

    #[error("ideal is not squarefree strongly stable")]
    NotStronglyStable,

    #[error("squarefree ideal generator {0} is not inside the ground set")]
    GeneratorOutOfRange(IndexSet),

    #[error("oracle budget exceeded: {what} needs {needed}, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        budget: u64,
    },

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("usage: {0}")]
    Usage(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
