use thiserror::Error;

use crate::model::Structure;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("fixed point {point}: weight {index} is zero, the fixed point would not be isolated")]
    ZeroWeight { point: usize, index: usize },
    #[error("fixed point {point} has {found} weights, expected {expected}")]
    ArityMismatch {
        point: usize,
        expected: usize,
        found: usize,
    },
    #[error("half dimension must be at least 1, got {0}")]
    BadDimension(usize),
    #[error("operation requires a {expected} profile, got {found}")]
    WrongStructure { expected: Structure, found: Structure },
    #[error("exponent {0} appears more than once, fixed set would not be isolated")]
    DuplicateExponent(i64),
    #[error("elementary symmetric index {index} out of range for {len} variables")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("partition part {part} exceeds the number of weights {len}")]
    PartTooLarge { part: usize, len: usize },
    #[error("degree {degree} exceeds half dimension {half_dimension}")]
    DegreeTooHigh { degree: usize, half_dimension: usize },
    #[error("half dimension {half_dimension} is not a multiple of {divisor}")]
    NonDivisibleDimension { half_dimension: usize, divisor: usize },
    #[error("profile is not semi-free: fixed point {point} has weight {weight}")]
    NotSemifree { point: usize, weight: String },
    #[error("profile has no fixed points")]
    EmptyProfile,
    #[error("division by the zero rational function")]
    DivisionByZeroFunction,
    #[error("exponent {0} does not fit in machine range")]
    ExponentOverflow(String),
    #[error("invalid partition {0:?}")]
    BadPartition(String),
    #[error("invalid parameter: {0}")]
    BadParams(String),
    #[error("malformed profile JSON: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
