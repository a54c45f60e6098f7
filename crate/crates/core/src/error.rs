use thiserror::Error;

/// Errors raised by the arithmetic, polynomial, sweep and triangle routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid base {0}: expected an integer in 2..=65536")]
    InvalidBase(u64),
    #[error("digit {digit} is outside the digit range of base {base}")]
    DigitOutOfRange { digit: u64, base: u64 },
    #[error("k = {k} exceeds n = {n}")]
    KExceedsN { k: u64, n: u64 },
    #[error("multinomial needs at least one part")]
    EmptyParts,
    #[error("valuation of {0} is undefined: argument must be positive")]
    NonPositiveValuation(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} must be at least 2")]
    InvalidModulus(u64),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("arity {0} is outside 1..=8")]
    InvalidArity(usize),
    #[error("variable index {index} out of range for arity {arity}")]
    VariableOutOfRange { index: usize, arity: usize },
    #[error("base mismatch: {0} vs {1}")]
    BaseMismatch(u64, u64),
    #[error("triangle with {rows} rows exceeds the limit of {limit} rows")]
    TooLarge { rows: u128, limit: u128 },
    #[error("levels must be at least 1")]
    InvalidLevels,
    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
