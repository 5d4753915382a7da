use thiserror::Error;

/// Errors raised by the library. Verification mismatches are not errors; they
/// are reported through [`crate::verify::VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("coefficient index {index} exceeds series order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("constant term must be {expected} for {op}")]
    ConstantTerm { op: &'static str, expected: &'static str },
    #[error("product family diverges: geometric base has absolute value >= 1")]
    Divergent,
    #[error("zero denominator: {0}")]
    ZeroDenominator(String),
    #[error("unknown series name `{0}`")]
    UnknownSeries(String),
    #[error("invalid field size {0}: not a supported prime power")]
    InvalidFieldSize(u64),
    #[error("{what} = {value} exceeds the configured cap {cap}")]
    CapExceeded { what: &'static str, value: u64, cap: u64 },
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("group closure exceeded the element budget of {0}")]
    BudgetExceeded(usize),
    #[error("group order {got} does not match the order formula {expected}")]
    OrderGate { got: u128, expected: u128 },
    #[error("non-integral character degree {0}")]
    NonIntegral(String),
}

pub type Result<T> = std::result::Result<T, Error>;
