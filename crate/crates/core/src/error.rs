use alloc::string::String;

/// Errors raised by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("{value} is outside [0, 1]")]
    OutOfRange { value: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("negative weight {weight} at index {index}")]
    NegativeWeight { index: usize, weight: String },
    #[error("weights sum to {sum}, not 1")]
    WeightSum { sum: String },
    #[error("empty distribution")]
    EmptyDistribution,
    #[error("index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("not a permutation")]
    NotAPermutation,
    #[error("map is not injective")]
    NotInjective,
    #[error("first distribution is not dominated by the second")]
    NotDominated,
    #[error("negative scale {scale}")]
    NegativeScale { scale: String },
    #[error("scaled point weight must be positive, got {weight}")]
    NonPositiveWeight { weight: String },
    #[error("zero has no underlying point")]
    ZeroPoint,
    #[error("degenerate interval [{lo}, {hi}]")]
    DegenerateInterval { lo: f64, hi: f64 },
    #[error("unknown function `{0}`")]
    UnknownFunction(String),
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
