use thiserror::Error;

/// Errors raised by the algebra kernels and the verification suites.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable set mismatch: {left} vs {right}")]
    VarSetMismatch { left: String, right: String },

    #[error("variable `{0}` has no image in the substitution")]
    UnmappedVariable(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("substitution images do not share one target variable set")]
    MixedTargets,

    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("column count mismatch: {0} vs {1}")]
    ColumnMismatch(usize, usize),

    #[error("ragged matrix rows: expected {expected} columns, found {found}")]
    RaggedRows { expected: usize, found: usize },

    #[error("index {index} out of range 1..={max}")]
    OutOfRange { index: usize, max: usize },

    #[error("wrong number of arguments: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("parity mismatch: {0}")]
    Parity(String),

    #[error("invalid regime parameters: {0}")]
    InvalidRegime(String),

    #[error("cannot parse rational `{0}`")]
    ParseRational(String),

    #[error("evaluation frame could not be completed for degree {0}")]
    Frame(usize),

    #[error("report output failed: {0}")]
    Output(String),
}

pub type Result<T> = std::result::Result<T, Error>;
