use thiserror::Error;

/// Errors raised by the algebra layer and the problem-file front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd undefined for zero vector")]
    ZeroGcd,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid ring context: {0}")]
    InvalidContext(String),
    #[error("ring context mismatch")]
    ContextMismatch,
    #[error("not a unit: {0}")]
    NotAUnit(String),
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown variable {name} at line {line}, column {column}")]
    UnknownVariable {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("weight of zero undefined")]
    WeightOfZero,
    #[error("element is not weight-homogeneous")]
    NotHomogeneous,
    #[error("hypothesis a ∈ ker(D) violated")]
    NotInKernel,
    #[error("requires D ≠ 0")]
    ZeroDerivation,
    #[error("no nonzero weights")]
    NoNonzeroWeights,
    #[error("not mutually inverse: {0}")]
    NotMutuallyInverse(String),
    #[error("not a slice: {0}")]
    NotASlice(String),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("problem file line {line}: {message}")]
    Problem { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
