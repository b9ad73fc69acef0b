//! Error type shared by every module, with the process exit code each
//! category maps to: 2 for rejected input, 3 for an exhausted soundness
//! window, 1 for a broken internal invariant.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeChar(u64),
    #[error("ideal generator with zero exponent vector (the quotient would be the zero ring)")]
    ZeroExponentGenerator,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("no variables declared")]
    EmptyVariables,
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("malformed monomial `{0}`: {1}")]
    MalformedMonomial(String, String),
    #[error("malformed element `{0}`: {1}")]
    MalformedElement(String, String),
    #[error("malformed ring file: {0}")]
    MalformedRingFile(String),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("exponent vector has {found} entries, ring has {expected} variables")]
    ArityMismatch { expected: usize, found: usize },
    #[error("expected {expected} generators (= Krull dimension), got {found}")]
    WrongGeneratorCount { expected: usize, found: usize },
    #[error("generator is not homogeneous of degree >= 1: {0}")]
    InhomogeneousGenerator(String),
    #[error("operation requires a certified parameter system")]
    UncertifiedSystem,
    #[error("operation requires a ring of dimension {expected}, got {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("element is not contained in the target ideal")]
    ContainmentFailure,
    #[error("truncation window exhausted: degree {needed} requested, horizon is {horizon}")]
    WindowExceeded { needed: usize, horizon: usize },
    #[error("truncation budget exceeded: N = {requested} over cap {cap}")]
    TruncationBudget { requested: usize, cap: usize },
    #[error("basis budget exceeded: {count} standard monomials over cap {cap}")]
    BasisBudget { count: usize, cap: usize },
    #[error("no reduction witness found up to degree {checked}: {detail}")]
    Inconclusive { checked: usize, detail: String },
    #[error("{0}")]
    InvalidArgument(String),
    #[error("internal invariant violation: {0}")]
    Internal(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI contract.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Internal(_) => 1,
            Error::WindowExceeded { .. }
            | Error::TruncationBudget { .. }
            | Error::BasisBudget { .. }
            | Error::Inconclusive { .. } => 3,
            _ => 2,
        }
    }
}
