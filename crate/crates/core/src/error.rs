use thiserror::Error;

/// Errors raised by the algebra kernel and the construction pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("ring supports at most {max} variables, got {got}")]
    TooManyVariables { max: usize, got: usize },
    #[error("exponent exceeds the supported maximum of {0}")]
    ExponentOverflow(u32),
    #[error("negative degree {0}")]
    NegativeDegree(i64),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("pfaffian order must be even, got {0}")]
    OddPfaffian(usize),
    #[error("input is not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unsupported characteristic {0}")]
    UnsupportedCharacteristic(u32),
    #[error("factorization did not split after {0} attempts")]
    FactorizationFailed(usize),
    #[error("nothing found after {attempts} attempts: {what}")]
    NotFound { what: String, attempts: usize },
    #[error("retries exhausted after {attempts} attempts: {what}")]
    RetriesExhausted { what: String, attempts: usize },
    #[error("genus is only defined for curves, variety has dimension {0}")]
    GenusUndefined(i64),
    #[error("resolution did not terminate within {0} steps")]
    ResolutionTooLong(usize),
    #[error("expected a codimension-2 curve in P^3: {0}")]
    WrongCodimension(String),
    #[error("numerator has no natural Betti table: {0}")]
    NotNatural(String),
    #[error("liaison degrees not available: {0}")]
    LiaisonDegrees(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
