use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("multi-indices live in different ambient spaces ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("{rows} rows exceed ambient dimension {cols}")]
    TooManyRows { rows: usize, cols: usize },
    #[error("1-flattening kernel has dimension {found}, expected {expected}")]
    UnexpectedKernelDim { expected: usize, found: usize },
    #[error("form is not divisible by the overlap plane")]
    NotDivisible,
    #[error("overlap basis has rank {rank}, expected {expected}")]
    RankDeficient { expected: usize, rank: usize },
    #[error("sample still degenerate after {0} retries")]
    DegenerateAfterRetries(usize),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("n = {n} is below the stability step p = {p}")]
    BelowStability { n: usize, p: usize },
    #[error("parameter mismatch: {0}")]
    ParamMismatch(String),
    #[error("codeword lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
