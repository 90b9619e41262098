use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("matrix is not skew-symmetric: {0}")]
    NotSkew(String),
    #[error("group element violates det(g1)^2 det(g2) = 1 (got {0})")]
    Determinant(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("data error: {0}")]
    Data(String),
    #[error("unsupported prime {0}: only primes greater than 3 are handled")]
    UnsupportedPrime(u64),
    #[error("curve is not minimal at {0}")]
    NotMinimal(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("linear program is {0}")]
    LpStatus(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
