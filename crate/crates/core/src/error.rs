use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("generator {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("generator {index} is zero")]
    ZeroGenerator { index: usize },
    #[error("expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range for {n} variables")]
    VariableOutOfRange { index: usize, n: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("expected a monomial ideal")]
    NotMonomial,
    #[error("generic initial ideal not certified: {0}")]
    GenericityFailure(String),
    #[error("{0}")]
    Invalid(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
