use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("root order must be odd and at least 3, got {0}")]
    BadOrder(i64),
    #[error("scalars from different fields: N={0} and N={1}")]
    FieldMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("unsupported algebra for this operation: {0}")]
    Unsupported(String),
    #[error("algebra mismatch: {0} vs {1}")]
    AlgebraMismatch(String, String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("not semi-weight: {0}")]
    NotSemiweight(String),
    #[error("matrix is not in the big Bruhat cell (upper-left entry is zero)")]
    NotBigCell,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("inconsistent system: {0}")]
    Inconsistent(String),
    #[error("not an intertwiner: {0}")]
    NotIntertwiner(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
