use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("the zero polynomial has no finite root multiset")]
    ZeroPolynomial,

    #[error("cannot parse scalar `{input}`: {reason}")]
    ParseScalar { input: String, reason: &'static str },

    #[error("invalid signature: {0}")]
    Signature(String),

    #[error("generator set is not closed under the bracket: [{i}, {j}] leaves the span")]
    NotClosed {
        i: usize,
        j: usize,
        residual: Vec<String>,
    },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("algebra spec `{input}`: expected {production}")]
    AlgebraSpec { input: String, production: String },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
