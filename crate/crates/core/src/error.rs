use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a partition (parts must be weakly decreasing): {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("invalid Grassmannian G({k},{n}): need 0 <= k <= n and n >= 1")]
    InvalidContext { k: usize, n: usize },

    #[error("partition {partition} does not fit the {rows}x{cols} box of G({k},{n})", rows = .k, cols = .n - .k)]
    BoxViolation {
        partition: String,
        k: usize,
        n: usize,
    },

    #[error("operands live in different rings: {0}")]
    ContextMismatch(String),

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("polynomial is not symmetric in its variables")]
    NotSymmetric,

    #[error("class of degree {actual} where degree {expected} was expected")]
    NotHomogeneous { expected: usize, actual: usize },

    #[error("rank mismatch: {0}")]
    Rank(String),

    #[error("missing Chern class c_{0}")]
    MissingClass(usize),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("ledger file: {0}")]
    Ledger(String),
}
