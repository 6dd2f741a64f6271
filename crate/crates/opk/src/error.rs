use thiserror::Error;

/// Everything that can go wrong while building, reducing or solving an instance.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    /// An exponential stage would exceed its configured limit.
    #[error("budget exceeded: {what} is {actual}, limit {limit} (raise it with OPK_BUDGET)")]
    Budget {
        what: &'static str,
        limit: u64,
        actual: u64,
    },

    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    /// An internal invariant did not hold; always a bug upstream of the caller.
    #[error("structural violation: {0}")]
    Structural(String),

    #[error("maximum degree {found} exceeds the supported {limit}")]
    Degree { found: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
