use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid cycle type: {0}")]
    InvalidCycleType(String),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid set partition: {0}")]
    InvalidSetPartition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("cannot pad partition {lambda:?} to size {n}: need n - |lambda| >= lambda_1")]
    Padding { lambda: Vec<u32>, n: u32 },

    #[error("no value supplied for variable {0}")]
    MissingVariable(String),

    #[error("refusing {what}: requested {requested}, limit {limit} (raise the guardrail to override)")]
    Guardrail {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    #[error("interpolation failed: {0}")]
    Interpolation(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
