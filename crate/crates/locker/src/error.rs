use thiserror::Error;

/// Errors across the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid placement: {0}")]
    InvalidPlacement(String),

    #[error("query budget of {budget} exhausted")]
    BudgetExceeded { budget: usize },

    #[error("locker index {index} outside [1, {bound}]")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("invalid player count {n}: {reason}")]
    InvalidN { n: usize, reason: &'static str },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("player {player} opened empty locker {locker}; the pointer strategy is undefined there")]
    EmptyLockerEncountered { player: usize, locker: usize },

    #[error("{what} too large: {value} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("strategy is randomized; exhaustive enumeration needs a deterministic replay")]
    NotDeterministic,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
