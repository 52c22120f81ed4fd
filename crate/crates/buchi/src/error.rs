use thiserror::Error;

pub type Result<T> = std::result::Result<T, BuchiError>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BuchiError {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("track {track} out of range for arity {arity}")]
    TrackOutOfRange { track: usize, arity: usize },

    #[error("state cap exceeded: more than {cap} intermediate states")]
    StateCap { cap: usize },

    #[error("alphabet of arity {arity} too large for this operation")]
    AlphabetTooLarge { arity: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Resource bounds for the potentially explosive operations.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Cap on intermediate state counts in complementation and products.
    pub max_states: usize,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            max_states: 5_000_000,
        }
    }
}

impl Limits {
    pub fn with_cap(max_states: usize) -> Limits {
        Limits { max_states }
    }
}
