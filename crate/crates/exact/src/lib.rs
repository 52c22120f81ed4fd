//! Exact ground-truth arithmetic for continued fractions and Ostrowski
//! numeration: big-integer convergents, greedy digit expansions, quadratic
//! surds for the differences β_k, and Sturmian letters by interval
//! refinement. Deliberately independent of the automata crates so the two
//! implementations can check each other.

mod slope;
mod surd;

pub use slope::{ExactSlope, PrefixOrdering, MAX_DEPTH};
pub use surd::Surd;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("continued fraction has only {available} known terms")]
    TermsExhausted { available: usize },
    #[error("operation requires an eventually periodic continued fraction")]
    NonPeriodic,
    #[error("interval refinement still uncertain at depth {depth}")]
    InsufficientPrecision { depth: usize },
}
