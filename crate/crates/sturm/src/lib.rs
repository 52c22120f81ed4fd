//! Decision machinery for characteristic Sturmian words, built on Büchi
//! automata over `{0,1,#}`-track alphabets.
//!
//! The layers, bottom to top:
//!
//! * [`encoding`] — the `#`-separated binary coding of continued fractions,
//!   block orders, and the zero-closure (padding invariance) operator.
//! * [`ostrowski`] — validity, order, and successor automata for Ostrowski
//!   numeration, uniformly in the slope.
//! * [`adder`] — the uniform Ostrowski adder: an abstract carry machine
//!   shipped as a text asset, expanded over the bit-level alphabet, and
//!   certified by a self-verification gate.
//! * [`structure`] — the ω-regular presentation of `([-α,∞), <, +, ℕ, αℕ)`
//!   and its full-line consequences.
//! * [`logic`] — a small first-order compiler (sorts, quantifiers, negation
//!   relative to sort domains) that turns sentences into emptiness checks.
//!
//! Everything here is deterministic: identical inputs produce identical
//! automata, state numberings included.

pub mod decode;
pub mod encoding;
pub mod error;
pub mod ostrowski;
pub mod words;

pub use error::{Result, SturmError};
