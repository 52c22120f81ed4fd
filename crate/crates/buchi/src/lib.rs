//! Nondeterministic Büchi automata over the alphabet `{0, 1, #}^k`.
//!
//! Letters are 2-bit packed into [`Sym`]; transition labels are unions of
//! track-wise cubes ([`Label`]), which keeps product and complement
//! constructions polynomial in the number of tracks instead of exponential.
//! The ops module provides the closure properties (intersection, union,
//! projection, complementation) plus emptiness with lasso witnesses and
//! simulation-based state reduction.

pub mod automaton;
pub mod error;
pub mod format;
pub mod ops;
pub mod sym;
pub mod word;

pub use automaton::{build_machine, BitSet, Buchi, Edge, State};
pub use error::{BuchiError, Limits, Result};
pub use sym::{all_syms, Cube, Label, Letter, Sym, MAX_ARITY, MAX_ENUM_ARITY};
pub use word::UpWord;
