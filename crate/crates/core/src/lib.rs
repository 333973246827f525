//! Contiguous pattern avoidance over finite alphabets.
//!
//! * [`word`] and [`pattern`]: words, border structure, KMP scanning.
//! * [`counting`]: `|A_n(p)|` from the generating function, the border
//!   recurrence, the pattern automaton, and brute force.
//! * [`bijection`]: the replacement maps `φ_L` / `φ_R` and their checks.
//! * [`census`]: classification of all equal-length pattern pairs.

pub mod bijection;
pub mod budget;
pub mod census;
pub mod counting;
pub mod error;
pub mod pattern;
pub mod poly;
pub mod repro;
mod union_find;
pub mod word;

pub use budget::Budget;
pub use error::{Error, Result};
pub use pattern::Pattern;
pub use word::{Alphabet, LetterPermutation, Word};
