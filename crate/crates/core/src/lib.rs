//! Permutation statistics, order-`k` Fibonacci numbers and the regular
//! languages and bijections that connect them.
//!
//! The crate is organised around a few exact objects:
//!
//! - [`Permutation`] with descent, peak and valley statistics, inverse
//!   statistics and consecutive pattern tests;
//! - [`Composition`] and [`fib`], the Fibonacci numbers of order `k`;
//! - [`Word`] and [`Regex`], with a DFA compiler for counting and unambiguity
//!   checks;
//! - [`bijection`], mapping permutations with one inverse left peak to words
//!   and then to pairs of domino tilings;
//! - [`series`], exact truncated power series used to check the generating
//!   functions for inverse peaks of monotone-pattern avoiders;
//! - [`oracle`], brute-force verification reports behind the `permfib`
//!   command-line tool.

pub mod bijection;
pub mod cli;
pub mod composition;
pub mod error;
pub mod oracle;
pub mod perm;
pub mod regex;
pub mod series;
pub mod word;

pub use composition::{composition_reverse, compositions, fib, Composition};
pub use error::{Error, Result};
pub use perm::{permutations, standardize, Permutation, StatReport};
pub use regex::{w_regex, z_regex, Dfa, Regex};
pub use word::{Letter, Word};
