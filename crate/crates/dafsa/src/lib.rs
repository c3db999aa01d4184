//! Minimal, deterministic, acyclic finite-state automata (dictionaries)
//! built incrementally from word lists.
//!
//! Two builders produce the same minimal automaton for a given word
//! set:
//!
//! - [`SortedBuilder`] consumes words in lexicographic order and
//!   minimizes each word's tail as soon as the next word diverges from
//!   it. Peak memory stays at minimal-automaton size plus one word.
//! - [`UnsortedBuilder`] accepts words in any order and restores full
//!   minimality after every single insertion, cloning shared states
//!   where a blind in-place edit would alter other words.
//!
//! Both are verified against an independent [`oracle`] pipeline that
//! builds a trie and minimizes it exhaustively. [`io`] provides word
//! ingestion, a canonical text format whose byte equality coincides
//! with automaton isomorphism, and DOT export.

pub mod automaton;
pub mod error;
pub mod io;
pub mod oracle;
pub mod register;
pub mod sorted;
pub mod stats;
pub mod unsorted;

pub use automaton::{Automaton, Label, StateId, StateRecord, Word};
pub use error::{Error, Result};
pub use io::{deserialize, export_dot, read_words, serialize, WordReader};
pub use oracle::{build_trie, canonical_form, minimize_exhaustive};
pub use register::{signature_of, Register, Signature};
pub use sorted::{build_sorted, build_sorted_with_stats, SortedBuilder};
pub use stats::BuildStats;
pub use unsorted::{build_unsorted, build_unsorted_with_stats, UnsortedBuilder};
