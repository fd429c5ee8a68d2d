//! Skew Young tableaux, the skew Robinson–Schensted
//! correspondence, and the sign-imbalance of skew partition shapes.
//!
//! The crate is organised bottom-up:
//!
//! - [`shapes`]: partitions, skew shapes, cells, and the statistics
//!   `v`, `h`, `d`, `rsgn`, plus partition enumeration.
//! - [`tableaux`]: partial and standard skew tableaux, reading words,
//!   signs, enumeration, `f`-counts and sign-imbalance.
//! - [`words`]: biwords, partial permutations and their completion to
//!   full permutations.
//! - [`skew_rs`]: the correspondence itself (forward and reverse), its
//!   per-step sign ledgers, and the triple/quadruple bijection.
//! - [`verify`]: exhaustive checkers for the sign-imbalance identities.
//!
//! All arithmetic is exact. Coordinates are 1-indexed `(row, column)`.

#![forbid(unsafe_code)]

pub mod error;
pub mod poly;
pub mod shapes;
pub mod sign;
pub mod skew_rs;
pub mod tableaux;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use poly::SparsePolynomial;
pub use shapes::{Cell, Partition, SkewShape};
pub use sign::Sign;
pub use skew_rs::{InsertionState, InsertionStep, StepKind, Triple};
pub use tableaux::{GhostedValue, Tableau};
pub use verify::VerificationReport;
pub use words::{Biword, PartialPermutation, Permutation};
