//! Bit-packed vectors and matrices over GF(2).
//!
//! Coordinates are 0-indexed throughout the Rust API. Everything that
//! crosses an I/O boundary (support lists, pivot listings printed by the
//! CLI) is 1-indexed, matching the usual coordinate convention for code
//! supports; [`BitWord::support`] and [`BitWord::from_support`] speak
//! 1-indexed for that reason.
//!
//! All values are immutable once built by the higher-level modules, and
//! every operation here is a pure function of its inputs, so sharing
//! across threads needs no synchronization.

mod matrix;
mod word;

pub use matrix::{BitMatrix, Rref};
pub use word::BitWord;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Gf2Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("invalid bit character {0:?} (expected '0' or '1')")]
    InvalidBitChar(char),
    #[error(
        "coordinate {coordinate} out of range for length {length} (coordinates are 1-indexed)"
    )]
    CoordinateOutOfRange { coordinate: usize, length: usize },
    #[error("empty word or matrix where a nonempty one is required")]
    Empty,
    #[error("rows have differing lengths: {left} vs {right}")]
    RaggedRows { left: usize, right: usize },
}
