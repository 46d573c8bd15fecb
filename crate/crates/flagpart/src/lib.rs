//! Exact-arithmetic computations with flagged P-partitions.
//!
//! The crate provides the combinatorial vocabulary (letters of an augmented
//! alphabet, exponent vectors, compositions), sparse integer polynomials with
//! the revlex order, finite posets carrying labeled flags, slide and forest
//! polynomials, the space of back-stable quasisymmetric functions in its
//! tensor basis, and the signed expansion of monomials into (back-stable)
//! slides via the Möbius function of the lattice of nonincreasing words.
//!
//! All coefficients are exact `i64` integers; every operation is a pure
//! function over immutable values.

pub mod backstable;
pub mod composition;
pub mod forest;
pub mod kostka;
pub mod letter;
pub mod nvector;
pub mod poly;
pub mod poset;
pub mod slide;
pub mod verify;

mod rng;

pub use composition::Composition;
pub use letter::{standardize, InjectiveWord, Letter};
pub use nvector::NVector;
pub use poly::Polynomial;
pub use poset::{FlaggedPoset, PartitionMap};

use thiserror::Error;

/// Errors raised by construction, validation, and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("letter {0} repeats in word")]
    RepeatedLetter(Letter),
    #[error("composition weight is {actual}, expected {expected}")]
    WeightMismatch { expected: u32, actual: u32 },
    #[error("subset element {0} outside 1..{1}")]
    SubsetOutOfRange(u32, u32),
    #[error("words have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("words are not comparable")]
    NotComparable,
    #[error("support contains nonpositive index {0}")]
    NonPositiveSupport(i32),
    #[error("word contains nonpositive letter {0}")]
    NonPositiveLetter(i32),
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("invalid poset: {0}")]
    Poset(String),
    #[error("flag value {0} is below 1")]
    FlagValue(i32),
    #[error("poset is not a chain")]
    NotAChain,
    #[error("invalid forest: {0}")]
    Forest(String),
}

impl Error {
    /// True for errors caused by malformed textual input, as opposed to
    /// violated mathematical preconditions.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
