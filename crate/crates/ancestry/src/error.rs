//! Error type shared by the enumeration and counting routines.

use thiserror::Error;

/// Errors raised while building or consuming sign vectors.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// A sign vector would exceed the packed capacity.
    #[error("sign vector of length {0} exceeds the packed capacity")]
    VectorTooLong(usize),

    /// An entry outside {-2, -1, +1, +2} was supplied.
    #[error("invalid sign entry {0}; expected -2, -1, +1, or +2")]
    BadSignValue(i8),

    /// An unknown letter appeared in the compact text form.
    #[error("invalid sign letter {0:?}; expected one of b, w, B, W")]
    BadSignLetter(char),

    /// A unit-only operation hit a doubled entry.
    #[error("position {0} holds a doubled entry and cannot be flipped")]
    FlipOnDoubledEntry(usize),

    /// A sign vector does not match the word it is paired with.
    #[error("sign vector has {got} entries but the word has {want} letters")]
    LengthMismatch { got: usize, want: usize },

    /// An operation that only applies in dimension zero saw a higher one.
    #[error("operation requires a dimension-zero vector, found dimension {0}")]
    NotDimensionZero(usize),

    /// An operation that only applies in dimension one saw another one.
    #[error("operation requires a dimension-one vector, found dimension {0}")]
    NotDimensionOne(usize),

    /// A sign vector cannot be realized by any walk over the word.
    #[error("sign vector is not realizable over the given word")]
    NotRealizable,

    /// The requested value is not a translate of the base element.
    #[error("element is not a signed translate of the word's base element")]
    NotATranslate,
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
