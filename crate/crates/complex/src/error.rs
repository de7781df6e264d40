//! Error type for census construction.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// The requested value is not a translate of the word's base element.
    #[error("element is not a signed translate of the word's base element")]
    NotATranslate,
}

pub type Result<T> = std::result::Result<T, Error>;
