//! Error type for the exact matrix oracle.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// A row fed to the triangular constructor has the wrong length or a
    /// diagonal entry different from one.
    #[error("row {row} does not fit a unit lower triangle: {detail}")]
    BadShape { row: usize, detail: String },
    /// A generator product needs exactly one parameter per word letter.
    #[error("expected {expected} parameters, got {got}")]
    ParameterCount { expected: usize, got: usize },
    /// A positive witness was given a zero or negative parameter.
    #[error("witness parameters must all be positive")]
    NotPositive,
    /// The embedded path fixture file failed to parse or validate.
    #[error("path fixture is malformed: {0}")]
    Fixture(String),
    /// Consecutive fixture paths disagree where their endpoints must meet.
    #[error("family {family}, path {index}: endpoint at t=1 differs from the next path at t=-1")]
    ChainBroken { family: String, index: usize },
    /// A sampled point on a fixture path failed a rank or cell check.
    #[error("family {family}, path {index} at t={t}: {detail}")]
    PathCheck {
        family: String,
        index: usize,
        t: String,
        detail: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
