use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("one-line form must be a permutation of 1..={n_plus_1}, got {value}")]
    NotBijection { n_plus_1: usize, value: u8 },
    #[error("one-line form must have between 1 and {max} entries, got {got}")]
    BadLength { max: usize, got: usize },
    #[error("cannot parse permutation from {0:?}")]
    ParsePermutation(String),
    #[error("cannot parse word from {0:?}")]
    ParseWord(String),
    #[error("letter {letter} out of range 1..={n}")]
    LetterOutOfRange { letter: u8, n: u8 },
    #[error("word of length {len} is not reduced (inversion count {inv})")]
    NotReduced { len: usize, inv: usize },
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
