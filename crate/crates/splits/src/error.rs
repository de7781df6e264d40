use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("letter at position {0} is not a tourist")]
    NotATourist(usize),
    #[error("no single-crossing curve separates the diagram at row {0}")]
    NotSeparable(u8),
    #[error("no two-crossing face admits the collapse at row {0}")]
    NoCollapse(u8),
    #[error(transparent)]
    Word(#[from] perm_core::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
