use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("config parse error on line {line}: {msg}")]
    Config { line: usize, msg: String },

    #[error("orbit too short: {len} points, need more than {needed}")]
    OrbitTooShort { len: usize, needed: usize },

    #[error("orbit diverged at step {0}, before the transient was discarded")]
    DivergedBeforeDiscard(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
