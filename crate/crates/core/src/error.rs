use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// Some m-vector entry is not an integer.
    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),

    #[error("coefficient is not antisymmetric under q -> 1/q: {0}")]
    NotAntisymmetric(String),

    #[error("bar-support graph has a cycle through {0}")]
    BarCycle(String),

    #[error("straightening exceeded its fuel budget ({0} rewrites)")]
    FuelExhausted(u64),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("size guard: {0}")]
    TooLarge(String),
}

impl Error {
    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::Parse(_) | Error::TooLarge(_) => 2,
            Error::UnsupportedRegime(_) => 3,
            Error::NotAntisymmetric(_)
            | Error::BarCycle(_)
            | Error::FuelExhausted(_)
            | Error::Invariant(_) => 4,
        }
    }
}
