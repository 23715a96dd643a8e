use thiserror::Error;

/// Crate-wide error type.
///
/// `InvalidBasis`, `Domain`, and `Config` are validation failures (CLI exit
/// code 2); `Conditioning` and `MonteCarlo` are numerical-diagnostic failures
/// (CLI exit code 3).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("conditioning failure: {0}")]
    Conditioning(String),
    #[error("monte carlo failure: {0}")]
    MonteCarlo(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors that indicate a numerical diagnostic tripped, as
    /// opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::Conditioning(_) | Error::MonteCarlo(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
