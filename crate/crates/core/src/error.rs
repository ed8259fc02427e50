use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the quantity is defined.
    #[error("{0}")]
    Domain(String),

    #[error("f - target does not change sign on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("function returned a non-finite value at x = {x}")]
    NonFinite { x: f64 },

    #[error("no convergence after {iterations} iterations (bracket [{lo}, {hi}])")]
    IterationLimit { iterations: usize, lo: f64, hi: f64 },

    /// The bracket collapsed to adjacent floats before the residual bound was met.
    #[error("bracket collapsed at x = {x} with residual {residual:e} above tolerance")]
    Stalled { x: f64, residual: f64 },

    /// The requested object provably does not exist.
    #[error("{0}")]
    NotRepresentable(String),

    /// A computed result failed its own consistency check.
    #[error("{0}")]
    Inconsistent(String),
}

impl Error {
    /// Stable machine-readable name of the error kind.
    pub fn token(&self) -> &'static str {
        match self {
            Error::Domain(_) => "DomainError",
            Error::NoSignChange { .. } => "NoSignChange",
            Error::NonFinite { .. } => "NonFinite",
            Error::IterationLimit { .. } => "IterationLimit",
            Error::Stalled { .. } => "Stalled",
            Error::NotRepresentable(_) => "NotRepresentable",
            Error::Inconsistent(_) => "Inconsistent",
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
