use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Structurally invalid input (bad lengths, non-finite values, bad files).
    #[error("validation error: {0}")]
    Validation(String),

    /// Malformed record in an input file.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A numerical method failed to reach its tolerance.
    #[error("numerical error: {0}")]
    Numerical(String),

    /// Parameter estimation failed; the caller should fall back to a heuristic seed.
    #[error("estimation error: {0}")]
    Estimation(String),

    /// A calibration target lies outside the attainable range.
    #[error("calibration error: {message} (attainable prices [{lo}, {hi}])")]
    Calibration { message: String, lo: f64, hi: f64 },
}

/// Coarse classification used for machine-readable reporting and exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Domain/validation problems: the request itself is bad.
    Invalid,
    /// Numerical failures: the request was fine, the computation failed.
    Numerical,
}

impl Error {
    /// Short stable code for machine-readable error envelopes.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Validation(_) => "validation",
            Error::Parse { .. } => "parse",
            Error::Numerical(_) => "numerical",
            Error::Estimation(_) => "estimation",
            Error::Calibration { .. } => "calibration",
        }
    }

    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Domain(_) | Error::Validation(_) | Error::Parse { .. } | Error::Calibration { .. } => {
                ErrorKind::Invalid
            }
            Error::Numerical(_) | Error::Estimation(_) => ErrorKind::Numerical,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn numerical(msg: impl Into<String>) -> Error {
    Error::Numerical(msg.into())
}

pub(crate) fn validation(msg: impl Into<String>) -> Error {
    Error::Validation(msg.into())
}
