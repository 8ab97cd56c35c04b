//! Crate-wide error type and exit-code mapping for the CLI.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("format error in {path}: {reason}")]
    Format { path: String, reason: String },

    #[error("dimension mismatch in {op}: {detail}")]
    Dimension { op: String, detail: String },

    #[error("degenerate input `{id}`: {reason}")]
    Degenerate { id: String, reason: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("non-finite value in {op}: {detail}")]
    NonFinite { op: String, detail: String },

    #[error("training diverged at step {step}: {detail}")]
    Divergence { step: usize, detail: String },

    #[error("gradient check failed: max relative error {max_rel_err:.3e} exceeds tolerance {tol:.3e}")]
    GradCheck { max_rel_err: f64, tol: f64 },
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    pub fn format(path: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Format { path: path.into(), reason: reason.into() }
    }

    pub fn dimension(op: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Dimension { op: op.into(), detail: detail.into() }
    }

    pub fn degenerate(id: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Degenerate { id: id.into(), reason: reason.into() }
    }

    pub fn non_finite(op: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::NonFinite { op: op.into(), detail: detail.into() }
    }

    /// CLI exit code: 1 usage, 2 data, 3 numeric failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 1,
            Error::Io { .. } | Error::Format { .. } | Error::Dimension { .. } | Error::Degenerate { .. } => 2,
            Error::NonFinite { .. } | Error::Divergence { .. } | Error::GradCheck { .. } => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
