//! Crate-wide error type.
//!
//! Library routines that can fail return [`Error`]; panics are reserved for
//! violated preconditions that indicate a caller bug (mismatched operator
//! lengths, out-of-range qubit indices, and the like).

use thiserror::Error;

/// Errors surfaced by fallible library and CLI operations.
#[derive(Debug, Error)]
pub enum Error {
    /// A configuration file was syntactically valid but semantically unusable.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// An operation was asked to exceed a hard resource guard.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// A root search never bracketed the target value on the given interval.
    #[error("no crossing of target {target} in [{lo}, {hi}]")]
    NoCrossing { lo: f64, hi: f64, target: f64 },

    /// A least-squares fit had a singular normal system.
    #[error("singular fit: {0}")]
    SingularFit(String),

    /// A linear system over GF(2) had no solution.
    #[error("no solution: {0}")]
    NoSolution(String),

    /// A caller-supplied argument was outside the supported domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// Malformed JSON input.
    #[error(transparent)]
    Json(#[from] serde_json::Error),

    /// A text-format tableau dump could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
