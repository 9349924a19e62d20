//! Error type shared by every module in the crate.

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum CoreError {
    /// Shapes of two related values disagree.
    Dimension(String),
    /// An input violates a documented precondition (non-finite values,
    /// out-of-range labels, bad temperatures, ...).
    Validation(String),
    /// A hyperparameter combination is inconsistent (e.g. alpha > 0 without
    /// soft labels).
    Config(String),
    /// Training produced a non-finite loss.
    Training {
        epoch: usize,
        batch: usize,
        message: String,
    },
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::Dimension(msg) => write!(f, "dimension mismatch: {msg}"),
            CoreError::Validation(msg) => write!(f, "invalid input: {msg}"),
            CoreError::Config(msg) => write!(f, "invalid configuration: {msg}"),
            CoreError::Training {
                epoch,
                batch,
                message,
            } => write!(f, "training failed at epoch {epoch}, batch {batch}: {message}"),
        }
    }
}

impl core::error::Error for CoreError {}

pub(crate) type Result<T> = core::result::Result<T, CoreError>;
