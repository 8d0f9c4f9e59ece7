use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors raised by constructors and operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: wrong shapes, unknown names, out-of-range values.
    Input(String),
    /// Structurally well formed but violates an algebraic invariant.
    Validation(Vec<String>),
    /// An enumeration would exceed the configured cap.
    CapExceeded { what: String, limit: u64 },
    /// The request cannot be served by the chosen backend.
    Resource(String),
    /// A documented precondition of the operation is not met.
    Precondition(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Input(m) => write!(f, "invalid input: {m}"),
            Error::Validation(v) => {
                write!(f, "validation failed: ")?;
                for (i, m) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    write!(f, "{m}")?;
                }
                Ok(())
            }
            Error::CapExceeded { what, limit } => {
                write!(f, "cap exceeded while enumerating {what} (limit {limit})")
            }
            Error::Resource(m) => write!(f, "unsupported: {m}"),
            Error::Precondition(m) => write!(f, "precondition not met: {m}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
