use std::fmt;

/// Errors from table construction, estimation, and simulation.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The input record set was empty.
    EmptyDataset,
    /// A record failed validation; `index` is its position in the input.
    InvalidRecord { index: usize, reason: String },
    /// Row index past the end of the table.
    IndexOutOfRange { index: usize, len: usize },
    /// A hand-built table violated a structural invariant.
    InvalidTable(String),
    /// Confidence level outside (0, 1).
    InvalidAlpha(f64),
    /// Negative (or non-finite) variance passed to an interval constructor.
    InvalidVariance(f64),
    /// Simulation configuration rejected; the message names the field.
    InvalidConfig(String),
    /// Correlation diagnostic could not be computed.
    DegenerateBin(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyDataset => write!(f, "no records"),
            Error::InvalidRecord { index, reason } => {
                write!(f, "invalid record at index {index}: {reason}")
            }
            Error::IndexOutOfRange { index, len } => {
                write!(f, "row index {index} out of range for table with {len} rows")
            }
            Error::InvalidTable(msg) => write!(f, "invalid risk table: {msg}"),
            Error::InvalidAlpha(alpha) => {
                write!(f, "alpha must be in (0, 1), got {alpha}")
            }
            Error::InvalidVariance(v) => {
                write!(f, "variance must be finite and non-negative, got {v}")
            }
            Error::InvalidConfig(msg) => write!(f, "{msg}"),
            Error::DegenerateBin(msg) => write!(f, "degenerate bin: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
