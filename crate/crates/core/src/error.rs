use thiserror::Error;

/// Errors raised by the library.
///
/// Variants fall into three families the CLI maps to exit codes: parse
/// errors, precondition violations, and internal verification failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("ambient size {0} exceeds the supported maximum of 64 variables")]
    TooManyVariables(usize),

    #[error("variable x{index} is outside the ambient range x1..x{ambient}")]
    VariableOutOfRange { index: usize, ambient: usize },

    #[error("ambient sizes differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("hypergraph contains an empty edge; no transversal exists")]
    EmptyEdge,

    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,

    #[error("{0}")]
    Precondition(String),

    #[error("invalid Schmitt-Vogel partition: {0}")]
    InvalidPartition(String),

    #[error("no power m^l with l <= {lmax} lies in the ideal")]
    PowerLimitExceeded { lmax: u32 },

    #[error("certificate does not recombine to its target")]
    CertificateMismatch,

    #[error("internal verification failed: {0}")]
    Verification(String),
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }

    /// Internal failures indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Verification(_) | Error::CertificateMismatch)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
