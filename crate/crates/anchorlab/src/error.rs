use thiserror::Error;

/// Errors shared across the library and the CLI.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// A graph or an operation exceeded a hard size cap.
    #[error("graph too large: {n} vertices exceeds the cap of {cap}")]
    TooLarge { n: usize, cap: usize },

    /// A precondition on the arguments was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Malformed graph6 input; `offset` is the byte where decoding failed.
    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A pattern that was required to occur does not occur.
    #[error("pattern does not occur in the graph")]
    PatternNotFound,

    /// Shadows were combined across different hosts.
    #[error("shadow host mismatch")]
    HostMismatch,

    /// An operation that needs a degree extreme was given a regular graph.
    #[error("graph is regular: no proper degree-extreme vertex set")]
    RegularGraph,

    /// A deck failed a structural sanity check.
    #[error("inconsistent deck: {0}")]
    InconsistentDeck(String),

    /// Reading input or writing a report failed.
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Error {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
