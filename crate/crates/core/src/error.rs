use thiserror::Error;

/// Errors raised by graph construction, structure detection and group computations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("signed graph is balanced; switch it to the all-positive signing and use the unsigned graph instead")]
    Balanced,

    #[error("structure mismatch: {0}")]
    StructureMismatch(String),

    #[error("vector is not in the sum-zero lattice")]
    NotInLattice,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("I/O error: {0}")]
    Io(String),

    /// A computed identity failed. This indicates a bug.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
