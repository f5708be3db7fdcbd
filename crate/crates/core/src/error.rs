use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid pattern text: {0}")]
    Parse(String),

    #[error("pattern length {0} is not a power of 4 (>= 4)")]
    NotPowerOfFour(usize),

    #[error("amplitude count {0} is not a power of two (>= 2)")]
    BadDimension(usize),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("rank {rank} outside the allowed range 1..={max}")]
    RankOutOfRange { rank: u32, max: u32 },

    #[error("qubit count {qubits} outside the allowed range 1..={max}")]
    QubitCountOutOfRange { qubits: usize, max: usize },

    #[error("qubit index {index} out of range for a {qubits}-qubit state")]
    QubitOutOfRange { index: usize, qubits: usize },

    #[error("controlled gate needs two distinct qubits, got {0} twice")]
    SameQubit(usize),

    #[error("expected a {expected}-qubit state, got {actual}")]
    QubitMismatch { expected: usize, actual: usize },

    #[error("index {index} out of range for a basis of {size} members")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("oracle pattern is neither the candidate nor its negation")]
    OutOfPromise,

    #[error("shot count must be positive")]
    NoShots,

    #[error("classification of basis member {expected} measured index {actual}")]
    Misclassified { expected: usize, actual: usize },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
