use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("register size out of range: {0} qubits (allowed 0..={max})", max = crate::statevector::MAX_QUBITS)]
    Size(usize),

    #[error("dimension mismatch: state has {state} qubits, oracle has {oracle}")]
    Dimension { state: usize, oracle: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("state is not normalized: squared norm {0}")]
    State(f64),

    #[error("feature {0:?} not found in table")]
    NotFound(String),

    #[error("malformed feature table: {0}")]
    MalformedTable(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("sweep strategy exhausted all {0} candidates")]
    Exhausted(usize),

    #[error("rows do not form a full grid: {0}")]
    Shape(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
