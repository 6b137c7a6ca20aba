use thiserror::Error;

/// Errors produced by the simulator, Hamiltonian, ansatz and experiment layers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid gate: {0}")]
    InvalidGate(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("operator on {n_qubits} qubits exceeds the dense limit of {limit}")]
    TooLarge { n_qubits: usize, limit: usize },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("evaluation budget of {budget} exhausted")]
    BudgetExhausted { budget: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
