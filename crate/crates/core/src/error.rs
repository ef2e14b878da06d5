use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("width mismatch: {0} vs {1}")]
    WidthMismatch(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("tableau is not unitary")]
    NotUnitary,
    #[error("unknown gate: {0}")]
    UnknownGate(String),
    #[error("T2K needs an even arity of at least 2, got {0}")]
    OddArity(usize),
    #[error("invalid qubit indices for {gate}: {detail}")]
    BadQubits { gate: String, detail: String },
    #[error("invalid permutation")]
    InvalidPermutation,
    #[error("kept submatrix is not unitary")]
    NonUnitarySubmatrix,
    #[error("phase of row {0} depends on the discarded qubits")]
    PhaseUndetermined(usize),
    #[error("unitary is not Clifford")]
    NotClifford,
    #[error("width {0} exceeds the dense oracle limit of 6")]
    WidthTooLarge(usize),
    #[error("closure exceeds cap of {0} elements")]
    CapExceeded(u64),
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("unknown class: {0}")]
    UnknownClass(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
