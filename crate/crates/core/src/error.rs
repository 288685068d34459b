//! Crate-wide error type.

use thiserror::Error;

/// Errors shared by all modules of this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A sequence does not have the length required by the operation.
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// A state (or coefficient pair) fails the unit-norm check.
    #[error("not normalized: squared norm deviates from 1 by {deviation:e}")]
    NotNormalized { deviation: f64 },

    /// A NaN or infinity showed up where a finite number is required.
    #[error("non-finite component encountered")]
    NonFinite,

    /// A qubit count of zero was requested.
    #[error("state must have at least one qubit")]
    ZeroQubits,

    /// A qubit or coordinate index is outside the valid range.
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    /// Two projective points live in spaces of different dimension.
    #[error("projective dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    /// A matrix handed to the Pauli decomposition is not Hermitian.
    #[error("matrix is not Hermitian within tolerance")]
    NotHermitian,

    /// A bipartition cut index is outside 1..n-1.
    #[error("cut {cut} out of range for a {num_qubits}-qubit state")]
    CutOutOfRange { cut: usize, num_qubits: usize },

    /// A raw coefficient grid does not have power-of-two dimensions.
    #[error("matrix shape {rows}x{cols} is not a power-of-two bipartition grid")]
    InvalidShape { rows: usize, cols: usize },

    /// Factor recovery was attempted on a matrix that is not rank one.
    #[error(
        "reshaped matrix is not rank one: minor residual {residual:e} exceeds tolerance {tol:e}"
    )]
    NotRankOne { residual: f64, tol: f64 },

    /// The operation is only defined for a specific qubit count.
    #[error("operation requires a {expected}-qubit state, got {got} qubits")]
    WrongArity { expected: usize, got: usize },

    /// The maximal-entanglement test needs an even number of qubits.
    #[error("maximal-entanglement test requires an even qubit count, got {num_qubits}")]
    OddArity { num_qubits: usize },

    /// Hypercube generation was requested outside the supported range.
    #[error("hypercube qubit count {n} outside supported range {min}..={max}")]
    HypercubeOutOfRange { n: usize, min: usize, max: usize },

    /// A binary word could not be parsed.
    #[error("invalid binary word: {0:?}")]
    InvalidWord(String),

    /// A serialized graph does not describe a consistent hypercube.
    #[error("malformed graph document: {0}")]
    MalformedGraph(String),

    /// An image list does not describe a bijection.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// A permutation and the object it acts on have different sizes.
    #[error("size mismatch: permutation on {perm} elements, target of size {target}")]
    SizeMismatch { perm: usize, target: usize },

    /// The corrupted state has tied probabilities, so its chamber (and hence
    /// the transporter) is not unique.
    #[error("state lies on a chamber wall; recovery is ambiguous")]
    AmbiguousOnWall,

    /// A JSON document failed to parse.
    #[error("malformed document: {0}")]
    Parse(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
