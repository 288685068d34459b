//! Pure multiqubit states, Pauli operators, projective points, and the
//! probability simplex.
//!
//! A state on `n` qubits is a normalized vector of `2^n` complex amplitudes.
//! Amplitudes are indexed by basis bitstrings read big-endian: qubit 0 is the
//! most significant bit, so |00…0⟩ sits at index 0 and |11…1⟩ at index
//! `2^n - 1`. All values here are immutable; every operation returns a fresh
//! value, so everything is safe to share across threads.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance for unit-norm checks on states and probability vectors.
pub const EPS_NORM: f64 = 1e-9;

/// Absolute tolerance for Hermiticity checks in the Pauli decomposition.
pub const EPS_HERM: f64 = 1e-12;

/// Relative threshold for picking the pivot coordinate when canonicalizing a
/// projective point: the first coordinate whose modulus exceeds this fraction
/// of the maximum modulus.
pub const PIVOT_RELATIVE_EPS: f64 = 1e-12;

/// A normalized pure state of `num_qubits` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    num_qubits: usize,
    amplitudes: Vec<Complex64>,
}

/// On-disk JSON form of a state: `{"qubits": n, "amplitudes": [[re, im], ...]}`.
#[derive(Serialize, Deserialize)]
struct StateFile {
    qubits: usize,
    amplitudes: Vec<[f64; 2]>,
}

impl PureState {
    /// Validates and wraps an amplitude vector. The vector must have length
    /// `2^num_qubits`, contain only finite components, and have squared norm
    /// within [`EPS_NORM`] of 1. No silent renormalization happens here.
    pub fn new(num_qubits: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        if num_qubits == 0 {
            return Err(Error::ZeroQubits);
        }
        let expected = 1usize.checked_shl(num_qubits as u32).unwrap_or(usize::MAX);
        if expected != amplitudes.len() {
            return Err(Error::LengthMismatch {
                expected,
                got: amplitudes.len(),
            });
        }
        if amplitudes
            .iter()
            .any(|a| !a.re.is_finite() || !a.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        let deviation = (norm_sq - 1.0).abs();
        if deviation > EPS_NORM {
            return Err(Error::NotNormalized { deviation });
        }
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    /// Internal constructor for amplitude vectors that are normalized by
    /// construction (tensor products, unitary images, permutations).
    pub(crate) fn from_parts(num_qubits: usize, amplitudes: Vec<Complex64>) -> Self {
        debug_assert_eq!(amplitudes.len(), 1 << num_qubits);
        Self {
            num_qubits,
            amplitudes,
        }
    }

    /// The computational basis state |b⟩ where `index` is the bitstring `b`
    /// read big-endian.
    pub fn basis_state(num_qubits: usize, index: usize) -> Result<Self> {
        if num_qubits == 0 {
            return Err(Error::ZeroQubits);
        }
        let len = 1usize << num_qubits;
        if index >= len {
            return Err(Error::IndexOutOfRange { index, limit: len });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); len];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Tensor product. The amplitude at the concatenated bitstring `(s, t)`
    /// is `self[s] * other[t]`.
    pub fn tensor(&self, other: &PureState) -> PureState {
        let mut amplitudes = Vec::with_capacity(self.amplitudes.len() * other.amplitudes.len());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amplitudes.push(a * b);
            }
        }
        PureState::from_parts(self.num_qubits + other.num_qubits, amplitudes)
    }

    /// Measurement probabilities `|amplitude|²` in basis order.
    pub fn probabilities(&self) -> SimplexPoint {
        SimplexPoint {
            probs: self.amplitudes.iter().map(|a| a.norm_sqr()).collect(),
        }
    }

    /// Applies the 2×2 matrix of `op` to the tensor factor `qubit_index`
    /// (0 = most significant bit of the basis index).
    pub fn apply_pauli(&self, op: PauliOp, qubit_index: usize) -> Result<PureState> {
        if qubit_index >= self.num_qubits {
            return Err(Error::IndexOutOfRange {
                index: qubit_index,
                limit: self.num_qubits,
            });
        }
        let m = op.matrix();
        let mask = 1usize << (self.num_qubits - 1 - qubit_index);
        let mut out = vec![Complex64::new(0.0, 0.0); self.amplitudes.len()];
        for i in 0..self.amplitudes.len() {
            if i & mask == 0 {
                let j = i | mask;
                let (x, y) = (self.amplitudes[i], self.amplitudes[j]);
                out[i] = m[0][0] * x + m[0][1] * y;
                out[j] = m[1][0] * x + m[1][1] * y;
            }
        }
        Ok(PureState::from_parts(self.num_qubits, out))
    }

    /// Parses the JSON state format. Rejects wrong amplitude counts,
    /// non-finite numbers, and non-normalized vectors.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: StateFile = serde_json::from_str(text)?;
        let amplitudes = file
            .amplitudes
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        PureState::new(file.qubits, amplitudes)
    }

    /// Serializes to the JSON state format.
    pub fn to_json(&self) -> String {
        let file = StateFile {
            qubits: self.num_qubits,
            amplitudes: self.amplitudes.iter().map(|a| [a.re, a.im]).collect(),
        };
        serde_json::to_string_pretty(&file).expect("state file serialization cannot fail")
    }
}

/// A point of the probability simplex: non-negative entries summing to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexPoint {
    probs: Vec<f64>,
}

impl SimplexPoint {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.iter().any(|p| !p.is_finite()) {
            return Err(Error::NonFinite);
        }
        if probs.iter().any(|&p| p < 0.0) {
            return Err(Error::NonFinite);
        }
        let deviation = (probs.iter().sum::<f64>() - 1.0).abs();
        if deviation > EPS_NORM {
            return Err(Error::NotNormalized { deviation });
        }
        Ok(Self { probs })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }
}

/// The four Hermitian 2×2 basis operators.
///
/// `R` is diagonal with entries (1, −1), `I` is the identity, `S` swaps the
/// basis states, and `V` is the imaginary swap [[0, −i], [i, 0]].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PauliOp {
    R,
    I,
    S,
    V,
}

impl PauliOp {
    /// The associated 2×2 matrix.
    pub fn matrix(self) -> [[Complex64; 2]; 2] {
        let z = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        match self {
            PauliOp::R => [[one, z], [z, -one]],
            PauliOp::I => [[one, z], [z, one]],
            PauliOp::S => [[z, one], [one, z]],
            PauliOp::V => [
                [z, Complex64::new(0.0, -1.0)],
                [Complex64::new(0.0, 1.0), z],
            ],
        }
    }
}

/// Real coefficients of a Hermitian 2×2 matrix in the basis (I, R, S, V).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliCoefficients {
    pub ci: f64,
    pub cr: f64,
    pub cs: f64,
    pub cv: f64,
}

impl PauliCoefficients {
    /// Rebuilds `ci·I + cr·R + cs·S + cv·V`.
    pub fn reconstruct(&self) -> [[Complex64; 2]; 2] {
        [
            [
                Complex64::new(self.ci + self.cr, 0.0),
                Complex64::new(self.cs, -self.cv),
            ],
            [
                Complex64::new(self.cs, self.cv),
                Complex64::new(self.ci - self.cr, 0.0),
            ],
        ]
    }
}

/// Expands a Hermitian 2×2 matrix over the basis (I, R, S, V).
///
/// The basis is complete for Hermitian matrices, so the four coefficients are
/// real and reconstruction is exact up to rounding.
pub fn pauli_decompose(h: &[[Complex64; 2]; 2]) -> Result<PauliCoefficients> {
    let off_diag_defect = (h[0][1] - h[1][0].conj()).norm();
    if h[0][0].im.abs() > EPS_HERM || h[1][1].im.abs() > EPS_HERM || off_diag_defect > EPS_HERM {
        return Err(Error::NotHermitian);
    }
    Ok(PauliCoefficients {
        ci: (h[0][0].re + h[1][1].re) / 2.0,
        cr: (h[0][0].re - h[1][1].re) / 2.0,
        cs: (h[0][1].re + h[1][0].re) / 2.0,
        cv: (h[1][0].im - h[0][1].im) / 2.0,
    })
}

/// A point of complex projective space: homogeneous coordinates, equal up to
/// a global nonzero scale.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectivePoint {
    coords: Vec<Complex64>,
}

impl ProjectivePoint {
    /// Wraps a coordinate vector. At least one coordinate must be nonzero and
    /// all components finite.
    pub fn new(coords: Vec<Complex64>) -> Result<Self> {
        if coords
            .iter()
            .any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::NonFinite);
        }
        if coords.iter().all(|c| c.norm() == 0.0) {
            return Err(Error::NonFinite);
        }
        Ok(Self { coords })
    }

    pub(crate) fn from_coords_unchecked(coords: Vec<Complex64>) -> Self {
        Self { coords }
    }

    /// Views a state's amplitude vector as homogeneous coordinates on
    /// ℙ^(2^n − 1).
    pub fn from_state(state: &PureState) -> Self {
        Self {
            coords: state.amplitudes().to_vec(),
        }
    }

    /// Projective dimension (one less than the coordinate count).
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    pub fn max_modulus(&self) -> f64 {
        self.coords.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Canonical representative: all coordinates divided by the pivot, the
    /// first coordinate whose modulus exceeds [`PIVOT_RELATIVE_EPS`] times the
    /// maximum modulus.
    pub fn canonical(&self) -> ProjectivePoint {
        let max = self.max_modulus();
        let pivot = self
            .coords
            .iter()
            .find(|c| c.norm() > PIVOT_RELATIVE_EPS * max)
            .copied()
            .unwrap_or(Complex64::new(1.0, 0.0));
        ProjectivePoint {
            coords: self.coords.iter().map(|c| c / pivot).collect(),
        }
    }

    /// Projective equality: true iff the two points agree componentwise
    /// within `tol` after canonicalization, i.e. iff some nonzero complex λ
    /// has `self = λ · other` up to `tol`.
    pub fn approx_eq(&self, other: &ProjectivePoint, tol: f64) -> Result<bool> {
        if self.dim() != other.dim() {
            return Err(Error::DimMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        let p = self.canonical();
        let q = other.canonical();
        Ok(p.coords
            .iter()
            .zip(&q.coords)
            .all(|(a, b)| (a - b).norm() <= tol))
    }
}
