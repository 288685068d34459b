//! Segre embeddings, determinantal separability tests, factor recovery, and
//! entanglement measures for pure multiqubit states.
//!
//! A state is separable across a bipartition exactly when its reshaped
//! coefficient matrix has rank one, which is in turn equivalent to the
//! vanishing of every 2×2 minor. Those minors are the quadratic generators of
//! the ideal of the Segre variety, so "separable" here literally means "lies
//! on the Segre variety" in the projectivized amplitude space.

use std::fmt;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::state::{ProjectivePoint, PureState, EPS_NORM};

/// Default absolute tolerance on minors of a unit-norm state. Products of
/// rank-one matrices computed in double precision sit near 1e-16; generic
/// entangled states sit near 0.1.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A pure state's amplitude vector reshaped into a 2^k × 2^(n−k) grid.
///
/// Entry (r, c) is the amplitude at the basis bitstring formed by
/// concatenating r (k bits) and c (n−k bits), both big-endian. The row-major
/// flattening of the grid is therefore the amplitude vector itself.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeMatrix {
    rows: usize,
    cols: usize,
    cut: usize,
    data: Vec<Complex64>,
}

impl AmplitudeMatrix {
    /// Builds a matrix from explicit rows. Both dimensions must be powers of
    /// two (at least 2), since the grid represents a bipartition of qubits.
    pub fn from_rows(grid: Vec<Vec<Complex64>>) -> Result<Self> {
        let rows = grid.len();
        let cols = grid.first().map_or(0, Vec::len);
        if rows < 2 || cols < 2 || !rows.is_power_of_two() || !cols.is_power_of_two() {
            return Err(Error::InvalidShape { rows, cols });
        }
        let mut data = Vec::with_capacity(rows * cols);
        for row in &grid {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Ok(Self {
            rows,
            cols,
            cut: rows.trailing_zeros() as usize,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// The cut k this matrix represents (rows = 2^k).
    pub fn cut(&self) -> usize {
        self.cut
    }

    pub fn entry(&self, r: usize, c: usize) -> Complex64 {
        assert!(r < self.rows && c < self.cols, "entry index out of range");
        self.data[r * self.cols + c]
    }

    /// Row-major flattened entries (equal to the source amplitude vector when
    /// built by [`reshape`]).
    pub fn data(&self) -> &[Complex64] {
        &self.data
    }
}

/// Splits an n-qubit state at cut k into a 2^k × 2^(n−k) matrix. Rows are
/// indexed by the first k bits of the basis index, columns by the rest.
pub fn reshape(s: &PureState, cut: usize) -> Result<AmplitudeMatrix> {
    let n = s.num_qubits();
    if cut == 0 || cut >= n {
        return Err(Error::CutOutOfRange { cut, num_qubits: n });
    }
    Ok(AmplitudeMatrix {
        rows: 1 << cut,
        cols: 1 << (n - cut),
        cut,
        data: s.amplitudes().to_vec(),
    })
}

/// One quadratic generator of the Segre ideal: the binomial
/// z_ij·z_kl − z_il·z_kj with row pair (i, k) and column pair (j, l),
/// kept canonical with i<k and j<l.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SegreGenerator {
    rows: (usize, usize),
    cols: (usize, usize),
}

impl SegreGenerator {
    /// Canonicalizes the index pairs (sorting each; each swap flips the sign
    /// of the binomial, so sorting both leaves it fixed up to an overall sign
    /// that does not change the generator).
    pub fn new(rows: (usize, usize), cols: (usize, usize)) -> Self {
        assert!(rows.0 != rows.1 && cols.0 != cols.1, "degenerate minor");
        let rows = (rows.0.min(rows.1), rows.0.max(rows.1));
        let cols = (cols.0.min(cols.1), cols.0.max(cols.1));
        Self { rows, cols }
    }

    pub fn row_pair(&self) -> (usize, usize) {
        self.rows
    }

    pub fn col_pair(&self) -> (usize, usize) {
        self.cols
    }

    /// Evaluates the binomial on homogeneous coordinates laid out row-major
    /// over a grid with `num_cols` columns.
    pub fn evaluate(&self, coords: &[Complex64], num_cols: usize) -> Complex64 {
        let (i, k) = self.rows;
        let (j, l) = self.cols;
        let z = |r: usize, c: usize| coords[r * num_cols + c];
        z(i, j) * z(k, l) - z(i, l) * z(k, j)
    }
}

impl fmt::Display for SegreGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, k) = self.rows;
        let (j, l) = self.cols;
        write!(f, "z{i}{j}*z{k}{l} - z{i}{l}*z{k}{j}")
    }
}

/// All canonical 2×2-minor generators of the Segre ideal for
/// ℙ^m × ℙ^n → ℙ^((m+1)(n+1)−1): one per (row pair, column pair) of the
/// (m+1)×(n+1) coordinate grid, so C(m+1,2)·C(n+1,2) in total.
///
/// Ordering is lexicographic in the row pair, then in the column pair.
pub fn ideal_generators(m: usize, n: usize) -> Vec<SegreGenerator> {
    let mut out = Vec::new();
    for i in 0..=m {
        for k in (i + 1)..=m {
            for j in 0..=n {
                for l in (j + 1)..=n {
                    out.push(SegreGenerator {
                        rows: (i, k),
                        cols: (j, l),
                    });
                }
            }
        }
    }
    out
}

/// The Segre map: sends a pair of projective points x, y to the point with
/// coordinates z_ij = x_i · y_j, flattened row-major.
pub fn segre_map(a: &ProjectivePoint, b: &ProjectivePoint) -> ProjectivePoint {
    let mut coords = Vec::with_capacity(a.coords().len() * b.coords().len());
    for x in a.coords() {
        for y in b.coords() {
            coords.push(x * y);
        }
    }
    ProjectivePoint::from_coords_unchecked(coords)
}

/// Max generator modulus on a point of ℙ^((m+1)(n+1)−1), after scaling the
/// coordinates to unit max modulus so the answer is scale-independent.
/// Vanishes exactly on the Segre variety.
pub fn embedding_residual(p: &ProjectivePoint, m: usize, n: usize) -> Result<f64> {
    let expected = (m + 1) * (n + 1);
    if p.coords().len() != expected {
        return Err(Error::DimMismatch {
            left: p.coords().len() - 1,
            right: expected - 1,
        });
    }
    let scale = p.max_modulus();
    let coords: Vec<Complex64> = p.coords().iter().map(|c| c / scale).collect();
    Ok(ideal_generators(m, n)
        .iter()
        .map(|g| g.evaluate(&coords, n + 1).norm())
        .fold(0.0, f64::max))
}

/// Max modulus over all 2×2 minors of the grid. Zero iff rank ≤ 1.
pub fn minors_residual(m: &AmplitudeMatrix) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..m.rows {
        for k in (i + 1)..m.rows {
            for j in 0..m.cols {
                for l in (j + 1)..m.cols {
                    let minor = m.entry(i, j) * m.entry(k, l) - m.entry(i, l) * m.entry(k, j);
                    worst = worst.max(minor.norm());
                }
            }
        }
    }
    worst
}

/// True iff the reshaped matrix at cut k has every 2×2 minor within `tol`.
pub fn is_separable_at_cut(s: &PureState, cut: usize, tol: f64) -> Result<bool> {
    Ok(minors_residual(&reshape(s, cut)?) <= tol)
}

/// Verdict for one cut of a separability report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CutReport {
    pub k: usize,
    pub residual: f64,
    pub separable: bool,
}

/// Separability verdicts across all consecutive cuts k = 1..n−1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeparabilityReport {
    pub cuts: Vec<CutReport>,
    pub product_state: bool,
}

/// Tests every consecutive cut. The state is a full product state iff it is
/// separable at each of them.
pub fn is_product_state(s: &PureState, tol: f64) -> SeparabilityReport {
    let cuts: Vec<CutReport> = (1..s.num_qubits())
        .map(|k| {
            let residual = minors_residual(&reshape(s, k).expect("cut in range"));
            CutReport {
                k,
                residual,
                separable: residual <= tol,
            }
        })
        .collect();
    let product_state = cuts.iter().all(|c| c.separable);
    SeparabilityReport {
        cuts,
        product_state,
    }
}

/// The two tensor factors recovered from a separable state, plus the global
/// phase lost to normalization: `phase · (left ⊗ right)` reproduces the input.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub left: PureState,
    pub right: PureState,
    pub phase: Complex64,
}

/// Splits a state separable at cut k into normalized factors.
///
/// Pivots at the max-modulus entry (i*, j*): the left factor is column j*
/// and the right factor is row i* divided by the pivot, each normalized.
/// No iterative solver is involved; for a rank-one matrix this is exact up
/// to rounding.
pub fn recover_factors(s: &PureState, cut: usize, tol: f64) -> Result<Factorization> {
    let m = reshape(s, cut)?;
    let residual = minors_residual(&m);
    if residual > tol {
        return Err(Error::NotRankOne { residual, tol });
    }

    let (mut pi, mut pj, mut best) = (0, 0, -1.0f64);
    for r in 0..m.rows {
        for c in 0..m.cols {
            let mag = m.entry(r, c).norm();
            if mag > best {
                best = mag;
                pi = r;
                pj = c;
            }
        }
    }
    let pivot = m.entry(pi, pj);

    let left_raw: Vec<Complex64> = (0..m.rows).map(|r| m.entry(r, pj)).collect();
    let right_raw: Vec<Complex64> = (0..m.cols).map(|c| m.entry(pi, c) / pivot).collect();
    let normalize = |v: Vec<Complex64>| {
        let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        v.into_iter().map(|x| x / norm).collect::<Vec<_>>()
    };
    let left = normalize(left_raw);
    let right = normalize(right_raw);
    let phase = pivot / (left[pi] * right[pj]);

    let factorization = Factorization {
        left: PureState::from_parts(cut, left),
        right: PureState::from_parts(s.num_qubits() - cut, right),
        phase,
    };

    let recon = factorization.left.tensor(&factorization.right);
    let defect = s
        .amplitudes()
        .iter()
        .zip(recon.amplitudes())
        .map(|(a, b)| (a - phase * b).norm())
        .fold(0.0, f64::max);
    if defect > 10.0 * tol {
        return Err(Error::NotRankOne {
            residual: defect,
            tol,
        });
    }
    Ok(factorization)
}

/// Concurrence of a 2-qubit state: 2·|c00·c11 − c01·c10|. Zero exactly on
/// the separable (Segre) locus, 1 on Bell-type states.
pub fn concurrence(s: &PureState) -> Result<f64> {
    if s.num_qubits() != 2 {
        return Err(Error::WrongArity {
            expected: 2,
            got: s.num_qubits(),
        });
    }
    let c = s.amplitudes();
    Ok((2.0 * (c[0] * c[3] - c[1] * c[2]).norm()).min(1.0))
}

/// Singular values of the grid, sorted descending.
///
/// Computed from the Gram matrix on the smaller side; its eigenvalues are the
/// squared singular values. The 2×2 case uses the closed-form quadratic,
/// larger sizes a Hermitian eigendecomposition.
pub fn singular_values(m: &AmplitudeMatrix) -> Vec<f64> {
    let (small, large, transposed) = if m.rows <= m.cols {
        (m.rows, m.cols, false)
    } else {
        (m.cols, m.rows, true)
    };
    // gram[a][b] = Σ_t row_a(t) · conj(row_b(t)) over the large side.
    let at = |a: usize, t: usize| {
        if transposed {
            m.entry(t, a)
        } else {
            m.entry(a, t)
        }
    };
    let gram = |a: usize, b: usize| {
        (0..large)
            .map(|t| at(a, t) * at(b, t).conj())
            .sum::<Complex64>()
    };

    let mut eigs: Vec<f64> = if small == 2 {
        let g00 = gram(0, 0).re;
        let g11 = gram(1, 1).re;
        let g01 = gram(0, 1);
        let mid = (g00 + g11) / 2.0;
        let rad = ((g00 - g11) / 2.0).hypot(g01.norm());
        vec![mid + rad, mid - rad]
    } else {
        let g = DMatrix::from_fn(small, small, gram);
        SymmetricEigen::new(g).eigenvalues.iter().copied().collect()
    };
    eigs.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
    eigs.into_iter().map(|e| e.max(0.0).sqrt()).collect()
}

/// Second-largest singular value of the reshaped matrix: the quadratic-mean
/// distance from the state to the nearest rank-one (Segre) point at this cut.
pub fn schmidt_residual(s: &PureState, cut: usize) -> Result<f64> {
    Ok(singular_values(&reshape(s, cut)?)[1])
}

/// The Segre equation of a 2-qubit state split into its two real parts.
///
/// Writing c_idx = a_idx·exp(i·v_idx) with phases measured relative to c00,
/// the single complex equation c00·c11 − c01·c10 = 0 becomes the magnitude
/// equation a00·a11 − a01·a10 = 0 and the phase equation v1 + v2 − v3 = 0.
/// `phase_residual` is `None` when any modulus is below 1e-12, where the
/// phase equation is undefined.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OctantSplit {
    pub mag_residual: f64,
    pub phase_residual: Option<f64>,
}

/// Splits the 2-qubit Segre equation into magnitude and phase residuals.
pub fn octant_split(s: &PureState) -> Result<OctantSplit> {
    if s.num_qubits() != 2 {
        return Err(Error::WrongArity {
            expected: 2,
            got: s.num_qubits(),
        });
    }
    let c = s.amplitudes();
    let a: Vec<f64> = c.iter().map(|x| x.norm()).collect();
    let mag_residual = a[0] * a[3] - a[1] * a[2];
    let phase_residual = if a.iter().any(|&m| m < 1e-12) {
        None
    } else {
        let rel = |idx: usize| (c[idx] / c[0]).arg();
        Some(wrap_angle(rel(1) + rel(2) - rel(3)))
    };
    Ok(OctantSplit {
        mag_residual,
        phase_residual,
    })
}

/// Wraps an angle to (−π, π].
fn wrap_angle(x: f64) -> f64 {
    use std::f64::consts::PI;
    let w = (x + PI).rem_euclid(2.0 * PI) - PI;
    if w <= -PI {
        PI
    } else {
        w
    }
}

/// Unitarity test at the middle cut: an even-n state is maximally entangled
/// iff √N·M is unitary, where M is the N×N middle-cut matrix, N = 2^(n/2).
/// Checked entrywise on the Gram matrix N·M†M against the identity.
pub fn is_maximally_entangled(s: &PureState, tol: f64) -> Result<bool> {
    let n = s.num_qubits();
    if !n.is_multiple_of(2) {
        return Err(Error::OddArity { num_qubits: n });
    }
    let m = reshape(s, n / 2)?;
    let dim = m.rows();
    let scale = dim as f64;
    for a in 0..dim {
        for b in 0..dim {
            let g: Complex64 = (0..dim).map(|t| m.entry(t, a).conj() * m.entry(t, b)).sum();
            let target = if a == b { 1.0 } else { 0.0 };
            if (scale * g - Complex64::new(target, 0.0)).norm() > tol {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The curve of single-qubit unitaries inside ℙ³: for |α|² + |β|² = 1 the
/// point (α, β, −β*, α*) is the flattened matrix [[α, β], [−β*, α*]].
pub fn su2_point(alpha: Complex64, beta: Complex64) -> Result<ProjectivePoint> {
    let deviation = (alpha.norm_sqr() + beta.norm_sqr() - 1.0).abs();
    if deviation > EPS_NORM {
        return Err(Error::NotNormalized { deviation });
    }
    ProjectivePoint::new(vec![alpha, beta, -beta.conj(), alpha.conj()])
}
