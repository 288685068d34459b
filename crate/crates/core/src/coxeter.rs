//! Type-A Coxeter machinery: the symmetric group acting on ℝ^N by coordinate
//! permutation, chambers of the reflection arrangement, the simply transitive
//! action on chambers, invariance of the Segre ideal under that action, and
//! permutation-error injection and recovery for pure states.
//!
//! Conventions fixed once for the whole crate:
//! - Permutations act on the left: `act(g, x)[g(i)] = x[i]`, so
//!   `act(g, act(h, x)) = act(g∘h, x)` with `(g∘h)(i) = g(h(i))`.
//! - A chamber is named by the permutation ω with
//!   `x[ω(0)] < x[ω(1)] < … < x[ω(N−1)]` (strictly ascending sort order).
//! - Wall pairs and serialized permutations are reported 1-based, matching
//!   the hyperplane labels x_i = x_j.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::segre::SegreGenerator;
use crate::state::PureState;

/// Two coordinates closer than this are treated as lying on the wall between
/// chambers.
pub const EPS_WALL: f64 = 1e-12;

/// A permutation of {0, …, N−1}, stored as its image list.
///
/// Displayed and serialized 1-based as `[2,1,3]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Validates that `images` is a bijection on {0, …, N−1}.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[img] = true;
        }
        Ok(Self { images })
    }

    /// Accepts the 1-based image list used by the text form.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let shifted = images
            .iter()
            .map(|&i| {
                i.checked_sub(1).ok_or_else(|| {
                    Error::InvalidPermutation(format!("{images:?} contains 0; images are 1-based"))
                })
            })
            .collect::<Result<Vec<usize>>>()?;
        Self::from_images(shifted)
    }

    /// The transposition swapping `a` and `b` in {0, …, n−1}.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a >= n || b >= n {
            return Err(Error::IndexOutOfRange {
                index: a.max(b),
                limit: n,
            });
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Ok(Self { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// g(i).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    /// Function composition: `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                perm: self.len(),
                target: other.len(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (pos, img) in self.one_based().iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{img}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| {
                Error::InvalidPermutation(format!("{s:?} is not a bracketed image list"))
            })?;
        let images = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad image {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        Self::from_one_based(&images)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(D::Error::custom)
    }
}

/// A point of ℝ^N with finite coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct RealPoint {
    coords: Vec<f64>,
}

impl RealPoint {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

/// Name of one open chamber: the permutation sorting the coordinates
/// strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChamberId(Permutation);

impl ChamberId {
    pub fn new(order: Permutation) -> Self {
        Self(order)
    }

    pub fn order(&self) -> &Permutation {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ChamberId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Where a point sits relative to the reflection arrangement: inside an open
/// chamber, or on at least one wall x_i = x_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chamber {
    Interior(ChamberId),
    /// 1-based coordinate pairs (i, j) with x_i = x_j within [`EPS_WALL`],
    /// adjacent in sorted order.
    OnWall(Vec<(usize, usize)>),
}

impl Chamber {
    pub fn interior(&self) -> Option<&ChamberId> {
        match self {
            Chamber::Interior(id) => Some(id),
            Chamber::OnWall(_) => None,
        }
    }

    pub fn is_interior(&self) -> bool {
        self.interior().is_some()
    }
}

/// Identifies the chamber containing `x`: the permutation ω with
/// `x[ω(0)] < x[ω(1)] < …`. Ties within [`EPS_WALL`] land on a wall, in which
/// case the tied coordinate pairs are reported (1-based) instead.
pub fn chamber_of(x: &RealPoint) -> Chamber {
    let mut order: Vec<usize> = (0..x.len()).collect();
    order.sort_by(|&a, &b| {
        x.coords[a]
            .partial_cmp(&x.coords[b])
            .expect("coordinates are finite")
    });
    let mut walls = Vec::new();
    for pair in order.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if (x.coords[a] - x.coords[b]).abs() <= EPS_WALL {
            walls.push((a.min(b) + 1, a.max(b) + 1));
        }
    }
    if walls.is_empty() {
        Chamber::Interior(ChamberId(Permutation { images: order }))
    } else {
        walls.sort_unstable();
        Chamber::OnWall(walls)
    }
}

/// Coordinate permutation: `result[g(i)] = x[i]`.
pub fn act(g: &Permutation, x: &RealPoint) -> Result<RealPoint> {
    if g.len() != x.len() {
        return Err(Error::SizeMismatch {
            perm: g.len(),
            target: x.len(),
        });
    }
    let mut coords = vec![0.0; x.len()];
    for (i, &value) in x.coords.iter().enumerate() {
        coords[g.apply(i)] = value;
    }
    Ok(RealPoint { coords })
}

fn permute_amplitudes(g: &Permutation, amps: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); amps.len()];
    for (i, &value) in amps.iter().enumerate() {
        out[g.apply(i)] = value;
    }
    out
}

/// The unique g with g·c1 = c2: since acting by g sends the chamber named ω
/// to the one named g∘ω, the transporter is ω2 ∘ ω1⁻¹. The action on
/// chambers is simply transitive, so this is both existence and uniqueness.
pub fn transporter(c1: &ChamberId, c2: &ChamberId) -> Result<Permutation> {
    c2.0.compose(&c1.0.inverse())
}

/// Pushes a Segre-ideal generator through row and column permutations:
/// z_ij z_kl − z_il z_kj maps to the canonical form of
/// z_{p(i)q(j)} z_{p(k)q(l)} − z_{p(i)q(l)} z_{p(k)q(j)}. Re-sorting the
/// index pairs only flips the overall sign, which does not change the
/// generator.
pub fn act_on_generator(
    p: &Permutation,
    q: &Permutation,
    gen: &SegreGenerator,
) -> Result<SegreGenerator> {
    let (i, k) = gen.row_pair();
    let (j, l) = gen.col_pair();
    if k >= p.len() {
        return Err(Error::IndexOutOfRange {
            index: k,
            limit: p.len(),
        });
    }
    if l >= q.len() {
        return Err(Error::IndexOutOfRange {
            index: l,
            limit: q.len(),
        });
    }
    Ok(SegreGenerator::new(
        (p.apply(i), p.apply(k)),
        (q.apply(j), q.apply(l)),
    ))
}

/// Checks that (p, q) maps the generator set of the (m, n) Segre ideal
/// bijectively onto itself, i.e. that the ideal is invariant under the
/// corresponding Coxeter group element.
pub fn verify_ideal_invariance(
    m: usize,
    n: usize,
    p: &Permutation,
    q: &Permutation,
) -> Result<bool> {
    if p.len() != m + 1 {
        return Err(Error::SizeMismatch {
            perm: p.len(),
            target: m + 1,
        });
    }
    if q.len() != n + 1 {
        return Err(Error::SizeMismatch {
            perm: q.len(),
            target: n + 1,
        });
    }
    let generators = crate::segre::ideal_generators(m, n);
    let mut image: Vec<SegreGenerator> = generators
        .iter()
        .map(|gen| act_on_generator(p, q, gen))
        .collect::<Result<_>>()?;
    image.sort();
    // `generators` is already sorted by construction.
    Ok(image == generators)
}

/// Maps a state into the real Coxeter space and identifies its chamber.
///
/// The coordinates are the measurement probabilities |amplitude|², shifted by
/// their mean onto the sum-zero hyperplane. Amplitude permutations become
/// coordinate permutations of this point; phases are invisible here.
pub fn state_chamber(s: &PureState) -> Chamber {
    let probs = s.probabilities();
    let mean = probs.probs().iter().sum::<f64>() / probs.len() as f64;
    let centered: Vec<f64> = probs.probs().iter().map(|p| p - mean).collect();
    chamber_of(&RealPoint { coords: centered })
}

/// Permutes the amplitude vector by g (`result[g(i)] = amplitude[i]`).
/// Models an error that relabels basis states; the norm is untouched.
pub fn inject_error(s: &PureState, g: &Permutation) -> Result<PureState> {
    if g.len() != s.amplitudes().len() {
        return Err(Error::SizeMismatch {
            perm: g.len(),
            target: s.amplitudes().len(),
        });
    }
    Ok(PureState::from_parts(
        s.num_qubits(),
        permute_amplitudes(g, s.amplitudes()),
    ))
}

/// Outcome of [`recover`]: the transporter from the original chamber to the
/// corrupted one, and the state mapped back by its inverse.
#[derive(Debug, Clone)]
pub struct Recovery {
    pub transporter: Permutation,
    pub corrected: PureState,
}

/// What happened to a state, as witnessed by the chamber structure alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub original_chamber: ChamberId,
    pub corrupted_chamber: ChamberId,
    pub transporter: Permutation,
}

/// Undoes the permutation component of an error: finds the transporter g
/// from the original chamber to the corrupted state's chamber and applies
/// g⁻¹ to the amplitudes, so the corrected state's chamber equals the
/// original. Fails with `AmbiguousOnWall` when the corrupted state has tied
/// probabilities, since its chamber (hence g) is not unique.
pub fn recover(original: &ChamberId, corrupted: &PureState) -> Result<Recovery> {
    let chamber = match state_chamber(corrupted) {
        Chamber::Interior(id) => id,
        Chamber::OnWall(_) => return Err(Error::AmbiguousOnWall),
    };
    let g = transporter(original, &chamber)?;
    let corrected = PureState::from_parts(
        corrupted.num_qubits(),
        permute_amplitudes(&g.inverse(), corrupted.amplitudes()),
    );
    Ok(Recovery {
        transporter: g,
        corrected,
    })
}
