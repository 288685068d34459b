//! The hypercube of generalized Segre embeddings.
//!
//! Starting from n single-qubit factors ℙ¹×…×ℙ¹, each way of merging
//! adjacent factors through iterated Segre embeddings is encoded by a binary
//! word of length n−1: bit i set means factors i and i+1 were merged. The
//! 2^(n−1) words form the vertices of an (n−1)-dimensional hypercube whose
//! edges join words at Hamming distance 1, i.e. embeddings that differ by a
//! single merge step.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` for which the full hypercube is materialized (2^23 vertices).
/// Word and signature arithmetic work beyond this; only graph generation is
/// capped.
pub const MAX_HYPERCUBE_QUBITS: usize = 24;

/// A word over {0, 1} of length n−1 encoding which adjacent qubit factors
/// are merged.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord {
    bits: Vec<bool>,
}

impl BinaryWord {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// The word whose big-endian value is `index` (bit 0 of the word is the
    /// most significant position).
    pub fn from_index(index: usize, len: usize) -> Self {
        let bits = (0..len).map(|i| index >> (len - 1 - i) & 1 == 1).collect();
        Self { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Hamming distance: the number of differing positions.
    pub fn hamming(&self, other: &BinaryWord) -> Result<usize> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(self
            .bits
            .iter()
            .zip(&other.bits)
            .filter(|(a, b)| a != b)
            .count())
    }

    /// All words at Hamming distance exactly 1, in flip-position order.
    pub fn neighbors(&self) -> Vec<BinaryWord> {
        (0..self.len())
            .map(|i| {
                let mut bits = self.bits.clone();
                bits[i] = !bits[i];
                BinaryWord { bits }
            })
            .collect()
    }

    /// The product-of-projective-spaces signature this word encodes.
    ///
    /// Reading left to right over n = len+1 qubit factors: a maximal run of
    /// r consecutive 1-bits merges r+1 adjacent factors into ℙ^(2^(r+1)−1);
    /// factors not touched by a 1 stay ℙ¹.
    pub fn signature(&self) -> SpaceSignature {
        let mut dims = Vec::new();
        let mut merged_qubits = 1usize;
        for &bit in &self.bits {
            if bit {
                merged_qubits += 1;
            } else {
                dims.push((1usize << merged_qubits) - 1);
                merged_qubits = 1;
            }
        }
        dims.push((1usize << merged_qubits) - 1);
        SpaceSignature { dims }
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &bit in &self.bits {
            write!(f, "{}", if bit { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::InvalidWord(s.to_string()));
        }
        let bits = s
            .chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidWord(s.to_string())),
            })
            .collect::<Result<Vec<bool>>>()?;
        Ok(Self { bits })
    }
}

/// A product ℙ^{d_1} × … × ℙ^{d_k} of projective spaces; each dimension is
/// of the form 2^r − 1 and the qubit counts r sum to n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpaceSignature {
    dims: Vec<usize>,
}

impl SpaceSignature {
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Total qubit count: Σ log2(d + 1).
    pub fn num_qubits(&self) -> usize {
        self.dims
            .iter()
            .map(|&d| (d + 1).trailing_zeros() as usize)
            .sum()
    }

    /// ASCII rendering, e.g. "P3 x P1 x P3".
    pub fn label(&self) -> String {
        self.dims
            .iter()
            .map(|d| format!("P{d}"))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

impl fmt::Display for SpaceSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// The word-to-signature assignment for one word length. Alias for
/// [`BinaryWord::signature`] as a free function.
pub fn signature_of(word: &BinaryWord) -> SpaceSignature {
    word.signature()
}

/// The (n−1)-dimensional hypercube of generalized Segre embeddings:
/// every binary word of length n−1 paired with its signature, with edges
/// between words at Hamming distance 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypercubeGraph {
    qubits: usize,
    vertices: Vec<(BinaryWord, SpaceSignature)>,
    edges: Vec<(BinaryWord, BinaryWord)>,
}

impl HypercubeGraph {
    pub fn num_qubits(&self) -> usize {
        self.qubits
    }

    /// Vertices in ascending word order.
    pub fn vertices(&self) -> &[(BinaryWord, SpaceSignature)] {
        &self.vertices
    }

    /// Edges as ordered pairs (smaller word first), sorted.
    pub fn edges(&self) -> &[(BinaryWord, BinaryWord)] {
        &self.edges
    }
}

/// Builds the full hypercube for n qubits (word length n−1).
pub fn generate_hypercube(n: usize) -> Result<HypercubeGraph> {
    if !(2..=MAX_HYPERCUBE_QUBITS).contains(&n) {
        return Err(Error::HypercubeOutOfRange {
            n,
            min: 2,
            max: MAX_HYPERCUBE_QUBITS,
        });
    }
    let len = n - 1;
    let count = 1usize << len;
    let mut vertices = Vec::with_capacity(count);
    let mut edges = Vec::with_capacity(len << (len.saturating_sub(1)));
    for index in 0..count {
        let word = BinaryWord::from_index(index, len);
        // Flipping a 0-bit always yields a larger word, so emitting edges
        // only at 0-bits lists each unordered pair exactly once.
        for (i, &bit) in word.bits().iter().enumerate() {
            if !bit {
                let mut bits = word.bits().to_vec();
                bits[i] = true;
                edges.push((word.clone(), BinaryWord::new(bits)));
            }
        }
        let signature = word.signature();
        vertices.push((word, signature));
    }
    edges.sort();
    Ok(HypercubeGraph {
        qubits: n,
        vertices,
        edges,
    })
}

/// Renders the graph as DOT text: one node per vertex labeled
/// `(word) signature`, one undirected edge line per edge, both in word order.
/// Output is deterministic, so equal graphs give byte-identical text.
pub fn to_dot(g: &HypercubeGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph segre_q{} {{\n", g.qubits));
    for (word, signature) in &g.vertices {
        out.push_str(&format!(
            "    \"{word}\" [label=\"({word}) {}\"];\n",
            signature.label()
        ));
    }
    for (a, b) in &g.edges {
        out.push_str(&format!("    \"{a}\" -- \"{b}\";\n"));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    qubits: usize,
    word_length: usize,
    vertices: Vec<VertexRecord>,
    edges: Vec<[String; 2]>,
}

#[derive(Serialize, Deserialize)]
struct VertexRecord {
    word: String,
    dims: Vec<usize>,
    label: String,
}

/// Serializes the graph as JSON with deterministic field and element order.
pub fn to_json(g: &HypercubeGraph) -> String {
    let file = GraphFile {
        qubits: g.qubits,
        word_length: g.qubits - 1,
        vertices: g
            .vertices
            .iter()
            .map(|(word, signature)| VertexRecord {
                word: word.to_string(),
                dims: signature.dims().to_vec(),
                label: signature.label(),
            })
            .collect(),
        edges: g
            .edges
            .iter()
            .map(|(a, b)| [a.to_string(), b.to_string()])
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("graph serialization cannot fail")
}

/// Parses [`to_json`] output back into a graph, validating that the document
/// really does describe a Segre-embedding hypercube: consistent word lengths,
/// correct signatures, complete sorted vertex set, and distance-1 edges.
pub fn from_json(text: &str) -> Result<HypercubeGraph> {
    let file: GraphFile = serde_json::from_str(text)?;
    let malformed = |msg: String| Error::MalformedGraph(msg);
    if file.qubits < 2 || file.word_length != file.qubits - 1 {
        return Err(malformed(format!(
            "word length {} does not match qubit count {}",
            file.word_length, file.qubits
        )));
    }
    let len = file.word_length;
    if file.vertices.len() != 1 << len {
        return Err(malformed(format!(
            "expected {} vertices, found {}",
            1 << len,
            file.vertices.len()
        )));
    }

    let mut vertices = Vec::with_capacity(file.vertices.len());
    for (index, record) in file.vertices.iter().enumerate() {
        let word: BinaryWord = record.word.parse()?;
        if word != BinaryWord::from_index(index, len) {
            return Err(malformed(format!(
                "vertex {index} out of order or wrong length: {}",
                record.word
            )));
        }
        let signature = word.signature();
        if signature.dims() != record.dims || signature.label() != record.label {
            return Err(malformed(format!(
                "vertex {} carries signature {:?}, expected {:?}",
                record.word,
                record.dims,
                signature.dims()
            )));
        }
        vertices.push((word, signature));
    }

    let mut edges = Vec::with_capacity(file.edges.len());
    for [a, b] in &file.edges {
        let a: BinaryWord = a.parse()?;
        let b: BinaryWord = b.parse()?;
        if a.hamming(&b)? != 1 {
            return Err(malformed(format!("edge {a} -- {b} is not distance 1")));
        }
        if b < a {
            return Err(malformed(format!("edge {a} -- {b} not in canonical order")));
        }
        edges.push((a, b));
    }
    let expected_edges = len << (len - 1);
    if edges.len() != expected_edges {
        return Err(malformed(format!(
            "expected {} edges, found {}",
            expected_edges,
            edges.len()
        )));
    }
    let sorted = edges.windows(2).all(|w| w[0] < w[1]);
    if !sorted {
        return Err(malformed("edges not sorted".to_string()));
    }

    Ok(HypercubeGraph {
        qubits: file.qubits,
        vertices,
        edges,
    })
}
