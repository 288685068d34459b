//! Geometry of pure multiqubit states: Segre embeddings and their
//! determinantal separability tests, the hypercube of generalized embeddings
//! indexed by binary words, and type-A Coxeter chambers for permutation-error
//! tracking and recovery.
//!
//! The amplitude vector of an n-qubit state, read as homogeneous coordinates,
//! is a point of ℙ^(2^n − 1). The state is separable across the cut after
//! qubit k exactly when that point lies on the Segre variety
//! ℙ^(2^k − 1) × ℙ^(2^(n−k) − 1) → ℙ^(2^n − 1), which is cut out by the 2×2
//! minors of the reshaped amplitude matrix ([`segre`]). Merging adjacent
//! factors in all possible orders arranges the intermediate embeddings into
//! an (n−1)-dimensional hypercube indexed by binary words ([`hypercube`]).
//! The symmetric group permuting homogeneous coordinates preserves the
//! variety; its chamber geometry on probability vectors detects and reverses
//! basis-relabeling errors ([`coxeter`]).
//!
//! Everything operates on plain immutable values and is thread-safe.

pub mod coxeter;
pub mod error;
pub mod hypercube;
pub mod segre;
pub mod state;

pub use error::{Error, Result};
pub use state::{PauliCoefficients, PauliOp, ProjectivePoint, PureState, SimplexPoint};

pub use coxeter::{
    act, act_on_generator, chamber_of, inject_error, recover, state_chamber, transporter,
    verify_ideal_invariance, Chamber, ChamberId, ErrorRecord, Permutation, RealPoint, Recovery,
};
pub use hypercube::{
    generate_hypercube, signature_of, to_dot, to_json, BinaryWord, HypercubeGraph, SpaceSignature,
    MAX_HYPERCUBE_QUBITS,
};
pub use segre::{
    concurrence, embedding_residual, ideal_generators, is_maximally_entangled, is_product_state,
    is_separable_at_cut, minors_residual, octant_split, recover_factors, reshape, schmidt_residual,
    segre_map, singular_values, su2_point, AmplitudeMatrix, CutReport, Factorization, OctantSplit,
    SegreGenerator, SeparabilityReport, DEFAULT_TOL,
};
