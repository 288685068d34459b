//! Seeded random generators shared by the integration suites. Everything is
//! built directly on the ChaCha8 stream so sequences are reproducible and do
//! not depend on distribution code elsewhere.

#![allow(dead_code)]

use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use segre_core::coxeter::Permutation;
use segre_core::state::PureState;

pub struct TestRng(ChaCha8Rng);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in {0, …, n−1}. Modulo bias is far below test resolution.
    pub fn below(&mut self, n: usize) -> usize {
        (self.0.next_u64() % n as u64) as usize
    }

    /// Uniform in [0, 1).
    pub fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal via Box-Muller.
    pub fn normal(&mut self) -> f64 {
        let u = loop {
            let u = self.unit();
            if u > 0.0 {
                break u;
            }
        };
        let v = self.unit();
        (-2.0 * u.ln()).sqrt() * (2.0 * std::f64::consts::PI * v).cos()
    }

    pub fn complex_normal(&mut self) -> Complex64 {
        Complex64::new(self.normal(), self.normal())
    }

    /// A state drawn from the unitarily invariant (Haar) measure: complex
    /// Gaussian amplitudes, normalized.
    pub fn state(&mut self, num_qubits: usize) -> PureState {
        let len = 1usize << num_qubits;
        let raw: Vec<Complex64> = (0..len).map(|_| self.complex_normal()).collect();
        let norm = raw.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        PureState::new(num_qubits, raw.into_iter().map(|a| a / norm).collect())
            .expect("normalized by construction")
    }

    /// A single-qubit state with both amplitudes bounded away from zero.
    pub fn nonvanishing_qubit(&mut self) -> PureState {
        loop {
            let s = self.state(1);
            if s.amplitudes().iter().all(|a| a.norm() > 0.1) {
                return s;
            }
        }
    }

    /// Fisher-Yates over the ChaCha8 stream.
    pub fn permutation(&mut self, n: usize) -> Permutation {
        let mut images: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = self.below(i + 1);
            images.swap(i, j);
        }
        Permutation::from_images(images).expect("shuffle of identity is a bijection")
    }

    /// Unitary n×n matrix (rows orthonormal): modified Gram-Schmidt on a
    /// complex Gaussian matrix. Self-contained so tests that probe unitarity
    /// do not lean on the library under test.
    pub fn unitary(&mut self, n: usize) -> Vec<Vec<Complex64>> {
        let mut rows: Vec<Vec<Complex64>> = (0..n)
            .map(|_| (0..n).map(|_| self.complex_normal()).collect())
            .collect();
        for i in 0..n {
            for j in 0..i {
                let proj: Complex64 = (0..n).map(|t| rows[i][t] * rows[j][t].conj()).sum();
                let prev = rows[j].clone();
                for (x, p) in rows[i].iter_mut().zip(&prev) {
                    *x -= proj * p;
                }
            }
            let norm = rows[i].iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
            assert!(norm > 1e-6, "Gaussian rows are almost surely independent");
            for x in rows[i].iter_mut() {
                *x /= norm;
            }
        }
        rows
    }
}
