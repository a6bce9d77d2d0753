//! Deterministic sampling for randomized cross-checks: a small pool of
//! exact scalars and a seeded generator for vectors and matrices over it.

use crate::matrix::Matrix;
use crate::scalar::{frac, int, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed used when `LYT_SEED` is not set.
pub const DEFAULT_SEED: u64 = 0x6c79_7400;

/// The scalar pool randomized checks draw from: small integers and one
/// non-integer to keep denominators honest.
pub fn scalar_pool() -> Vec<Scalar> {
    vec![int(-2), int(-1), int(0), int(1), int(2), frac(1, 2)]
}

/// A seeded source of pool scalars, vectors, and matrices.
pub struct Sampler {
    rng: ChaCha8Rng,
    pool: Vec<Scalar>,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            pool: scalar_pool(),
        }
    }

    /// Seeds from the `LYT_SEED` environment variable when it holds an
    /// unsigned integer, from [`DEFAULT_SEED`] otherwise.
    pub fn from_env() -> Self {
        let seed = std::env::var("LYT_SEED")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_SEED);
        Sampler::new(seed)
    }

    pub fn scalar(&mut self) -> Scalar {
        let i = self.rng.random_range(0..self.pool.len());
        self.pool[i].clone()
    }

    pub fn vector(&mut self, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| self.scalar()).collect()
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        let entries = self.vector(rows * cols);
        Matrix::from_fn(rows, cols, |i, j| entries[i * cols + j].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = Sampler::new(42);
        let mut b = Sampler::new(42);
        for _ in 0..32 {
            assert_eq!(a.scalar(), b.scalar());
        }
        assert_eq!(a.matrix(3, 4), b.matrix(3, 4));
    }

    #[test]
    fn draws_come_from_the_pool() {
        let pool = scalar_pool();
        let mut s = Sampler::new(7);
        for _ in 0..64 {
            assert!(pool.contains(&s.scalar()));
        }
    }

    #[test]
    fn different_seeds_differ_somewhere() {
        let mut a = Sampler::new(1);
        let mut b = Sampler::new(2);
        let va = a.vector(64);
        let vb = b.vector(64);
        assert_ne!(va, vb);
    }
}
