//! Seeded random streams with a reproducibility contract.
//!
//! Every stochastic routine in the crate draws from a [`SeedStream`] keyed by
//! `(seed, index)` through [`child_seed`], so replicate `b` sees exactly the
//! same variates no matter how many worker threads run or in what order
//! replicates execute. Normal and t variates are produced by quantile
//! inversion, keeping streams identical across platforms.

use crate::special::normal_quantile;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// SplitMix64 finalizer; decorrelates nearby seeds.
fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derive a replicate-indexed seed from a base seed.
pub fn child_seed(seed: u64, index: u64) -> u64 {
    splitmix64(seed ^ splitmix64(index.wrapping_add(1)))
}

/// Deterministic random stream.
pub struct SeedStream {
    rng: ChaCha8Rng,
}

impl SeedStream {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Stream for replicate `index` of a run keyed by `seed`.
    pub fn child(seed: u64, index: u64) -> Self {
        Self::new(child_seed(seed, index))
    }

    /// Uniform draw strictly inside (0, 1).
    pub fn uniform(&mut self) -> f64 {
        (((self.rng.next_u64() >> 11) as f64) + 0.5) * (1.0 / 9_007_199_254_740_992.0)
    }

    /// Uniform draw on (lo, hi).
    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Standard normal draw by quantile inversion.
    pub fn standard_normal(&mut self) -> f64 {
        let u = self.uniform();
        normal_quantile(u).expect("uniform draw is interior")
    }

    /// Student-t draw with 3 degrees of freedom: Z / sqrt(χ²₃ / 3).
    pub fn t3(&mut self) -> f64 {
        let z = self.standard_normal();
        let chi2: f64 = (0..3).map(|_| self.standard_normal().powi(2)).sum();
        z / (chi2 / 3.0).sqrt()
    }

    /// Index uniform on 0..n (multiply-shift, no modulo bias worth naming).
    pub fn index(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        (((self.rng.next_u64() as u128) * (n as u128)) >> 64) as usize
    }
}
