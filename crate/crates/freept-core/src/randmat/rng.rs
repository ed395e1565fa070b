//! Seeded Gaussian source: ChaCha8 keystream + Box–Muller.
//!
//! Box–Muller over explicit 53-bit uniforms keeps the stream identical
//! across platforms; no OS entropy is ever consulted. Trial streams are
//! split from one master seed with a splitmix64-style hash so that
//! trial i's stream never depends on how many trials run before it.

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Stream offset reserved for projection draws, keeping them disjoint
/// from the matrix-entry streams of the same trial.
pub const PROJECTION_STREAM: u64 = 1 << 32;

/// Derives the stream seed for (master, stream) pairs.
pub fn derive_seed(master: u64, stream: u64) -> u64 {
    let mut z = master ^ 0x9E37_79B9_7F4A_7C15u64.wrapping_mul(stream.wrapping_add(1));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic standard-normal generator.
pub struct GaussianSource {
    rng: ChaCha8Rng,
    cached: Option<f64>,
}

impl GaussianSource {
    pub fn from_seed(seed: u64) -> Self {
        GaussianSource {
            rng: ChaCha8Rng::seed_from_u64(seed),
            cached: None,
        }
    }

    pub fn for_stream(master: u64, stream: u64) -> Self {
        Self::from_seed(derive_seed(master, stream))
    }

    /// Uniform in (0, 1] with 53-bit resolution.
    fn uniform_open(&mut self) -> f64 {
        (((self.rng.next_u64() >> 11) + 1) as f64) * (1.0 / 9_007_199_254_740_992.0)
    }

    /// N(0, 1) by Box–Muller; pairs are cached.
    pub fn standard_normal(&mut self) -> f64 {
        if let Some(v) = self.cached.take() {
            return v;
        }
        let u1 = self.uniform_open();
        let u2 = self.uniform_open();
        let radius = (-2.0 * u1.ln()).sqrt();
        let angle = 2.0 * core::f64::consts::PI * u2;
        self.cached = Some(radius * angle.sin());
        radius * angle.cos()
    }

    /// Complex Gaussian (g₁ + i·g₂)/√2 with E|z|² = 1.
    pub fn complex_normal(&mut self) -> Complex64 {
        let re = self.standard_normal();
        let im = self.standard_normal();
        Complex64::new(re, im) * core::f64::consts::FRAC_1_SQRT_2
    }
}
