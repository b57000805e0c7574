//! Seeding: one 64-bit master seed, one independent ChaCha stream per trial.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

/// Generator for trial `trial` under master seed `seed`. Streams for
/// different trials are independent, so results do not depend on the order
/// in which trials are executed.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// `len` complex numbers with i.i.d. standard Gaussian real and imaginary
/// parts, rescaled so that their squared norms sum to `norm_sqr`.
pub fn gaussian_coefficients<R: Rng + ?Sized>(
    len: usize,
    norm_sqr: f64,
    rng: &mut R,
) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..len)
            .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        let n: f64 = v.iter().map(|c| c.norm_sqr()).sum();
        if n > 1e-300 {
            let scale = (norm_sqr / n).sqrt();
            return v.into_iter().map(|c| c * scale).collect();
        }
    }
}
