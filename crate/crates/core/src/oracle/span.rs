use serde::{Deserialize, Serialize};

use crate::protocol::{alice_basis_vectors, build_channel, Encoding, SecretSpec, VariantId};
use crate::rng::{gaussian_coefficients, trial_rng};
use crate::statevec::{project, StateVector};
use crate::{Result, FIDELITY_TOL, SCHEMA_VERSION};

/// Arbitrary (unrestricted) secrets drawn per span check.
pub const INVALID_SECRET_TRIALS: usize = 10;

/// Required out-of-span mass for an arbitrary secret to count as rejected.
pub const INVALID_MASS_THRESHOLD: f64 = 1e-6;

// Stream offset separating invalid-secret draws from valid ones.
const INVALID_STREAM: u64 = 1 << 40;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpanReport {
    pub schema_version: u32,
    pub variant: VariantId,
    pub encoding: Encoding,
    pub trials: usize,
    /// Largest |1 − Σᵢ pᵢ| over valid secrets.
    pub valid_max_deviation: f64,
    pub invalid_trials: usize,
    /// Smallest out-of-span mass 1 − Σᵢ pᵢ over arbitrary secrets.
    pub invalid_min_out_of_span_mass: f64,
    pub valid_ok: bool,
    pub invalid_ok: bool,
}

impl SpanReport {
    pub fn passed(&self) -> bool {
        self.valid_ok && self.invalid_ok
    }
}

/// Σᵢ ‖(⟨vᵢ| ⊗ I)|secret ⊗ channel⟩‖² over the variant's printed or
/// canonical measurement vectors.
pub fn captured_probability(
    variant: VariantId,
    vectors: &[StateVector],
    secret: &StateVector,
) -> Result<f64> {
    let combined = secret.tensor(&build_channel(variant));
    let targets = variant.spec().alice_targets();
    vectors
        .iter()
        .map(|v| {
            project(&combined, &targets, v).map(|r| r.iter().map(|a| a.norm_sqr()).sum::<f64>())
        })
        .sum()
}

/// Checks that Alice's basis captures all of the weight for `trials` random
/// valid secrets and leaves weight behind for arbitrary secrets.
pub fn verify_span(
    variant: VariantId,
    encoding: Encoding,
    trials: usize,
    seed: u64,
) -> Result<SpanReport> {
    let vectors = alice_basis_vectors(variant, encoding);
    let mut valid_max_deviation: f64 = 0.0;
    for t in 0..trials as u64 {
        let secret = SecretSpec::random(variant, &mut trial_rng(seed, t)).state();
        let p = captured_probability(variant, &vectors, &secret)?;
        valid_max_deviation = valid_max_deviation.max((1.0 - p).abs());
    }
    let width = 1usize << variant.spec().num_secret_qubits;
    let mut invalid_min: f64 = f64::INFINITY;
    for k in 0..INVALID_SECRET_TRIALS as u64 {
        let amps = gaussian_coefficients(width, 1.0, &mut trial_rng(seed, INVALID_STREAM + k));
        let secret = StateVector::new(amps)?;
        invalid_min = invalid_min.min(1.0 - captured_probability(variant, &vectors, &secret)?);
    }
    Ok(SpanReport {
        schema_version: SCHEMA_VERSION,
        variant,
        encoding,
        trials,
        valid_max_deviation,
        invalid_trials: INVALID_SECRET_TRIALS,
        invalid_min_out_of_span_mass: invalid_min,
        valid_ok: trials > 0 && valid_max_deviation <= FIDELITY_TOL,
        invalid_ok: invalid_min > INVALID_MASS_THRESHOLD,
    })
}
