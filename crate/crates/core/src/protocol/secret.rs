use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::variant::VariantId;
use crate::rng::gaussian_coefficients;
use crate::statevec::StateVector;
use crate::{Error, Result, ALGEBRA_TOL};

/// Coefficients of a secret drawn from a variant's restricted class.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SecretSpec {
    pub variant: VariantId,
    pub coefficients: Vec<Complex64>,
}

/// Kets multiplied by each coefficient.
fn class_kets(variant: VariantId) -> &'static [&'static [&'static str]] {
    match variant {
        VariantId::ThreeA => &[&["000"], &["011"], &["100"], &["111"]],
        VariantId::ThreeB => &[&["000"], &["001"], &["110"], &["111"]],
        VariantId::Four => &[&["0000", "0011"], &["1100", "1111"]],
    }
}

impl SecretSpec {
    pub fn new(variant: VariantId, coefficients: Vec<Complex64>) -> Result<Self> {
        Self::with_tolerance(variant, coefficients, ALGEBRA_TOL)
    }

    /// Validates normalization against a caller-chosen tolerance, then
    /// rescales the coefficients to the exact required norm.
    pub fn with_tolerance(
        variant: VariantId,
        coefficients: Vec<Complex64>,
        tol: f64,
    ) -> Result<Self> {
        let spec = variant.spec();
        if coefficients.len() != spec.num_coefficients() {
            return Err(Error::CoefficientCount {
                expected: spec.num_coefficients(),
                actual: coefficients.len(),
            });
        }
        let expected = spec.coefficient_norm_sqr();
        let actual: f64 = coefficients.iter().map(|c| c.norm_sqr()).sum();
        if (actual - expected).abs() > tol {
            return Err(Error::Normalization {
                expected,
                actual,
                deficit: (actual - expected).abs(),
            });
        }
        let scale = (expected / actual).sqrt();
        let coefficients = coefficients.into_iter().map(|c| c * scale).collect();
        Ok(Self {
            variant,
            coefficients,
        })
    }

    /// Normalized complex Gaussian draw from the restricted class.
    pub fn random<R: Rng + ?Sized>(variant: VariantId, rng: &mut R) -> Self {
        let spec = variant.spec();
        let coefficients =
            gaussian_coefficients(spec.num_coefficients(), spec.coefficient_norm_sqr(), rng);
        Self {
            variant,
            coefficients,
        }
    }

    /// Secrets with a single nonzero coefficient; together they span the class.
    pub fn spanning_set(variant: VariantId) -> Vec<Self> {
        let spec = variant.spec();
        let n = spec.num_coefficients();
        let value = Complex64::new(spec.coefficient_norm_sqr().sqrt(), 0.0);
        (0..n)
            .map(|k| {
                let mut coefficients = vec![Complex64::new(0.0, 0.0); n];
                coefficients[k] = value;
                Self {
                    variant,
                    coefficients,
                }
            })
            .collect()
    }

    pub fn state(&self) -> StateVector {
        build_secret(self)
    }
}

/// Expands the secret into a state on `num_secret_qubits` qubits.
pub fn build_secret(spec: &SecretSpec) -> StateVector {
    let terms: Vec<(Complex64, &str)> = class_kets(spec.variant)
        .iter()
        .zip(&spec.coefficients)
        .flat_map(|(kets, c)| kets.iter().map(move |k| (*c, *k)))
        .collect();
    StateVector::from_kets(&terms).expect("validated secret is normalized")
}
