use num_complex::Complex64;

use super::{ORACLE_RANDOM_SECRETS, ORACLE_SEED};
use crate::protocol::{alice_basis_vectors, build_channel, Encoding, SecretSpec, VariantId};
use crate::rng::trial_rng;
use crate::statevec::{project, PauliString, StateVector};
use crate::{Error, Result, FIDELITY_TOL};

/// Bob's pre-correction state in one branch, for each test secret.
#[derive(Clone, Debug)]
pub struct BranchStates {
    pub secrets: Vec<StateVector>,
    pub bob: Vec<StateVector>,
}

/// The spanning secrets of the class followed by fixed random ones.
pub fn test_secrets(variant: VariantId) -> Vec<StateVector> {
    let mut secrets: Vec<StateVector> = SecretSpec::spanning_set(variant)
        .iter()
        .map(SecretSpec::state)
        .collect();
    secrets.extend(
        (0..ORACLE_RANDOM_SECRETS as u64)
            .map(|k| SecretSpec::random(variant, &mut trial_rng(ORACLE_SEED, k)).state()),
    );
    secrets
}

impl BranchStates {
    /// Projects secret ⊗ channel onto `alice_vector` and Charlie's
    /// |+⟩/|−⟩ (bit 0/1), leaving Bob's qubits.
    pub fn compute(variant: VariantId, alice_vector: &StateVector, bit: u8) -> Result<Self> {
        let spec = variant.spec();
        let channel = build_channel(variant);
        let alice_targets = spec.alice_targets();
        let charlie = spec.charlie_after_alice();
        let charlie_vector = if bit == 0 {
            StateVector::plus()
        } else {
            StateVector::minus()
        };
        let secrets = test_secrets(variant);
        let bob = secrets
            .iter()
            .map(|s| {
                let combined = s.tensor(&channel);
                let after_alice = project(&combined, &alice_targets, alice_vector)?;
                let after_alice = StateVector::normalized(after_alice)
                    .map_err(|_| Error::ZeroProbability { outcome: 0 })?;
                let bob = project(&after_alice, &[charlie], &charlie_vector)?;
                StateVector::normalized(bob).map_err(|_| Error::ZeroProbability {
                    outcome: bit as usize,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { secrets, bob })
    }

    /// True when `p` restores every test secret up to a global phase.
    pub fn restores(&self, p: &PauliString) -> bool {
        self.bob.iter().zip(&self.secrets).all(|(b, s)| {
            b.apply_pauli(p)
                .and_then(|r| r.fidelity(s))
                .is_ok_and(|f| f >= 1.0 - FIDELITY_TOL)
        })
    }

    /// True when `p` restores every test secret amplitude for amplitude.
    pub fn restores_exactly(&self, p: &PauliString) -> bool {
        self.bob.iter().zip(&self.secrets).all(|(b, s)| {
            b.apply_pauli(p)
                .and_then(|r| r.max_abs_diff(s))
                .is_ok_and(|d| d <= FIDELITY_TOL)
        })
    }

    /// Exhaustive search over {I, σx, σz, iσy}^⊗n.
    pub fn solutions(&self) -> Vec<PauliString> {
        let n = self.secrets[0].num_qubits();
        PauliString::enumerate(n)
            .filter(|p| self.restores(p))
            .collect()
    }
}

/// Every Pauli string that returns Bob's forced pre-correction state to the
/// secret, for the whole spanning set and the oracle's random secrets.
pub fn derive_corrections(
    variant: VariantId,
    encoding: Encoding,
    outcome: usize,
    bit: u8,
) -> Result<Vec<PauliString>> {
    let vectors = alice_basis_vectors(variant, encoding);
    let vector = vectors.get(outcome).ok_or(Error::NoSuchOutcome(outcome))?;
    derive_corrections_for(variant, vector, bit)
}

/// [`derive_corrections`] for an explicitly supplied measurement vector.
pub fn derive_corrections_for(
    variant: VariantId,
    alice_vector: &StateVector,
    bit: u8,
) -> Result<Vec<PauliString>> {
    if bit > 1 {
        return Err(Error::NoSuchRow { outcome: 0, bit });
    }
    Ok(BranchStates::compute(variant, alice_vector, bit)?.solutions())
}

/// Pauli strings that act on the whole secret class as one scalar. Any two
/// valid corrections for a row differ by an element of this set.
pub fn class_stabilizer(variant: VariantId) -> Vec<PauliString> {
    let basis: Vec<StateVector> = SecretSpec::spanning_set(variant)
        .iter()
        .map(SecretSpec::state)
        .collect();
    PauliString::enumerate(variant.spec().bob_qubits)
        .filter(|p| {
            let mut scalar: Option<Complex64> = None;
            basis.iter().all(|e| {
                let image = e.apply_pauli(p).expect("width matches");
                let lambda = e.inner(&image).expect("width matches");
                let proportional = (lambda.norm() - 1.0).abs() < FIDELITY_TOL;
                let same = scalar.is_none_or(|s| (s - lambda).norm() < FIDELITY_TOL);
                scalar.get_or_insert(lambda);
                proportional && same
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn spec_examples() {
        let d = derive_corrections(VariantId::ThreeA, Encoding::Canonical, 0, 0).unwrap();
        assert!(d.contains(&p("I I I")));
        let d = derive_corrections(VariantId::ThreeB, Encoding::Canonical, 8, 0).unwrap();
        assert!(d.contains(&p("X X I")));
        let d = derive_corrections(VariantId::Four, Encoding::Canonical, 3, 0).unwrap();
        assert!(d.contains(&p("X iY I I")));
    }

    #[test]
    fn three_b_charlie_minus_needs_sigma_z_on_third_qubit() {
        let d = derive_corrections(VariantId::ThreeB, Encoding::Canonical, 0, 1).unwrap();
        assert!(d.contains(&p("I I Z")));
        assert!(!d.contains(&p("I Z I")));
    }

    #[test]
    fn stabilizer_sizes() {
        // three-qubit classes fix qubits 1 and 2 equal (A) or 0 and 1 equal (B)
        let a = class_stabilizer(VariantId::ThreeA);
        assert_eq!(a, vec![p("I I I"), p("I Z Z")]);
        let b = class_stabilizer(VariantId::ThreeB);
        assert_eq!(b, vec![p("I I I"), p("Z Z I")]);
    }

    #[test]
    fn bad_bit() {
        assert!(derive_corrections(VariantId::ThreeA, Encoding::Canonical, 0, 2).is_err());
        assert!(derive_corrections(VariantId::ThreeA, Encoding::Canonical, 16, 0).is_err());
    }
}
