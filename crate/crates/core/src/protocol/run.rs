use num_complex::Complex64;
use rand::RngCore;
use serde::{Deserialize, Serialize};

use super::bases::{alice_basis, build_channel};
use super::secret::{build_secret, SecretSpec};
use super::tables::{paper_correction_table, CorrectionTable};
use super::variant::{Encoding, Party, ProtocolVariant, VariantId};
use crate::statevec::{
    force_hadamard, force_outcome, measure_hadamard, measure_in_basis, outcome_probabilities,
    OrthonormalBasis, PauliString, StateVector,
};
use crate::{Error, Result};

/// How the two measurements pick their outcomes.
pub enum Branch<'a> {
    Forced { outcome: usize, bit: u8 },
    Sampled(&'a mut dyn RngCore),
}

/// One classical message.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Message {
    pub from: Party,
    pub to: Party,
    pub bits: String,
}

/// Classical record of one protocol run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Transcript {
    pub variant: VariantId,
    pub encoding: Encoding,
    /// Secret coefficients, or raw amplitudes when the run was given an
    /// arbitrary secret state.
    pub secret: Vec<Complex64>,
    pub alice_outcome: usize,
    pub alice_cbits: String,
    pub charlie_bit: u8,
    pub messages: Vec<Message>,
    pub correction: PauliString,
    pub bob_state_before: StateVector,
    pub bob_state_after: StateVector,
    pub fidelity: f64,
    pub alice_probabilities: Vec<f64>,
    pub charlie_probabilities: [f64; 2],
}

/// Exact probability of one (Alice outcome, Charlie bit) pair.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct JointOutcome {
    pub outcome: usize,
    pub charlie_bit: u8,
    pub probability: f64,
}

/// A variant with its channel, basis and table materialized once.
#[derive(Clone, Debug)]
pub struct Protocol {
    variant: &'static ProtocolVariant,
    encoding: Encoding,
    channel: StateVector,
    basis: OrthonormalBasis,
    table: CorrectionTable,
}

impl Protocol {
    /// Fails when the encoding's basis is not orthonormal (paper-literal ν).
    pub fn new(variant: VariantId, encoding: Encoding) -> Result<Self> {
        Ok(Self {
            variant: variant.spec(),
            encoding,
            channel: build_channel(variant),
            basis: alice_basis(variant, encoding)?,
            table: paper_correction_table(variant, encoding),
        })
    }

    pub fn variant(&self) -> &'static ProtocolVariant {
        self.variant
    }

    pub fn encoding(&self) -> Encoding {
        self.encoding
    }

    pub fn channel(&self) -> &StateVector {
        &self.channel
    }

    pub fn basis(&self) -> &OrthonormalBasis {
        &self.basis
    }

    pub fn table(&self) -> &CorrectionTable {
        &self.table
    }

    /// secret ⊗ channel.
    pub fn combined_state(&self, secret: &StateVector) -> Result<StateVector> {
        if secret.num_qubits() != self.variant.num_secret_qubits {
            return Err(Error::DimensionMismatch {
                left: secret.num_qubits(),
                right: self.variant.num_secret_qubits,
            });
        }
        Ok(secret.tensor(&self.channel))
    }

    /// Share of the combined state's weight lying outside the span of Alice's
    /// basis. Zero for secrets in the restricted class.
    pub fn out_of_span_mass(&self, secret: &StateVector) -> Result<f64> {
        let combined = self.combined_state(secret)?;
        let total: f64 = self
            .basis
            .vectors()
            .iter()
            .map(|v| {
                crate::statevec::project(&combined, self.basis.targets(), v)
                    .map(|r| r.iter().map(|a| a.norm_sqr()).sum::<f64>())
            })
            .sum::<Result<f64>>()?;
        Ok((1.0 - total).max(0.0))
    }

    pub fn run(&self, spec: &SecretSpec, branch: Branch<'_>) -> Result<Transcript> {
        if spec.variant != self.variant.id {
            return Err(Error::UnknownVariant(format!("{:?}", spec.variant)));
        }
        self.run_state(&build_secret(spec), spec.coefficients.clone(), branch)
    }

    /// Runs the protocol on an arbitrary secret state. States outside the
    /// restricted class are rejected with [`Error::OutOfSpan`].
    pub fn run_secret_state(&self, secret: &StateVector, branch: Branch<'_>) -> Result<Transcript> {
        self.run_state(secret, secret.amplitudes().to_vec(), branch)
    }

    fn run_state(
        &self,
        secret: &StateVector,
        record: Vec<Complex64>,
        branch: Branch<'_>,
    ) -> Result<Transcript> {
        let combined = self.combined_state(secret)?;
        let charlie = self.variant.charlie_after_alice();
        let alice_probabilities = outcome_probabilities(&combined, &self.basis)?;

        let (alice, (charlie_bit, bob_state_before)) = match branch {
            Branch::Forced { outcome, bit } => {
                let alice = force_outcome(&combined, &self.basis, outcome)?;
                let (_, bob) = force_hadamard(&alice.residual, charlie, bit)?;
                (alice, (bit, bob))
            }
            Branch::Sampled(rng) => {
                let alice = measure_in_basis(&combined, &self.basis, rng)?;
                let charlie_result = measure_hadamard(&alice.residual, charlie, rng)?;
                (alice, charlie_result)
            }
        };
        let charlie_probabilities = [0u8, 1].map(|b| {
            force_hadamard(&alice.residual, charlie, b)
                .map(|(p, _)| p)
                .unwrap_or(0.0)
        });

        let correction = self.table.lookup(alice.outcome, charlie_bit)?.clone();
        let bob_state_after = bob_state_before.apply_pauli(&correction)?;
        let fidelity = bob_state_after.fidelity(secret)?;
        let alice_cbits = format!("{:04b}", alice.outcome);

        Ok(Transcript {
            variant: self.variant.id,
            encoding: self.encoding,
            secret: record,
            alice_outcome: alice.outcome,
            messages: vec![
                Message {
                    from: Party::Alice,
                    to: Party::Bob,
                    bits: alice_cbits.clone(),
                },
                Message {
                    from: Party::Charlie,
                    to: Party::Bob,
                    bits: charlie_bit.to_string(),
                },
            ],
            alice_cbits,
            charlie_bit,
            correction,
            bob_state_before,
            bob_state_after,
            fidelity,
            alice_probabilities,
            charlie_probabilities,
        })
    }

    /// Exact joint probabilities of every (outcome, bit) pair, by forced
    /// projection.
    pub fn outcome_distribution(&self, spec: &SecretSpec) -> Result<Vec<JointOutcome>> {
        let combined = self.combined_state(&build_secret(spec))?;
        let charlie = self.variant.charlie_after_alice();
        let mut out = Vec::with_capacity(self.variant.num_rows());
        for outcome in 0..self.basis.len() {
            let alice = force_outcome(&combined, &self.basis, outcome)?;
            for bit in 0..2u8 {
                let (q, _) = force_hadamard(&alice.residual, charlie, bit)?;
                out.push(JointOutcome {
                    outcome,
                    charlie_bit: bit,
                    probability: alice.probability * q,
                });
            }
        }
        Ok(out)
    }
}

pub fn run_protocol(
    spec: &SecretSpec,
    encoding: Encoding,
    branch: Branch<'_>,
) -> Result<Transcript> {
    Protocol::new(spec.variant, encoding)?.run(spec, branch)
}

pub fn outcome_distribution(spec: &SecretSpec, encoding: Encoding) -> Result<Vec<JointOutcome>> {
    Protocol::new(spec.variant, encoding)?.outcome_distribution(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::trial_rng;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn identity_row_on_basis_secret() {
        let spec =
            SecretSpec::new(VariantId::ThreeA, vec![c(1.0), c(0.0), c(0.0), c(0.0)]).unwrap();
        let t = run_protocol(
            &spec,
            Encoding::Canonical,
            Branch::Forced { outcome: 0, bit: 0 },
        )
        .unwrap();
        assert_eq!(t.bob_state_after, StateVector::basis_state(3, 0));
        assert!((t.fidelity - 1.0).abs() < 1e-12);
        assert_eq!(t.alice_cbits, "0000");
        assert_eq!(t.correction, PauliString::identity(3));
    }

    #[test]
    fn three_a_eta_four_pre_correction_state() {
        let mut rng = trial_rng(5, 0);
        let spec = SecretSpec::random(VariantId::ThreeA, &mut rng);
        let [a, b, g, d] = [0, 1, 2, 3].map(|k| spec.coefficients[k]);
        let t = run_protocol(
            &spec,
            Encoding::Canonical,
            Branch::Forced { outcome: 4, bit: 0 },
        )
        .unwrap();
        let expected =
            StateVector::from_kets(&[(a, "011"), (b, "000"), (g, "111"), (d, "100")]).unwrap();
        assert!((t.bob_state_before.fidelity(&expected).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(t.correction, "I X X".parse().unwrap());
        assert!(t.fidelity > 1.0 - 1e-9);
        assert_eq!(t.alice_cbits, "0100");
    }

    #[test]
    fn four_nu_two_pre_correction_state() {
        let mut rng = trial_rng(6, 0);
        let spec = SecretSpec::random(VariantId::Four, &mut rng);
        let (a, b) = (spec.coefficients[0], spec.coefficients[1]);
        let t = run_protocol(
            &spec,
            Encoding::Canonical,
            Branch::Forced { outcome: 2, bit: 0 },
        )
        .unwrap();
        let expected =
            StateVector::from_kets(&[(a, "1100"), (a, "1111"), (b, "0000"), (b, "0011")]).unwrap();
        assert!((t.bob_state_before.fidelity(&expected).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(t.correction, "X X I I".parse().unwrap());
        assert!(t.fidelity > 1.0 - 1e-9);
    }

    #[test]
    fn messages_are_four_and_one_bits() {
        let mut rng = trial_rng(1, 2);
        for id in VariantId::ALL {
            let proto = Protocol::new(id, Encoding::Canonical).unwrap();
            let spec = SecretSpec::random(id, &mut rng);
            let t = proto.run(&spec, Branch::Sampled(&mut rng)).unwrap();
            assert_eq!(t.messages.len(), 2);
            assert_eq!(t.messages[0].bits.len(), 4);
            assert_eq!(t.messages[1].bits.len(), 1);
            assert_eq!(
                usize::from_str_radix(&t.alice_cbits, 2).unwrap(),
                t.alice_outcome
            );
        }
    }

    #[test]
    fn arbitrary_secret_is_rejected() {
        let proto = Protocol::new(VariantId::ThreeA, Encoding::Canonical).unwrap();
        let s = StateVector::from_kets(&[(c(0.6), "000"), (c(0.8), "001")]).unwrap();
        let err = proto
            .run_secret_state(&s, Branch::Forced { outcome: 0, bit: 0 })
            .unwrap_err();
        match err {
            Error::OutOfSpan { mass } => assert!((mass - 0.64).abs() < 1e-12, "{mass}"),
            other => panic!("{other:?}"),
        }
        assert!((proto.out_of_span_mass(&s).unwrap() - 0.64).abs() < 1e-12);
    }

    #[test]
    fn literal_nu_cannot_build_a_protocol() {
        assert!(matches!(
            Protocol::new(VariantId::Four, Encoding::PaperLiteral),
            Err(Error::NotOrthonormal { i: 2, j: 3, .. })
        ));
    }
}
