use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VariantId {
    /// Three-qubit secret α|000⟩+β|011⟩+γ|100⟩+δ|111⟩, channel in AABBBC layout
    /// with Charlie on the first GHZ state.
    ThreeA,
    /// Three-qubit secret α|000⟩+β|001⟩+γ|110⟩+δ|111⟩, channel in AABBBC
    /// layout with Charlie on the second GHZ state.
    ThreeB,
    /// Four-qubit secret α(|0000⟩+|0011⟩)+β(|1100⟩+|1111⟩), ABBBBC layout.
    Four,
}

impl VariantId {
    pub const ALL: [VariantId; 3] = [VariantId::ThreeA, VariantId::ThreeB, VariantId::Four];

    pub fn cli_name(self) -> &'static str {
        match self {
            VariantId::ThreeA => "three-a",
            VariantId::ThreeB => "three-b",
            VariantId::Four => "four",
        }
    }

    pub fn spec(self) -> &'static ProtocolVariant {
        match self {
            VariantId::ThreeA => &THREE_A,
            VariantId::ThreeB => &THREE_B,
            VariantId::Four => &FOUR,
        }
    }
}

impl fmt::Display for VariantId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for VariantId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "three-a" => Ok(VariantId::ThreeA),
            "three-b" => Ok(VariantId::ThreeB),
            "four" => Ok(VariantId::Four),
            _ => Err(Error::UnknownVariant(s.to_string())),
        }
    }
}

/// Which encoding of the measurement bases and correction tables to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Encoding {
    /// Generator-form η bases, sign-corrected ν₃, and a correction table for
    /// the second three-qubit variant whose Charlie-|−⟩ rows are consistent
    /// with its channel.
    #[default]
    Canonical,
    /// The formulas and tables exactly as printed, including the explicit
    /// η sign formula, the duplicated ν₃ and the three-b Charlie-|−⟩ rows.
    PaperLiteral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Party {
    Alice,
    Bob,
    Charlie,
}

/// Static description of one protocol variant.
#[derive(Debug, PartialEq, Eq)]
pub struct ProtocolVariant {
    pub id: VariantId,
    pub num_secret_qubits: usize,
    /// Owner of each of the six channel qubits.
    pub party_layout: [Party; 6],
    pub alice_basis_size: usize,
    pub bob_qubits: usize,
    /// Channel qubit `k` is qubit `channel_permutation[k]` of GHZ₃ ⊗ GHZ₃.
    pub channel_permutation: [usize; 6],
}

use Party::{Alice as A, Bob as B, Charlie as C};

static THREE_A: ProtocolVariant = ProtocolVariant {
    id: VariantId::ThreeA,
    num_secret_qubits: 3,
    party_layout: [A, A, B, B, B, C],
    alice_basis_size: 16,
    bob_qubits: 3,
    // first GHZ → (Alice, Bob, Charlie), second GHZ → (Alice, Bob, Bob)
    channel_permutation: [0, 3, 1, 4, 5, 2],
};

static THREE_B: ProtocolVariant = ProtocolVariant {
    id: VariantId::ThreeB,
    num_secret_qubits: 3,
    party_layout: [A, A, B, B, B, C],
    alice_basis_size: 16,
    bob_qubits: 3,
    // first GHZ → (Alice, Bob, Bob), second GHZ → (Alice, Bob, Charlie)
    channel_permutation: [0, 3, 1, 2, 4, 5],
};

static FOUR: ProtocolVariant = ProtocolVariant {
    id: VariantId::Four,
    num_secret_qubits: 4,
    party_layout: [A, B, B, B, B, C],
    alice_basis_size: 4,
    bob_qubits: 4,
    channel_permutation: [0, 1, 2, 3, 4, 5],
};

impl ProtocolVariant {
    /// Secret qubits followed by the six channel qubits.
    pub fn combined_qubits(&self) -> usize {
        self.num_secret_qubits + 6
    }

    /// Qubits of the combined state that Alice measures.
    pub fn alice_targets(&self) -> Vec<usize> {
        let s = self.num_secret_qubits;
        (0..s)
            .chain(
                self.channel_qubits_of(Party::Alice)
                    .into_iter()
                    .map(|k| s + k),
            )
            .collect()
    }

    pub fn channel_qubits_of(&self, party: Party) -> Vec<usize> {
        (0..6).filter(|&k| self.party_layout[k] == party).collect()
    }

    /// Position of Charlie's qubit in the state left after Alice measures.
    pub fn charlie_after_alice(&self) -> usize {
        let remaining: Vec<usize> = (0..6)
            .filter(|&k| self.party_layout[k] != Party::Alice)
            .collect();
        remaining
            .iter()
            .position(|&k| self.party_layout[k] == Party::Charlie)
            .unwrap()
    }

    /// Number of free coefficients in the secret class.
    pub fn num_coefficients(&self) -> usize {
        match self.id {
            VariantId::ThreeA | VariantId::ThreeB => 4,
            VariantId::Four => 2,
        }
    }

    /// Required Σ|coefficient|².
    pub fn coefficient_norm_sqr(&self) -> f64 {
        match self.id {
            VariantId::ThreeA | VariantId::ThreeB => 1.0,
            VariantId::Four => 0.5,
        }
    }

    /// Number of (alice_outcome, charlie_bit) rows.
    pub fn num_rows(&self) -> usize {
        2 * self.alice_basis_size
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_variant_measures_five_and_one() {
        for id in VariantId::ALL {
            let v = id.spec();
            assert_eq!(v.alice_targets().len(), 5);
            assert_eq!(v.channel_qubits_of(Party::Charlie).len(), 1);
            assert_eq!(v.channel_qubits_of(Party::Bob).len(), v.bob_qubits);
            assert_eq!(v.bob_qubits, v.num_secret_qubits);
            assert_eq!(v.charlie_after_alice(), v.bob_qubits);
        }
    }

    #[test]
    fn layouts() {
        assert_eq!(
            VariantId::ThreeA.spec().channel_qubits_of(Party::Alice),
            vec![0, 1]
        );
        assert_eq!(
            VariantId::Four.spec().channel_qubits_of(Party::Bob),
            vec![1, 2, 3, 4]
        );
        assert_eq!(
            VariantId::Four.spec().channel_qubits_of(Party::Charlie),
            vec![5]
        );
    }

    #[test]
    fn parse_names() {
        assert_eq!("three-a".parse::<VariantId>().unwrap(), VariantId::ThreeA);
        assert_eq!("THREE_B".parse::<VariantId>().unwrap(), VariantId::ThreeB);
        assert!("five".parse::<VariantId>().is_err());
    }
}
