use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::gate::OneQubitGate;
use crate::Error;

/// One factor of a correction operator. The vocabulary is exactly
/// {I, σx, σz, iσy}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PauliFactor {
    #[serde(rename = "I")]
    I,
    #[serde(rename = "X")]
    X,
    #[serde(rename = "Z")]
    Z,
    #[serde(rename = "iY")]
    IY,
}

impl PauliFactor {
    pub const ALL: [PauliFactor; 4] = [
        PauliFactor::I,
        PauliFactor::X,
        PauliFactor::Z,
        PauliFactor::IY,
    ];

    pub fn gate(self) -> OneQubitGate {
        match self {
            PauliFactor::I => OneQubitGate::identity(),
            PauliFactor::X => OneQubitGate::pauli_x(),
            PauliFactor::Z => OneQubitGate::pauli_z(),
            PauliFactor::IY => OneQubitGate::i_pauli_y(),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            PauliFactor::I => "I",
            PauliFactor::X => "X",
            PauliFactor::Z => "Z",
            PauliFactor::IY => "iY",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            PauliFactor::I => "I",
            PauliFactor::X => "σx",
            PauliFactor::Z => "σz",
            PauliFactor::IY => "iσy",
        }
    }

    /// `self · σz` with the resulting ±1 sign dropped.
    pub fn times_z(self) -> PauliFactor {
        match self {
            PauliFactor::I => PauliFactor::Z,
            PauliFactor::Z => PauliFactor::I,
            PauliFactor::X => PauliFactor::IY,
            PauliFactor::IY => PauliFactor::X,
        }
    }
}

impl FromStr for PauliFactor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "I" | "i" => Ok(PauliFactor::I),
            "X" | "x" | "sx" | "σx" => Ok(PauliFactor::X),
            "Z" | "z" | "sz" | "σz" => Ok(PauliFactor::Z),
            "iY" | "iy" | "isy" | "iσy" => Ok(PauliFactor::IY),
            _ => Err(Error::UnknownPauli(s.to_string())),
        }
    }
}

/// Tensor product of [`PauliFactor`]s, one per target qubit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PauliString(Vec<PauliFactor>);

impl PauliString {
    pub fn new(factors: Vec<PauliFactor>) -> Self {
        Self(factors)
    }

    pub fn identity(len: usize) -> Self {
        Self(vec![PauliFactor::I; len])
    }

    pub fn factors(&self) -> &[PauliFactor] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All 4^len strings over the vocabulary, in lexicographic order of
    /// `PauliFactor::ALL`.
    pub fn enumerate(len: usize) -> impl Iterator<Item = PauliString> {
        (0..4usize.pow(len as u32)).map(move |mut code| {
            let mut factors = vec![PauliFactor::I; len];
            for slot in factors.iter_mut().rev() {
                *slot = PauliFactor::ALL[code % 4];
                code /= 4;
            }
            PauliString(factors)
        })
    }

    /// Space-separated ASCII labels, e.g. `"I iY X"`.
    pub fn labels(&self) -> String {
        self.0
            .iter()
            .map(|f| f.label())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn with_factor(&self, index: usize, factor: PauliFactor) -> PauliString {
        let mut factors = self.0.clone();
        factors[index] = factor;
        PauliString(factors)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let symbols: Vec<_> = self.0.iter().map(|p| p.symbol()).collect();
        write!(f, "{}", symbols.join(" ⊗ "))
    }
}

impl FromStr for PauliString {
    type Err = Error;

    /// Accepts whitespace- or `⊗`-separated labels.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(|c: char| c.is_whitespace() || c == '⊗' || c == ',')
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()
            .map(PauliString)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p: PauliString = "iY I X".parse().unwrap();
        assert_eq!(
            p.factors(),
            &[PauliFactor::IY, PauliFactor::I, PauliFactor::X]
        );
        assert_eq!(p.to_string(), "iσy ⊗ I ⊗ σx");
        assert_eq!(p.labels(), "iY I X");
        assert_eq!(p.to_string().parse::<PauliString>().unwrap(), p);
        assert!("I Q".parse::<PauliString>().is_err());
    }

    #[test]
    fn enumeration_covers_vocabulary() {
        let all: Vec<_> = PauliString::enumerate(3).collect();
        assert_eq!(all.len(), 64);
        assert_eq!(all[0], PauliString::identity(3));
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 64);
        assert_eq!(PauliString::enumerate(4).count(), 256);
    }

    #[test]
    fn times_z_matches_matrix_product_up_to_sign() {
        let z = OneQubitGate::pauli_z();
        for f in PauliFactor::ALL {
            let product = f.gate().mul(&z);
            let expected = f.times_z().gate();
            let same = product == expected;
            let negated =
                (0..2).all(|i| (0..2).all(|j| product.matrix()[i][j] == -expected.matrix()[i][j]));
            assert!(same || negated, "{f:?}");
        }
    }

    #[test]
    fn serde_uses_labels() {
        let p: PauliString = "Z iY I".parse().unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["Z","iY","I"]"#);
    }
}
