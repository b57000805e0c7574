use num_complex::Complex64;

use super::variant::{Encoding, VariantId};
use crate::statevec::{OneQubitGate, OrthonormalBasis, StateVector};
use crate::Result;

const HALF: Complex64 = Complex64::new(0.5, 0.0);

/// GHZ₃ ⊗ GHZ₃ = ½(|000000⟩+|000111⟩+|111000⟩+|111111⟩).
pub fn ghz_pair() -> StateVector {
    StateVector::ghz3().tensor(&StateVector::ghz3())
}

/// The six-qubit channel, obtained by distributing the qubits of a GHZ pair
/// according to the variant's party layout.
pub fn build_channel(variant: VariantId) -> StateVector {
    ghz_pair()
        .permute_qubits(&variant.spec().channel_permutation)
        .expect("static permutation is valid")
}

/// Four kets of the seed vector η₀ (or η̃₀), in the order the sign formula
/// refers to them.
fn eta_seed_kets(variant: VariantId) -> [&'static str; 4] {
    match variant {
        VariantId::ThreeA => ["00000", "01101", "10010", "11111"],
        VariantId::ThreeB => ["00000", "00101", "11010", "11111"],
        VariantId::Four => panic!("the four-qubit variant has no η basis"),
    }
}

// Alice's channel qubits are the 4th and 5th of her five measured qubits.
const A1: usize = 3;
const A2: usize = 4;

/// η_i = σx₄^{i₃} σx₅^{i₂} σz₄^{i₁} σz₅^{i₀} η₀ (qubits counted from 1).
pub fn eta_generator_formula(variant: VariantId, i: usize) -> StateVector {
    let kets = eta_seed_kets(variant);
    let mut v = StateVector::from_kets(&kets.map(|k| (HALF, k))).expect("η₀ is normalized");
    let bit = |b: usize| (i >> b) & 1 == 1;
    let z = OneQubitGate::pauli_z();
    let x = OneQubitGate::pauli_x();
    if bit(0) {
        v.apply_gate_in_place(A2, &z);
    }
    if bit(1) {
        v.apply_gate_in_place(A1, &z);
    }
    if bit(2) {
        v.apply_gate_in_place(A2, &x);
    }
    if bit(3) {
        v.apply_gate_in_place(A1, &x);
    }
    v
}

/// η_i = ½ σx₄^{i₃} σx₅^{i₂} [k₀ + (−1)^{i₁} k₁ + (−1)^{i₀} k₂ + (−1)^{i₁+i₀} k₃],
/// the explicit sign expansion as printed.
pub fn eta_explicit_formula(variant: VariantId, i: usize) -> StateVector {
    let kets = eta_seed_kets(variant);
    let sign = |b: usize| if (i >> b) & 1 == 1 { -1.0 } else { 1.0 };
    let signs = [1.0, sign(1), sign(0), sign(1) * sign(0)];
    let terms: Vec<_> = kets
        .iter()
        .zip(signs)
        .map(|(k, s)| (HALF * s, *k))
        .collect();
    let mut v = StateVector::from_kets(&terms).expect("normalized");
    if (i >> 2) & 1 == 1 {
        v.apply_gate_in_place(A2, &OneQubitGate::pauli_x());
    }
    if (i >> 3) & 1 == 1 {
        v.apply_gate_in_place(A1, &OneQubitGate::pauli_x());
    }
    v
}

fn nu_vectors(encoding: Encoding) -> Vec<StateVector> {
    let h = |terms: [(f64, &str); 4]| {
        StateVector::from_kets(&terms.map(|(s, k)| (HALF * s, k))).expect("normalized")
    };
    let nu0 = h([
        (1.0, "00000"),
        (1.0, "00110"),
        (1.0, "11001"),
        (1.0, "11111"),
    ]);
    let nu1 = h([
        (1.0, "00000"),
        (1.0, "00110"),
        (-1.0, "11001"),
        (-1.0, "11111"),
    ]);
    let nu2 = h([
        (1.0, "00001"),
        (1.0, "00111"),
        (1.0, "11000"),
        (1.0, "11110"),
    ]);
    let nu3 = match encoding {
        // orthogonal to ν₂, and the partner that makes ν₂ − ν₃ carry the β terms
        Encoding::Canonical => h([
            (1.0, "00001"),
            (1.0, "00111"),
            (-1.0, "11000"),
            (-1.0, "11110"),
        ]),
        // printed identical to ν₂
        Encoding::PaperLiteral => nu2.clone(),
    };
    vec![nu0, nu1, nu2, nu3]
}

/// Alice's measurement vectors, in outcome order. Literal encodings are
/// not guaranteed to be orthonormal.
pub fn alice_basis_vectors(variant: VariantId, encoding: Encoding) -> Vec<StateVector> {
    match (variant, encoding) {
        (VariantId::Four, _) => nu_vectors(encoding),
        (_, Encoding::Canonical) => (0..16).map(|i| eta_generator_formula(variant, i)).collect(),
        (_, Encoding::PaperLiteral) => (0..16).map(|i| eta_explicit_formula(variant, i)).collect(),
    }
}

/// Alice's basis, targeted at her qubits of the combined secret ⊗ channel
/// state. Fails if the chosen encoding is not orthonormal.
pub fn alice_basis(variant: VariantId, encoding: Encoding) -> Result<OrthonormalBasis> {
    OrthonormalBasis::new(
        variant.spec().alice_targets(),
        alice_basis_vectors(variant, encoding),
    )
}

/// Canonical basis (generator-form η, sign-corrected ν₃).
pub fn build_alice_basis(variant: VariantId) -> OrthonormalBasis {
    alice_basis(variant, Encoding::Canonical).expect("canonical bases are orthonormal")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn from(terms: &[(f64, &str)]) -> StateVector {
        let t: Vec<_> = terms.iter().map(|(s, k)| (c(*s), *k)).collect();
        StateVector::from_kets(&t).unwrap()
    }

    #[test]
    fn channels_match_printed_kets() {
        let cases = [
            (VariantId::ThreeA, ["000000", "010110", "101001", "111111"]),
            (VariantId::ThreeB, ["000000", "010011", "101100", "111111"]),
            (VariantId::Four, ["000000", "000111", "111000", "111111"]),
        ];
        for (id, kets) in cases {
            let expected = from(&kets.map(|k| (0.5, k)));
            assert!(
                build_channel(id).max_abs_diff(&expected).unwrap() <= 1e-15,
                "{id}"
            );
        }
    }

    #[test]
    fn eta_zero_and_one() {
        assert_eq!(
            eta_generator_formula(VariantId::ThreeA, 0),
            from(&[
                (0.5, "00000"),
                (0.5, "01101"),
                (0.5, "10010"),
                (0.5, "11111")
            ])
        );
        assert_eq!(
            eta_generator_formula(VariantId::ThreeA, 1),
            from(&[
                (0.5, "00000"),
                (-0.5, "01101"),
                (0.5, "10010"),
                (-0.5, "11111")
            ])
        );
        assert_eq!(
            eta_explicit_formula(VariantId::ThreeA, 1),
            from(&[
                (0.5, "00000"),
                (0.5, "01101"),
                (-0.5, "10010"),
                (-0.5, "11111")
            ])
        );
    }

    #[test]
    fn nu_two() {
        let nu = alice_basis_vectors(VariantId::Four, Encoding::Canonical);
        assert_eq!(
            nu[2],
            from(&[
                (0.5, "00001"),
                (0.5, "00111"),
                (0.5, "11000"),
                (0.5, "11110")
            ])
        );
    }

    #[test]
    fn canonical_bases_are_orthonormal_and_literal_nu_is_not() {
        for id in VariantId::ALL {
            let b = build_alice_basis(id);
            assert_eq!(b.len(), id.spec().alice_basis_size);
        }
        assert!(alice_basis(VariantId::Four, Encoding::PaperLiteral).is_err());
        // the explicit η formula is a relabelling, so it is still orthonormal
        assert!(alice_basis(VariantId::ThreeA, Encoding::PaperLiteral).is_ok());
    }
}
