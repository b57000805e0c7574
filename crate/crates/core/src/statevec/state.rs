use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::gate::OneQubitGate;
use super::pauli::PauliString;
use crate::{Error, Result, ALGEBRA_TOL};

/// Normalized amplitude vector over `num_qubits` qubits.
///
/// Qubit 0 is the most significant bit of the amplitude index, so the ket
/// `|01⟩` lives at index 1. A zero-qubit state is the scalar left over after
/// every qubit has been measured.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateVector {
    num_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Wraps an amplitude array, rejecting anything that is not normalized to
    /// within `ALGEBRA_TOL`.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let num_qubits = qubits_for_len(amplitudes.len())?;
        let norm = norm_sqr(&amplitudes);
        if (norm - 1.0).abs() > ALGEBRA_TOL {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    /// Wraps an amplitude array after rescaling it to unit norm.
    pub fn normalized(mut amplitudes: Vec<Complex64>) -> Result<Self> {
        let num_qubits = qubits_for_len(amplitudes.len())?;
        let norm = norm_sqr(&amplitudes).sqrt();
        if norm == 0.0 {
            return Err(Error::ZeroNorm);
        }
        amplitudes.iter_mut().for_each(|a| *a /= norm);
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    pub fn basis_state(num_qubits: usize, index: usize) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << num_qubits];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Self {
            num_qubits,
            amplitudes,
        }
    }

    /// Builds a state from `(coefficient, ket)` terms such as `(0.5, "01101")`.
    /// Repeated kets accumulate. The result must already be normalized.
    pub fn from_kets<S: AsRef<str>>(terms: &[(Complex64, S)]) -> Result<Self> {
        Self::new(accumulate_kets(terms)?)
    }

    /// Like [`StateVector::from_kets`] but rescales to unit norm.
    pub fn from_kets_normalized<S: AsRef<str>>(terms: &[(Complex64, S)]) -> Result<Self> {
        Self::normalized(accumulate_kets(terms)?)
    }

    pub fn plus() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self {
            num_qubits: 1,
            amplitudes: vec![Complex64::new(h, 0.0), Complex64::new(h, 0.0)],
        }
    }

    pub fn minus() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self {
            num_qubits: 1,
            amplitudes: vec![Complex64::new(h, 0.0), Complex64::new(-h, 0.0)],
        }
    }

    /// The three-qubit GHZ state (|000⟩ + |111⟩)/√2.
    pub fn ghz3() -> Self {
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self::from_kets(&[(h, "000"), (h, "111")]).expect("GHZ state is normalized")
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        norm_sqr(&self.amplitudes)
    }

    /// `self ⊗ other`; the qubits of `self` come first.
    pub fn tensor(&self, other: &StateVector) -> StateVector {
        let mut amplitudes = Vec::with_capacity(self.amplitudes.len() * other.amplitudes.len());
        for a in &self.amplitudes {
            amplitudes.extend(other.amplitudes.iter().map(|b| a * b));
        }
        StateVector {
            num_qubits: self.num_qubits + other.num_qubits,
            amplitudes,
        }
    }

    pub fn apply_gate(&self, qubit: usize, gate: &OneQubitGate) -> Result<StateVector> {
        self.check_qubit(qubit)?;
        let mut out = self.clone();
        out.apply_gate_in_place(qubit, gate);
        Ok(out)
    }

    pub(crate) fn apply_gate_in_place(&mut self, qubit: usize, gate: &OneQubitGate) {
        let mask = 1usize << (self.num_qubits - 1 - qubit);
        let m = gate.matrix();
        for i in 0..self.amplitudes.len() {
            if i & mask != 0 {
                continue;
            }
            let a0 = self.amplitudes[i];
            let a1 = self.amplitudes[i | mask];
            self.amplitudes[i] = m[0][0] * a0 + m[0][1] * a1;
            self.amplitudes[i | mask] = m[1][0] * a0 + m[1][1] * a1;
        }
    }

    /// Applies `pauli.factors()[k]` to `targets[k]` for every `k`.
    pub fn apply_pauli_string(
        &self,
        targets: &[usize],
        pauli: &PauliString,
    ) -> Result<StateVector> {
        if targets.len() != pauli.len() {
            return Err(Error::LengthMismatch {
                targets: targets.len(),
                factors: pauli.len(),
            });
        }
        check_distinct(targets, self.num_qubits)?;
        let mut out = self.clone();
        for (&q, factor) in targets.iter().zip(pauli.factors()) {
            out.apply_gate_in_place(q, &factor.gate());
        }
        Ok(out)
    }

    /// Applies a Pauli string to all qubits in order.
    pub fn apply_pauli(&self, pauli: &PauliString) -> Result<StateVector> {
        let targets: Vec<usize> = (0..self.num_qubits).collect();
        self.apply_pauli_string(&targets, pauli)
    }

    /// ⟨self|other⟩.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        self.check_same_size(other)?;
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// |⟨self|other⟩|².
    pub fn fidelity(&self, other: &StateVector) -> Result<f64> {
        Ok(self.inner(other)?.norm_sqr().min(1.0))
    }

    /// Largest element-wise amplitude difference.
    pub fn max_abs_diff(&self, other: &StateVector) -> Result<f64> {
        self.check_same_size(other)?;
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Reorders qubits so that qubit `k` of the result is qubit `perm[k]` of
    /// `self`.
    pub fn permute_qubits(&self, perm: &[usize]) -> Result<StateVector> {
        if perm.len() != self.num_qubits {
            return Err(Error::LengthMismatch {
                targets: perm.len(),
                factors: self.num_qubits,
            });
        }
        check_distinct(perm, self.num_qubits)?;
        let n = self.num_qubits;
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); self.amplitudes.len()];
        for (old, amp) in self.amplitudes.iter().enumerate() {
            let mut new = 0usize;
            for (k, &src) in perm.iter().enumerate() {
                let bit = (old >> (n - 1 - src)) & 1;
                new |= bit << (n - 1 - k);
            }
            amplitudes[new] = *amp;
        }
        Ok(StateVector {
            num_qubits: n,
            amplitudes,
        })
    }

    /// Nonzero terms as `(coefficient, ket)` pairs, in index order.
    pub fn terms(&self, tol: f64) -> Vec<(Complex64, String)> {
        self.amplitudes
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm() > tol)
            .map(|(i, a)| (*a, ket_label(i, self.num_qubits)))
            .collect()
    }

    pub(crate) fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit >= self.num_qubits {
            return Err(Error::QubitOutOfRange {
                index: qubit,
                num_qubits: self.num_qubits,
            });
        }
        Ok(())
    }

    fn check_same_size(&self, other: &StateVector) -> Result<()> {
        if self.num_qubits != other.num_qubits {
            return Err(Error::DimensionMismatch {
                left: self.num_qubits,
                right: other.num_qubits,
            });
        }
        Ok(())
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms(1e-12);
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, ket)) in terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.im.abs() < 1e-12 {
                write!(f, "{:.6}|{}⟩", c.re, ket)?;
            } else {
                write!(f, "({:.6}{:+.6}i)|{}⟩", c.re, c.im, ket)?;
            }
        }
        Ok(())
    }
}

pub(crate) fn ket_label(index: usize, num_qubits: usize) -> String {
    (0..num_qubits)
        .map(|q| {
            if (index >> (num_qubits - 1 - q)) & 1 == 1 {
                '1'
            } else {
                '0'
            }
        })
        .collect()
}

pub(crate) fn parse_ket(ket: &str) -> Result<usize> {
    if ket.is_empty() || ket.len() > 24 {
        return Err(Error::InvalidKet(ket.to_string()));
    }
    ket.chars().try_fold(0usize, |acc, c| match c {
        '0' => Ok(acc << 1),
        '1' => Ok((acc << 1) | 1),
        _ => Err(Error::InvalidKet(ket.to_string())),
    })
}

fn accumulate_kets<S: AsRef<str>>(terms: &[(Complex64, S)]) -> Result<Vec<Complex64>> {
    let width = match terms.first() {
        Some((_, k)) => k.as_ref().len(),
        None => return Err(Error::InvalidKet(String::new())),
    };
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << width];
    for (c, ket) in terms {
        let ket = ket.as_ref();
        if ket.len() != width {
            return Err(Error::InvalidKet(ket.to_string()));
        }
        amplitudes[parse_ket(ket)?] += c;
    }
    Ok(amplitudes)
}

fn qubits_for_len(len: usize) -> Result<usize> {
    if len == 0 || !len.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(len));
    }
    Ok(len.trailing_zeros() as usize)
}

fn norm_sqr(amplitudes: &[Complex64]) -> f64 {
    amplitudes.iter().map(|a| a.norm_sqr()).sum()
}

pub(crate) fn check_distinct(qubits: &[usize], num_qubits: usize) -> Result<()> {
    let mut seen = vec![false; num_qubits];
    for &q in qubits {
        if q >= num_qubits {
            return Err(Error::QubitOutOfRange {
                index: q,
                num_qubits,
            });
        }
        if std::mem::replace(&mut seen[q], true) {
            return Err(Error::DuplicateQubit(q));
        }
    }
    Ok(())
}
