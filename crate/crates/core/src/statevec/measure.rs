use num_complex::Complex64;
use rand::Rng;

use super::basis::OrthonormalBasis;
use super::state::{check_distinct, StateVector};
use crate::{Error, Result, FIDELITY_TOL};

/// Result of one projective measurement.
#[derive(Clone, Debug, PartialEq)]
pub struct Measurement {
    pub outcome: usize,
    pub probability: f64,
    /// Normalized post-measurement state of the unmeasured qubits, in their
    /// original relative order.
    pub residual: StateVector,
}

/// Unnormalized `(⟨vector| ⊗ I_rest) |state⟩` over the unmeasured qubits.
///
/// `vector` need not belong to an orthonormal set, which lets callers probe
/// arbitrary (including malformed) basis encodings.
pub fn project(
    state: &StateVector,
    targets: &[usize],
    vector: &StateVector,
) -> Result<Vec<Complex64>> {
    let n = state.num_qubits();
    check_distinct(targets, n)?;
    if vector.num_qubits() != targets.len() {
        return Err(Error::DimensionMismatch {
            left: vector.num_qubits(),
            right: targets.len(),
        });
    }
    let rest: Vec<usize> = (0..n).filter(|q| !targets.contains(q)).collect();
    let k = targets.len();
    let mut residual = vec![Complex64::new(0.0, 0.0); 1 << rest.len()];
    let bra: Vec<Complex64> = vector.amplitudes().iter().map(|a| a.conj()).collect();
    for (idx, amp) in state.amplitudes().iter().enumerate() {
        if *amp == Complex64::new(0.0, 0.0) {
            continue;
        }
        let t = gather(idx, n, targets);
        if bra[t] == Complex64::new(0.0, 0.0) {
            continue;
        }
        let r = gather(idx, n, &rest);
        residual[r] += bra[t] * amp;
        debug_assert!(t < 1 << k);
    }
    Ok(residual)
}

fn gather(index: usize, n: usize, qubits: &[usize]) -> usize {
    qubits
        .iter()
        .fold(0, |acc, &q| (acc << 1) | ((index >> (n - 1 - q)) & 1))
}

fn mass(v: &[Complex64]) -> f64 {
    v.iter().map(|a| a.norm_sqr()).sum()
}

/// Probability of every basis outcome. Fails with [`Error::OutOfSpan`] when
/// the state carries weight outside the span of the basis.
pub fn outcome_probabilities(state: &StateVector, basis: &OrthonormalBasis) -> Result<Vec<f64>> {
    let probs = basis
        .vectors()
        .iter()
        .map(|v| project(state, basis.targets(), v).map(|r| mass(&r)))
        .collect::<Result<Vec<_>>>()?;
    let total: f64 = probs.iter().sum();
    if total < 1.0 - FIDELITY_TOL {
        return Err(Error::OutOfSpan { mass: 1.0 - total });
    }
    Ok(probs)
}

/// Deterministically selects outcome `outcome` instead of sampling.
pub fn force_outcome(
    state: &StateVector,
    basis: &OrthonormalBasis,
    outcome: usize,
) -> Result<Measurement> {
    let probs = outcome_probabilities(state, basis)?;
    collapse(state, basis, outcome, &probs)
}

fn collapse(
    state: &StateVector,
    basis: &OrthonormalBasis,
    outcome: usize,
    probs: &[f64],
) -> Result<Measurement> {
    let vector = basis
        .vectors()
        .get(outcome)
        .ok_or(Error::NoSuchOutcome(outcome))?;
    let probability = probs[outcome];
    if probability <= 0.0 {
        return Err(Error::ZeroProbability { outcome });
    }
    let residual = StateVector::normalized(project(state, basis.targets(), vector)?)?;
    Ok(Measurement {
        outcome,
        probability,
        residual,
    })
}

/// Samples an outcome with the Born-rule probabilities and collapses.
pub fn measure_in_basis<R: Rng + ?Sized>(
    state: &StateVector,
    basis: &OrthonormalBasis,
    rng: &mut R,
) -> Result<Measurement> {
    let probs = outcome_probabilities(state, basis)?;
    let total: f64 = probs.iter().sum();
    let u: f64 = rng.random::<f64>() * total;
    let mut acc = 0.0;
    let mut outcome = probs.iter().rposition(|&p| p > 0.0).unwrap_or(0);
    for (i, p) in probs.iter().enumerate() {
        acc += p;
        if u < acc && *p > 0.0 {
            outcome = i;
            break;
        }
    }
    collapse(state, basis, outcome, &probs)
}

/// Hadamard-basis measurement; bit 0 is |+⟩ and bit 1 is |−⟩.
pub fn measure_hadamard<R: Rng + ?Sized>(
    state: &StateVector,
    qubit: usize,
    rng: &mut R,
) -> Result<(u8, StateVector)> {
    state.check_qubit(qubit)?;
    let m = measure_in_basis(state, &OrthonormalBasis::hadamard(qubit), rng)?;
    Ok((m.outcome as u8, m.residual))
}

pub fn force_hadamard(state: &StateVector, qubit: usize, bit: u8) -> Result<(f64, StateVector)> {
    state.check_qubit(qubit)?;
    let m = force_outcome(state, &OrthonormalBasis::hadamard(qubit), bit as usize)?;
    Ok((m.probability, m.residual))
}
