use num_complex::Complex64;

use super::state::StateVector;
use crate::{Error, Result, ALGEBRA_TOL};

/// Orthonormal vectors on an ordered subset of qubits. The vectors may span
/// only a subspace of the 2^k-dimensional target space.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthonormalBasis {
    targets: Vec<usize>,
    vectors: Vec<StateVector>,
}

impl OrthonormalBasis {
    pub fn new(targets: Vec<usize>, vectors: Vec<StateVector>) -> Result<Self> {
        let width = targets.len();
        let max = targets.iter().copied().max().map_or(0, |m| m + 1);
        super::state::check_distinct(&targets, max)?;
        for v in &vectors {
            if v.num_qubits() != width {
                return Err(Error::DimensionMismatch {
                    left: v.num_qubits(),
                    right: width,
                });
            }
        }
        let gram = gram_matrix(&vectors)?;
        for (i, row) in gram.iter().enumerate() {
            for (j, value) in row.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                if (value - target).norm() > ALGEBRA_TOL {
                    return Err(Error::NotOrthonormal {
                        i,
                        j,
                        value: *value,
                    });
                }
            }
        }
        Ok(Self { targets, vectors })
    }

    /// {|0…0⟩, …, |1…1⟩} on `targets`.
    pub fn computational(targets: Vec<usize>) -> Self {
        let k = targets.len();
        let vectors = (0..1usize << k)
            .map(|i| StateVector::basis_state(k, i))
            .collect();
        Self { targets, vectors }
    }

    /// {|+⟩, |−⟩} on one qubit; outcome 0 is |+⟩.
    pub fn hadamard(qubit: usize) -> Self {
        Self {
            targets: vec![qubit],
            vectors: vec![StateVector::plus(), StateVector::minus()],
        }
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn vectors(&self) -> &[StateVector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// True when the vectors span the full target space.
    pub fn is_complete(&self) -> bool {
        self.vectors.len() == 1 << self.targets.len()
    }
}

/// Gram matrix ⟨v_i|v_j⟩ of a list of equally sized vectors.
pub fn gram_matrix(vectors: &[StateVector]) -> Result<Vec<Vec<Complex64>>> {
    vectors
        .iter()
        .map(|a| vectors.iter().map(|b| a.inner(b)).collect())
        .collect()
}
