use num_complex::Complex64;

use crate::{Error, Result, ALGEBRA_TOL};

/// A 2×2 unitary acting on one qubit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OneQubitGate {
    matrix: [[Complex64; 2]; 2],
}

const fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

impl OneQubitGate {
    pub fn new(matrix: [[Complex64; 2]; 2]) -> Result<Self> {
        let gate = Self { matrix };
        let dev = gate.unitarity_deviation();
        if dev > ALGEBRA_TOL {
            return Err(Error::NotUnitary(dev));
        }
        Ok(gate)
    }

    pub const fn identity() -> Self {
        Self {
            matrix: [[re(1.0), re(0.0)], [re(0.0), re(1.0)]],
        }
    }

    pub const fn pauli_x() -> Self {
        Self {
            matrix: [[re(0.0), re(1.0)], [re(1.0), re(0.0)]],
        }
    }

    pub const fn pauli_y() -> Self {
        Self {
            matrix: [
                [re(0.0), Complex64::new(0.0, -1.0)],
                [Complex64::new(0.0, 1.0), re(0.0)],
            ],
        }
    }

    pub const fn pauli_z() -> Self {
        Self {
            matrix: [[re(1.0), re(0.0)], [re(0.0), re(-1.0)]],
        }
    }

    /// iσy, stored exactly as the real matrix [[0, 1], [-1, 0]].
    pub const fn i_pauli_y() -> Self {
        Self {
            matrix: [[re(0.0), re(1.0)], [re(-1.0), re(0.0)]],
        }
    }

    pub const fn hadamard() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self {
            matrix: [[re(h), re(h)], [re(h), re(-h)]],
        }
    }

    pub fn matrix(&self) -> &[[Complex64; 2]; 2] {
        &self.matrix
    }

    /// Max entry of |G†G − I|.
    pub fn unitarity_deviation(&self) -> f64 {
        let m = &self.matrix;
        let mut dev: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                let entry: Complex64 = (0..2).map(|k| m[k][i].conj() * m[k][j]).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                dev = dev.max((entry - target).norm());
            }
        }
        dev
    }

    pub fn mul(&self, other: &OneQubitGate) -> OneQubitGate {
        let (a, b) = (&self.matrix, &other.matrix);
        let mut matrix = [[re(0.0); 2]; 2];
        for (i, row) in matrix.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        OneQubitGate { matrix }
    }
}
