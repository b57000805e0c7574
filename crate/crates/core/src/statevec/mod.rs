//! Dense complex state vectors, single-qubit gates, Pauli corrections and
//! projective measurement in (possibly incomplete) orthonormal bases.

mod basis;
mod gate;
mod measure;
mod pauli;
mod state;

pub use basis::{gram_matrix, OrthonormalBasis};
pub use gate::OneQubitGate;
pub use measure::{
    force_hadamard, force_outcome, measure_hadamard, measure_in_basis, outcome_probabilities,
    project, Measurement,
};
pub use pauli::{PauliFactor, PauliString};
pub use state::StateVector;
