//! Dense state-vector simulation of three quantum information splitting
//! protocols that share a pair of GHZ states between Alice, Bob and Charlie,
//! together with an exhaustive oracle that re-derives every correction table
//! from first principles.
//!
//! Qubit indexing is big-endian throughout: the leftmost symbol of a ket
//! string is qubit 0 and the most significant bit of the amplitude index.

pub mod error;
pub mod oracle;
pub mod protocol;
pub mod rng;
pub mod statevec;

pub use error::{Error, Result};
pub use oracle::{
    derive_corrections, verify_span, verify_table, DiscrepancyReport, Finding, RowStatus,
    SpanReport,
};
pub use protocol::{
    build_alice_basis, build_channel, build_secret, outcome_distribution, paper_correction_table,
    Branch, CorrectionTable, Encoding, JointOutcome, Protocol, ProtocolVariant, SecretSpec,
    Transcript, VariantId,
};
pub use statevec::{OneQubitGate, OrthonormalBasis, PauliFactor, PauliString, StateVector};

pub use num_complex::Complex64;

/// Tolerance for algebraic identities (norms, Gram matrices, unitarity).
pub const ALGEBRA_TOL: f64 = 1e-12;

/// Tolerance for end-to-end protocol fidelities and probability sums.
pub const FIDELITY_TOL: f64 = 1e-9;

/// JSON schema version stamped on every serialized report.
pub const SCHEMA_VERSION: u32 = 1;
