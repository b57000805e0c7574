//! The three splitting protocols: channel layouts, secret classes, Alice's
//! measurement bases, Bob's correction tables, and full protocol runs.

mod bases;
mod run;
mod secret;
mod tables;
mod variant;

pub use bases::{
    alice_basis, alice_basis_vectors, build_alice_basis, build_channel, eta_explicit_formula,
    eta_generator_formula, ghz_pair,
};
pub use run::{
    outcome_distribution, run_protocol, Branch, JointOutcome, Message, Protocol, Transcript,
};
pub use secret::{build_secret, SecretSpec};
pub use tables::{paper_correction_table, CorrectionTable, TableRow};
pub use variant::{Encoding, Party, ProtocolVariant, VariantId};
