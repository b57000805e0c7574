//! Independent verification: brute-force derivation of Bob's corrections,
//! basis sanity checks, and span checks for the restricted secret classes.
//!
//! Nothing here reads a correction table to produce its answers; tables are
//! only ever the thing being checked.

mod derive;
mod report;
mod span;

pub use derive::{class_stabilizer, derive_corrections, derive_corrections_for, BranchStates};
pub use report::{
    basis_anomalies, verify_encoding, verify_table, BasisAnomaly, DiscrepancyReport, Finding,
    RowReport, RowStatus,
};
pub use span::{verify_span, SpanReport};

/// Seed for the random secrets the oracle mixes into every row check.
pub const ORACLE_SEED: u64 = 0x5eed_0fc0_ffee;

/// Random secrets used per row in addition to the spanning set.
pub const ORACLE_RANDOM_SECRETS: usize = 10;
