use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::derive::{class_stabilizer, BranchStates};
use crate::protocol::{
    alice_basis_vectors, eta_explicit_formula, eta_generator_formula, paper_correction_table,
    CorrectionTable, Encoding, VariantId,
};
use crate::statevec::{gram_matrix, PauliString, StateVector};
use crate::{Error, Result, ALGEBRA_TOL, SCHEMA_VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RowStatus {
    /// The table's correction restores the secret amplitude for amplitude.
    Match,
    /// The table's correction restores the secret up to a global phase.
    PhaseOnlyMatch,
    /// The table's correction does not restore the secret.
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RowReport {
    pub outcome: usize,
    pub charlie_bit: u8,
    pub table_correction: PauliString,
    pub status: RowStatus,
    /// Every correction found by exhaustive search.
    pub derived: Vec<PauliString>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BasisAnomaly {
    DuplicatedVector { i: usize, j: usize },
    NonOrthogonal { i: usize, j: usize, overlap: f64 },
    NotNormalized { i: usize, norm_sqr: f64 },
}

/// Inconsistencies between the printed formulas/tables and what the channel
/// actually produces.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Finding {
    /// The explicit (−1)^{i₁}, (−1)^{i₀} expansion of η_i differs from the
    /// σz-generator form. `explicit_equals_generator` gives, for each
    /// disagreeing index, the generator index the explicit vector equals.
    EtaSignFormulaDisagreement {
        indices: Vec<usize>,
        explicit_equals_generator: Vec<Option<usize>>,
    },
    /// Two printed ν vectors are identical.
    DuplicatedNuVector { i: usize, j: usize },
    /// Printed table rows whose correction fails against the canonical basis.
    TableRowsDisagreeWithChannel { rows: Vec<(usize, u8)> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancyReport {
    pub schema_version: u32,
    pub variant: VariantId,
    pub encoding: Encoding,
    pub rows: Vec<RowReport>,
    pub match_count: usize,
    pub phase_only_count: usize,
    pub mismatch_count: usize,
    pub basis_anomalies: Vec<BasisAnomaly>,
    pub paper_formula_inconsistencies: Vec<Finding>,
    /// Pauli strings acting as a single scalar on the secret class.
    pub class_stabilizer: Vec<PauliString>,
    /// True when every row has exactly one derived solution.
    pub solutions_unique: bool,
    /// True when every row's solution count equals the stabilizer size.
    pub solutions_form_stabilizer_cosets: bool,
}

impl DiscrepancyReport {
    pub fn passed(&self) -> bool {
        self.mismatch_count == 0 && self.basis_anomalies.is_empty()
    }
}

/// Gram-matrix defects of a candidate basis.
pub fn basis_anomalies(vectors: &[StateVector]) -> Result<Vec<BasisAnomaly>> {
    let gram = gram_matrix(vectors)?;
    let mut out = Vec::new();
    for (i, row) in gram.iter().enumerate() {
        let norm_sqr = row[i].re;
        if (row[i] - 1.0).norm() > ALGEBRA_TOL {
            out.push(BasisAnomaly::NotNormalized { i, norm_sqr });
        }
        for (j, value) in row.iter().enumerate().skip(i + 1) {
            let overlap = value.norm();
            if overlap <= ALGEBRA_TOL {
                continue;
            }
            let duplicate = vectors[i]
                .fidelity(&vectors[j])
                .is_ok_and(|f| (f - 1.0).abs() <= ALGEBRA_TOL);
            out.push(if duplicate {
                BasisAnomaly::DuplicatedVector { i, j }
            } else {
                BasisAnomaly::NonOrthogonal { i, j, overlap }
            });
        }
    }
    Ok(out)
}

fn classify(states: Option<&BranchStates>, derived: &[PauliString], p: &PauliString) -> RowStatus {
    let Some(states) = states.filter(|_| derived.contains(p)) else {
        return RowStatus::Mismatch;
    };
    if states.restores_exactly(p) {
        RowStatus::Match
    } else {
        RowStatus::PhaseOnlyMatch
    }
}

/// Branch states and solutions per row. A row that some test secret can
/// never reach has no states and no solutions.
fn derive_all(
    variant: VariantId,
    vectors: &[StateVector],
) -> Result<Vec<(Option<BranchStates>, Vec<PauliString>)>> {
    (0..vectors.len() * 2)
        .into_par_iter()
        .map(
            |k| match BranchStates::compute(variant, &vectors[k / 2], (k % 2) as u8) {
                Ok(states) => {
                    let derived = states.solutions();
                    Ok((Some(states), derived))
                }
                Err(Error::ZeroProbability { .. }) => Ok((None, Vec::new())),
                Err(e) => Err(e),
            },
        )
        .collect()
}

/// Compares `table` against exhaustive derivation under `vectors`.
pub fn verify_encoding(
    variant: VariantId,
    encoding: Encoding,
    vectors: &[StateVector],
    table: &CorrectionTable,
) -> Result<DiscrepancyReport> {
    let derived = derive_all(variant, vectors)?;
    let mut rows = Vec::with_capacity(derived.len());
    for (k, (states, solutions)) in derived.into_iter().enumerate() {
        let (outcome, charlie_bit) = (k / 2, (k % 2) as u8);
        let table_correction = table.lookup(outcome, charlie_bit)?.clone();
        let status = classify(states.as_ref(), &solutions, &table_correction);
        rows.push(RowReport {
            outcome,
            charlie_bit,
            table_correction,
            status,
            derived: solutions,
        });
    }
    let count = |s: RowStatus| rows.iter().filter(|r| r.status == s).count();
    let stabilizer = class_stabilizer(variant);
    Ok(DiscrepancyReport {
        schema_version: SCHEMA_VERSION,
        variant,
        encoding,
        match_count: count(RowStatus::Match),
        phase_only_count: count(RowStatus::PhaseOnlyMatch),
        mismatch_count: count(RowStatus::Mismatch),
        solutions_unique: rows.iter().all(|r| r.derived.len() == 1),
        solutions_form_stabilizer_cosets: rows.iter().all(|r| r.derived.len() == stabilizer.len()),
        rows,
        basis_anomalies: basis_anomalies(vectors)?,
        paper_formula_inconsistencies: Vec::new(),
        class_stabilizer: stabilizer,
    })
}

fn eta_finding(variant: VariantId) -> Option<Finding> {
    let generated: Vec<_> = (0..16).map(|i| eta_generator_formula(variant, i)).collect();
    let mut indices = Vec::new();
    let mut equals = Vec::new();
    for i in 0..16 {
        let explicit = eta_explicit_formula(variant, i);
        if explicit
            .max_abs_diff(&generated[i])
            .unwrap_or(f64::INFINITY)
            <= ALGEBRA_TOL
        {
            continue;
        }
        indices.push(i);
        equals.push(
            generated
                .iter()
                .position(|g| g.max_abs_diff(&explicit).unwrap_or(f64::INFINITY) <= ALGEBRA_TOL),
        );
    }
    (!indices.is_empty()).then_some(Finding::EtaSignFormulaDisagreement {
        indices,
        explicit_equals_generator: equals,
    })
}

fn nu_findings() -> Vec<Finding> {
    let literal = alice_basis_vectors(VariantId::Four, Encoding::PaperLiteral);
    let mut out = Vec::new();
    for i in 0..literal.len() {
        for j in i + 1..literal.len() {
            if literal[i]
                .fidelity(&literal[j])
                .is_ok_and(|f| (f - 1.0).abs() <= ALGEBRA_TOL)
            {
                out.push(Finding::DuplicatedNuVector { i, j });
            }
        }
    }
    out
}

fn literal_table_finding(
    variant: VariantId,
    canonical_rows: Option<&[RowReport]>,
) -> Result<Option<Finding>> {
    let literal = paper_correction_table(variant, Encoding::PaperLiteral);
    let rows = match canonical_rows {
        Some(rows) => rows
            .iter()
            .filter(|r| {
                let p = literal
                    .lookup(r.outcome, r.charlie_bit)
                    .expect("same shape");
                !r.derived.contains(p)
            })
            .map(|r| (r.outcome, r.charlie_bit))
            .collect(),
        None => {
            let vectors = alice_basis_vectors(variant, Encoding::Canonical);
            derive_all(variant, &vectors)?
                .iter()
                .enumerate()
                .filter(|(k, (_, derived))| {
                    let p = literal.lookup(k / 2, (k % 2) as u8).expect("same shape");
                    !derived.contains(p)
                })
                .map(|(k, _)| (k / 2, (k % 2) as u8))
                .collect::<Vec<_>>()
        }
    };
    Ok((!rows.is_empty()).then_some(Finding::TableRowsDisagreeWithChannel { rows }))
}

/// Full row-by-row verification of a variant's printed table under the given
/// encoding, plus structured findings about the printed formulas.
pub fn verify_table(variant: VariantId, encoding: Encoding) -> Result<DiscrepancyReport> {
    let vectors = alice_basis_vectors(variant, encoding);
    let table = paper_correction_table(variant, encoding);
    let mut report = verify_encoding(variant, encoding, &vectors, &table)?;

    let mut findings = Vec::new();
    match variant {
        VariantId::ThreeA | VariantId::ThreeB => findings.extend(eta_finding(variant)),
        VariantId::Four => findings.extend(nu_findings()),
    }
    let canonical_rows = (encoding == Encoding::Canonical).then_some(report.rows.as_slice());
    findings.extend(literal_table_finding(variant, canonical_rows)?);
    report.paper_formula_inconsistencies = findings;
    Ok(report)
}
