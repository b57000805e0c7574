//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fail.

use std::process::Command;
use std::time::Instant;

use ghzsplit::oracle::{verify_encoding, BasisAnomaly, Finding};
use ghzsplit::protocol::{alice_basis_vectors, ghz_pair};
use ghzsplit::rng::{gaussian_coefficients, trial_rng};
use ghzsplit::statevec::gram_matrix;
use ghzsplit::{
    build_channel, paper_correction_table, verify_table, Branch, Complex64, Encoding, Protocol,
    SecretSpec, StateVector, VariantId,
};

const SECRETS_PER_ROW: u64 = 100;

struct Outcome {
    passed: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn exhaustive_correctness() -> Outcome {
    let start = Instant::now();
    let mut rows = 0;
    let mut worst = f64::INFINITY;
    for v in VariantId::ALL {
        let protocol = Protocol::new(v, Encoding::Canonical).unwrap();
        for outcome in 0..v.spec().alice_basis_size {
            for bit in 0..2u8 {
                rows += 1;
                for k in 0..SECRETS_PER_ROW {
                    let spec = SecretSpec::random(v, &mut trial_rng(rows, k));
                    let t = protocol
                        .run(&spec, Branch::Forced { outcome, bit })
                        .unwrap();
                    worst = worst.min(t.fidelity);
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        rows == 72 && worst >= 1.0 - 1e-9 && secs < 10.0,
        format!("{rows} rows x {SECRETS_PER_ROW} secrets, min fidelity {worst:.15}, {secs:.2}s"),
    )
}

fn oracle_equivalence() -> Outcome {
    let mut parts = Vec::new();
    let mut passed = true;
    for (v, name) in [
        (VariantId::ThreeA, "three-a literal table"),
        (VariantId::ThreeB, "three-b literal table"),
    ] {
        let vectors = alice_basis_vectors(v, Encoding::Canonical);
        let printed = paper_correction_table(v, Encoding::PaperLiteral);
        let report = verify_encoding(v, Encoding::PaperLiteral, &vectors, &printed).unwrap();
        passed &= report.mismatch_count == 0;
        let missing: Vec<_> = report
            .rows
            .iter()
            .filter(|r| r.status == ghzsplit::RowStatus::Mismatch)
            .map(|r| format!("({},{})", r.outcome, r.charlie_bit))
            .collect();
        parts.push(format!(
            "{name}: {} match, {} phase-only, {} mismatch{}",
            report.match_count,
            report.phase_only_count,
            report.mismatch_count,
            if missing.is_empty() {
                String::new()
            } else {
                format!(" {}", missing.join(" "))
            }
        ));
    }
    let four = verify_table(VariantId::Four, Encoding::Canonical).unwrap();
    passed &= four.mismatch_count == 0 && four.rows.len() == 8;
    parts.push(format!(
        "four table (derived nu_3): {} mismatch",
        four.mismatch_count
    ));
    let literal = verify_table(VariantId::Four, Encoding::PaperLiteral).unwrap();
    let duplicate = literal
        .basis_anomalies
        .iter()
        .any(|a| matches!(a, BasisAnomaly::DuplicatedVector { i: 2, j: 3 }));
    passed &= duplicate;
    parts.push(format!("literal nu_3 duplicate reported: {duplicate}"));
    outcome(passed, parts.join("; "))
}

fn identity_deviation(vectors: &[StateVector]) -> f64 {
    let g = gram_matrix(vectors).unwrap();
    let mut worst: f64 = 0.0;
    for (i, row) in g.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let target = if i == j {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            };
            worst = worst.max((x - target).norm());
        }
    }
    worst
}

fn basis_properties() -> Outcome {
    let eta = identity_deviation(&alice_basis_vectors(VariantId::ThreeA, Encoding::Canonical));
    let eta_tilde =
        identity_deviation(&alice_basis_vectors(VariantId::ThreeB, Encoding::Canonical));
    let nu = identity_deviation(&alice_basis_vectors(VariantId::Four, Encoding::Canonical));
    let report = verify_table(VariantId::ThreeA, Encoding::Canonical).unwrap();
    let detected = report.paper_formula_inconsistencies.iter().any(|f| {
        matches!(f, Finding::EtaSignFormulaDisagreement { indices, .. } if indices.contains(&1))
    });
    outcome(
        eta <= 1e-12 && eta_tilde <= 1e-12 && nu <= 1e-12 && detected,
        format!("gram deviation eta {eta:.1e}, eta~ {eta_tilde:.1e}, nu {nu:.1e}; eta_1 sign disagreement reported: {detected}"),
    )
}

fn channel_provenance() -> Outcome {
    let pair = ghz_pair();
    let mut worst: f64 = 0.0;
    for v in VariantId::ALL {
        let permuted = pair.permute_qubits(&v.spec().channel_permutation).unwrap();
        worst = worst.max(build_channel(v).max_abs_diff(&permuted).unwrap());
    }
    let half = Complex64::new(0.5, 0.0);
    let literal = StateVector::from_kets(&[
        (half, "000000"),
        (half, "010110"),
        (half, "101001"),
        (half, "111111"),
    ])
    .unwrap();
    let three_a = build_channel(VariantId::ThreeA)
        .max_abs_diff(&literal)
        .unwrap();
    outcome(
        worst <= 1e-15 && three_a <= 1e-15,
        format!("max deviation from permuted GHZ pair {worst:.1e}, three-a literal {three_a:.1e}"),
    )
}

fn restriction_enforcement() -> Outcome {
    let mut min_mass = f64::INFINITY;
    let mut rejected = 0;
    let mut total = 0;
    for v in [VariantId::ThreeA, VariantId::ThreeB] {
        let protocol = Protocol::new(v, Encoding::Canonical).unwrap();
        for k in 0..10 {
            total += 1;
            let amplitudes = gaussian_coefficients(8, 1.0, &mut trial_rng(0xacce, k));
            let secret = StateVector::new(amplitudes).unwrap();
            min_mass = min_mass.min(protocol.out_of_span_mass(&secret).unwrap());
            let mut rng = trial_rng(0xacce, 100 + k);
            if protocol
                .run_secret_state(&secret, Branch::Sampled(&mut rng))
                .is_err()
            {
                rejected += 1;
            }
        }
    }
    outcome(
        min_mass > 1e-6 && rejected == total,
        format!(
            "{rejected}/{total} arbitrary secrets rejected, min out-of-span mass {min_mass:.3}"
        ),
    )
}

fn outcome_uniformity() -> Outcome {
    let mut worst: f64 = 0.0;
    for v in VariantId::ALL {
        let protocol = Protocol::new(v, Encoding::Canonical).unwrap();
        for k in 0..100 {
            let spec = SecretSpec::random(v, &mut trial_rng(6, k));
            let dist = protocol.outcome_distribution(&spec).unwrap();
            let expected = 1.0 / v.spec().num_rows() as f64;
            for j in dist {
                worst = worst.max((j.probability - expected).abs());
            }
        }
    }
    outcome(
        worst <= 1e-12,
        format!("max |p - 1/rows| {worst:.1e} over 3 variants x 100 secrets"),
    )
}

fn determinism() -> Outcome {
    let args = [
        "run",
        "--variant",
        "three-a",
        "--trials",
        "50",
        "--seed",
        "42",
        "--format",
        "json",
    ];
    let run = || {
        Command::new(ghzsplit_e2e::ghzsplit_binary())
            .args(args)
            .env_remove("GHZSPLIT_SEED")
            .output()
            .unwrap()
    };
    let (a, b) = (run(), run());
    let same = a.status.success() && b.status.success() && a.stdout == b.stdout;
    outcome(same, format!("{} bytes, identical: {same}", a.stdout.len()))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("exhaustive protocol correctness", exhaustive_correctness),
        ("oracle equivalence", oracle_equivalence),
        ("basis properties", basis_properties),
        ("channel provenance", channel_provenance),
        ("restriction enforcement", restriction_enforcement),
        ("outcome uniformity", outcome_uniformity),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let result = check();
        failed += usize::from(!result.passed);
        let verdict = if result.passed { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict}: {name}: {}", k + 1, result.detail);
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
