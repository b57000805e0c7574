use std::collections::BTreeMap;

use anyhow::{bail, Context, Result};
use clap::Args;
use ghzsplit::rng::trial_rng;
use ghzsplit::{
    Branch, Complex64, Protocol, SecretSpec, StateVector, Transcript, VariantId, SCHEMA_VERSION,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::output::{emit, to_json, Format};
use crate::{Common, VariantArg};

#[derive(Args, Debug)]
pub struct RunArgs {
    #[arg(long, value_enum)]
    variant: VariantArg,

    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,

    /// Master seed; each trial draws from its own stream of this seed.
    #[arg(long, env = "GHZSPLIT_SEED", default_value_t = 0)]
    seed: u64,

    /// Comma-separated coefficients such as "0.5+0.5j,0.5,0,-0.5j". Four
    /// (three-qubit variants) or two (four-qubit variant) values give a secret
    /// in the restricted class; 2^n values give raw secret amplitudes.
    #[arg(long, allow_hyphen_values = true)]
    secret: Option<String>,

    /// Force Alice's outcome and Charlie's bit, e.g. "5,1".
    #[arg(long, value_parser = parse_forced)]
    forced: Option<(usize, u8)>,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// A run passes when every fidelity is at least 1 - tolerance. Also the
    /// tolerance for the secret's normalization check.
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,

    #[command(flatten)]
    common: Common,
}

fn parse_forced(s: &str) -> Result<(usize, u8), String> {
    let (i, b) = s.split_once(',').ok_or("expected OUTCOME,BIT")?;
    let i = i.trim().parse::<usize>().map_err(|e| e.to_string())?;
    let b = b.trim().parse::<u8>().map_err(|e| e.to_string())?;
    if b > 1 {
        return Err("Charlie's bit must be 0 or 1".into());
    }
    Ok((i, b))
}

#[derive(Clone, Debug)]
enum SecretInput {
    Class(SecretSpec),
    Raw(StateVector),
}

fn parse_coefficients(text: &str) -> Result<Vec<Complex64>> {
    text.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<Complex64>()
                .with_context(|| format!("invalid complex coefficient {t:?}"))
        })
        .collect()
}

fn parse_secret(variant: VariantId, text: &str, tol: f64) -> Result<SecretInput> {
    let coefficients = parse_coefficients(text)?;
    let raw_len = 1usize << variant.spec().num_secret_qubits;
    if coefficients.len() == raw_len {
        let norm: f64 = coefficients.iter().map(|c| c.norm_sqr()).sum();
        if (norm - 1.0).abs() > tol {
            return Err(ghzsplit::Error::Normalization {
                expected: 1.0,
                actual: norm,
                deficit: (norm - 1.0).abs(),
            }
            .into());
        }
        return Ok(SecretInput::Raw(StateVector::normalized(coefficients)?));
    }
    Ok(SecretInput::Class(SecretSpec::with_tolerance(
        variant,
        coefficients,
        tol,
    )?))
}

#[derive(Serialize)]
struct TrialRecord {
    trial: u64,
    #[serde(flatten)]
    transcript: Transcript,
}

#[derive(Serialize)]
struct HistogramEntry {
    outcome: usize,
    charlie_bit: u8,
    count: u64,
}

#[derive(Serialize)]
struct Summary {
    trials: u64,
    min_fidelity: f64,
    mean_fidelity: f64,
    outcome_histogram: Vec<HistogramEntry>,
    passed: bool,
}

#[derive(Serialize)]
struct RunDoc {
    schema_version: u32,
    command: &'static str,
    variant: VariantId,
    encoding: ghzsplit::Encoding,
    seed: u64,
    tolerance: f64,
    transcripts: Vec<TrialRecord>,
    summary: Summary,
}

pub fn execute(args: &RunArgs) -> Result<bool> {
    let variant = VariantId::from(args.variant);
    let protocol = Protocol::new(variant, args.common.encoding())?;
    let secret = args
        .secret
        .as_deref()
        .map(|s| parse_secret(variant, s, args.tolerance))
        .transpose()?;
    if let Some((outcome, _)) = args.forced {
        if outcome >= protocol.basis().len() {
            bail!(ghzsplit::Error::NoSuchOutcome(outcome));
        }
    }

    let transcripts = (0..args.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(args.seed, trial);
            let secret = match &secret {
                Some(s) => s.clone(),
                None => SecretInput::Class(SecretSpec::random(variant, &mut rng)),
            };
            let branch = match args.forced {
                Some((outcome, bit)) => Branch::Forced { outcome, bit },
                None => Branch::Sampled(&mut rng),
            };
            let transcript = match &secret {
                SecretInput::Class(spec) => protocol.run(spec, branch),
                SecretInput::Raw(state) => protocol.run_secret_state(state, branch),
            }?;
            Ok(TrialRecord { trial, transcript })
        })
        .collect::<Result<Vec<_>>>()?;

    let summary = summarize(&protocol, &transcripts, args.tolerance);
    let passed = summary.passed;
    let doc = RunDoc {
        schema_version: SCHEMA_VERSION,
        command: "run",
        variant,
        encoding: protocol.encoding(),
        seed: args.seed,
        tolerance: args.tolerance,
        transcripts,
        summary,
    };
    let body = match args.format {
        Format::Json => to_json(&doc)?,
        Format::Csv => render_csv(&doc)?,
        Format::Text => render_text(&doc),
    };
    emit(args.common.emit.as_deref(), &body)?;
    Ok(passed)
}

fn summarize(protocol: &Protocol, records: &[TrialRecord], tolerance: f64) -> Summary {
    let mut counts: BTreeMap<(usize, u8), u64> = (0..protocol.basis().len())
        .flat_map(|o| [(o, 0u8), (o, 1u8)])
        .map(|k| (k, 0))
        .collect();
    for r in records {
        *counts
            .entry((r.transcript.alice_outcome, r.transcript.charlie_bit))
            .or_default() += 1;
    }
    let fidelities: Vec<f64> = records.iter().map(|r| r.transcript.fidelity).collect();
    let min_fidelity = fidelities.iter().copied().fold(f64::INFINITY, f64::min);
    let mean_fidelity = fidelities.iter().sum::<f64>() / fidelities.len() as f64;
    Summary {
        trials: records.len() as u64,
        min_fidelity,
        mean_fidelity,
        outcome_histogram: counts
            .into_iter()
            .map(|((outcome, charlie_bit), count)| HistogramEntry {
                outcome,
                charlie_bit,
                count,
            })
            .collect(),
        passed: fidelities.iter().all(|&f| f >= 1.0 - tolerance),
    }
}

fn render_csv(doc: &RunDoc) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "trial",
        "alice_outcome",
        "alice_cbits",
        "charlie_bit",
        "correction",
        "fidelity",
    ])?;
    for r in &doc.transcripts {
        let t = &r.transcript;
        w.write_record([
            r.trial.to_string(),
            t.alice_outcome.to_string(),
            t.alice_cbits.clone(),
            t.charlie_bit.to_string(),
            t.correction.to_string(),
            t.fidelity.to_string(),
        ])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn render_text(doc: &RunDoc) -> String {
    let mut out = String::new();
    for r in &doc.transcripts {
        let t = &r.transcript;
        out += &format!(
            "trial {:>4}: alice {:>2} ({}) charlie {} -> {}  fidelity {:.12}\n",
            r.trial, t.alice_outcome, t.alice_cbits, t.charlie_bit, t.correction, t.fidelity
        );
        if doc.transcripts.len() == 1 {
            out += &format!(
                "  bob before: {}\n  bob after:  {}\n",
                t.bob_state_before, t.bob_state_after
            );
        }
    }
    let s = &doc.summary;
    out += &format!(
        "{} {} trials, min fidelity {:.12}, mean fidelity {:.12}: {}\n",
        doc.variant,
        s.trials,
        s.min_fidelity,
        s.mean_fidelity,
        if s.passed { "PASS" } else { "FAIL" }
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forced_parsing() {
        assert_eq!(parse_forced("5,1"), Ok((5, 1)));
        assert!(parse_forced("5,2").is_err());
        assert!(parse_forced("5").is_err());
    }

    #[test]
    fn secret_parsing() {
        match parse_secret(VariantId::ThreeA, "1,0,0,0", 1e-9).unwrap() {
            SecretInput::Class(s) => assert_eq!(s.coefficients[0], Complex64::new(1.0, 0.0)),
            other => panic!("{other:?}"),
        }
        match parse_secret(VariantId::Four, "0.5+0.5j, 0-0j", 1e-9).unwrap() {
            SecretInput::Class(s) => assert_eq!(s.coefficients[0], Complex64::new(0.5, 0.5)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_secret(VariantId::ThreeA, "0.6,0.8,0,0,0,0,0,0", 1e-9).unwrap(),
            SecretInput::Raw(_)
        ));
        let err = parse_secret(VariantId::Four, "1+0j,0+0j", 1e-9).unwrap_err();
        assert!(matches!(
            err.downcast_ref::<ghzsplit::Error>(),
            Some(ghzsplit::Error::Normalization { deficit, .. }) if *deficit == 0.5
        ));
        assert!(parse_secret(VariantId::Four, "abc,0", 1e-9).is_err());
    }
}
