use anyhow::Result;
use clap::{ArgGroup, Args};
use ghzsplit::{
    verify_span, verify_table, DiscrepancyReport, Encoding, Finding, SpanReport, VariantId,
    SCHEMA_VERSION,
};
use serde::Serialize;

use crate::output::{emit, to_json, Format};
use crate::{Common, VariantArg};

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("which").required(true).args(["variant", "all"])))]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    variant: Option<VariantArg>,

    /// Verify all three variants.
    #[arg(long)]
    all: bool,

    /// Random valid secrets for the span check.
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,

    #[arg(long, env = "GHZSPLIT_SEED", default_value_t = 0)]
    seed: u64,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(flatten)]
    common: Common,
}

#[derive(Serialize)]
struct VariantSection {
    variant: VariantId,
    passed: bool,
    table: DiscrepancyReport,
    span: SpanReport,
}

#[derive(Serialize)]
struct VerifyDoc {
    schema_version: u32,
    command: &'static str,
    encoding: Encoding,
    seed: u64,
    passed: bool,
    variants: Vec<VariantSection>,
}

pub fn execute(args: &VerifyArgs) -> Result<bool> {
    let encoding = args.common.encoding();
    let variants: Vec<VariantId> = match args.variant {
        Some(v) if !args.all => vec![v.into()],
        _ => VariantId::ALL.to_vec(),
    };
    let sections = variants
        .into_iter()
        .map(|variant| {
            let table = verify_table(variant, encoding)?;
            let span = verify_span(variant, encoding, args.trials as usize, args.seed)?;
            Ok(VariantSection {
                variant,
                passed: table.passed() && span.passed(),
                table,
                span,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let passed = sections.iter().all(|s| s.passed);
    let doc = VerifyDoc {
        schema_version: SCHEMA_VERSION,
        command: "verify",
        encoding,
        seed: args.seed,
        passed,
        variants: sections,
    };
    let body = match args.format {
        Format::Json => to_json(&doc)?,
        Format::Csv => render_csv(&doc)?,
        Format::Text => render_text(&doc),
    };
    emit(args.common.emit.as_deref(), &body)?;
    Ok(passed)
}

fn render_csv(doc: &VerifyDoc) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "variant",
        "outcome",
        "charlie_bit",
        "table_correction",
        "status",
        "derived",
    ])?;
    for section in &doc.variants {
        for r in &section.table.rows {
            let derived: Vec<String> = r.derived.iter().map(|p| p.labels()).collect();
            w.write_record([
                section.variant.cli_name().to_string(),
                r.outcome.to_string(),
                r.charlie_bit.to_string(),
                r.table_correction.labels(),
                serde_json::to_value(r.status)?
                    .as_str()
                    .unwrap_or_default()
                    .to_string(),
                derived.join("; "),
            ])?;
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn describe(finding: &Finding) -> String {
    match finding {
        Finding::EtaSignFormulaDisagreement {
            indices,
            explicit_equals_generator,
        } => {
            let pairs: Vec<String> = indices
                .iter()
                .zip(explicit_equals_generator)
                .map(|(i, g)| match g {
                    Some(g) => format!("{i}->{g}"),
                    None => format!("{i}->?"),
                })
                .collect();
            format!("explicit η sign formula differs from generator form (explicit index -> generator index): {}", pairs.join(" "))
        }
        Finding::DuplicatedNuVector { i, j } => format!("printed ν{i} and ν{j} are identical"),
        Finding::TableRowsDisagreeWithChannel { rows } => {
            let rows: Vec<String> = rows.iter().map(|(o, b)| format!("({o},{b})")).collect();
            format!(
                "printed table rows that fail against the channel: {}",
                rows.join(" ")
            )
        }
    }
}

fn render_text(doc: &VerifyDoc) -> String {
    let mut out = String::new();
    for s in &doc.variants {
        let t = &s.table;
        out += &format!(
            "{} [{:?}]: {} rows, {} MATCH, {} PHASE_ONLY_MATCH, {} MISMATCH; span valid dev {:.2e}, invalid min mass {:.3e}: {}\n",
            s.variant,
            doc.encoding,
            t.rows.len(),
            t.match_count,
            t.phase_only_count,
            t.mismatch_count,
            s.span.valid_max_deviation,
            s.span.invalid_min_out_of_span_mass,
            if s.passed { "PASS" } else { "FAIL" }
        );
        for a in &t.basis_anomalies {
            out += &format!("  basis anomaly: {a:?}\n");
        }
        for f in &t.paper_formula_inconsistencies {
            out += &format!("  finding: {}\n", describe(f));
        }
        for r in t
            .rows
            .iter()
            .filter(|r| r.status == ghzsplit::RowStatus::Mismatch)
        {
            let derived: Vec<String> = r.derived.iter().map(|p| p.to_string()).collect();
            out += &format!(
                "  MISMATCH ({}, {}): table {} ; derived {}\n",
                r.outcome,
                r.charlie_bit,
                r.table_correction,
                derived.join(" | ")
            );
        }
    }
    out
}
