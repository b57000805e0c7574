use anyhow::Result;
use clap::{Args, ValueEnum};
use ghzsplit::protocol::alice_basis_vectors;
use ghzsplit::{
    paper_correction_table, Complex64, Encoding, PauliString, VariantId, SCHEMA_VERSION,
};
use serde::Serialize;

use crate::output::{emit, format_complex, to_json, Format};
use crate::{Common, VariantArg};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    Basis,
    Table,
}

#[derive(Args, Debug)]
pub struct ExportArgs {
    #[arg(long, value_enum)]
    variant: VariantArg,

    #[arg(long, value_enum)]
    what: What,

    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(flatten)]
    common: Common,
}

#[derive(Serialize)]
struct BasisRow {
    index: usize,
    label: String,
    amplitudes: Vec<Complex64>,
}

#[derive(Serialize)]
struct TableRowOut {
    outcome: usize,
    alice_cbits: String,
    charlie_bit: u8,
    charlie_state: &'static str,
    correction: PauliString,
    operator: String,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Payload {
    Basis {
        targets: Vec<usize>,
        vectors: Vec<BasisRow>,
    },
    Table {
        rows: Vec<TableRowOut>,
    },
}

#[derive(Serialize)]
struct ExportDoc {
    schema_version: u32,
    command: &'static str,
    what: &'static str,
    variant: VariantId,
    encoding: Encoding,
    #[serde(flatten)]
    payload: Payload,
}

fn vector_label(variant: VariantId, index: usize) -> String {
    match variant {
        VariantId::ThreeA => format!("eta_{index}"),
        VariantId::ThreeB => format!("eta_tilde_{index}"),
        VariantId::Four => format!("nu_{index}"),
    }
}

pub fn execute(args: &ExportArgs) -> Result<bool> {
    let variant = VariantId::from(args.variant);
    let encoding = args.common.encoding();
    let payload = match args.what {
        What::Basis => Payload::Basis {
            targets: variant.spec().alice_targets(),
            vectors: alice_basis_vectors(variant, encoding)
                .into_iter()
                .enumerate()
                .map(|(index, v)| BasisRow {
                    index,
                    label: vector_label(variant, index),
                    amplitudes: v.amplitudes().to_vec(),
                })
                .collect(),
        },
        What::Table => Payload::Table {
            rows: paper_correction_table(variant, encoding)
                .rows
                .into_iter()
                .map(|r| TableRowOut {
                    outcome: r.outcome,
                    alice_cbits: format!("{:04b}", r.outcome),
                    charlie_bit: r.charlie_bit,
                    charlie_state: if r.charlie_bit == 0 { "+" } else { "-" },
                    operator: r.correction.to_string(),
                    correction: r.correction,
                })
                .collect(),
        },
    };
    let doc = ExportDoc {
        schema_version: SCHEMA_VERSION,
        command: "export",
        what: match args.what {
            What::Basis => "basis",
            What::Table => "table",
        },
        variant,
        encoding,
        payload,
    };
    let body = match args.format {
        Format::Json => to_json(&doc)?,
        Format::Csv => render_csv(&doc)?,
        Format::Text => render_text(&doc),
    };
    emit(args.common.emit.as_deref(), &body)?;
    Ok(true)
}

fn render_csv(doc: &ExportDoc) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    match &doc.payload {
        Payload::Basis { vectors, .. } => {
            let width = vectors.first().map_or(0, |v| v.amplitudes.len());
            let mut header = vec!["index".to_string(), "label".to_string()];
            header.extend((0..width).map(|k| format!("a{k}")));
            w.write_record(&header)?;
            for v in vectors {
                let mut rec = vec![v.index.to_string(), v.label.clone()];
                rec.extend(v.amplitudes.iter().map(|a| format_complex(*a)));
                w.write_record(&rec)?;
            }
        }
        Payload::Table { rows } => {
            w.write_record([
                "outcome",
                "alice_cbits",
                "charlie_bit",
                "correction",
                "operator",
            ])?;
            for r in rows {
                w.write_record([
                    r.outcome.to_string(),
                    r.alice_cbits.clone(),
                    r.charlie_bit.to_string(),
                    r.correction.labels(),
                    r.operator.clone(),
                ])?;
            }
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn render_text(doc: &ExportDoc) -> String {
    let mut out = String::new();
    match &doc.payload {
        Payload::Basis { vectors, .. } => {
            for v in vectors {
                let state = ghzsplit::StateVector::normalized(v.amplitudes.clone())
                    .map(|s| s.to_string())
                    .unwrap_or_else(|_| "0".into());
                out += &format!("{:<14} {}\n", v.label, state);
            }
        }
        Payload::Table { rows } => {
            for r in rows {
                out += &format!(
                    "{:>2} {} |{}⟩  {}\n",
                    r.outcome, r.alice_cbits, r.charlie_state, r.operator
                );
            }
        }
    }
    out
}
