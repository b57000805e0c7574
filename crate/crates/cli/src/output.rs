use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use clap::ValueEnum;
use ghzsplit::{Complex64, SCHEMA_VERSION};
use serde::Serialize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

/// Writes `body` to `path`, or to stdout when no path is given.
pub fn emit(path: Option<&Path>, body: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, body).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// `re`, `re+imj` or `re-imj`.
pub fn format_complex(c: Complex64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else if c.im.is_sign_negative() {
        format!("{}-{}j", c.re, -c.im)
    } else {
        format!("{}+{}j", c.re, c.im)
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
}

#[derive(Serialize)]
struct ErrorDoc<'a> {
    schema_version: u32,
    error: ErrorBody<'a>,
}

/// Structured error: a JSON document on stdout for JSON output, and a plain
/// message on stderr in every case.
pub fn report_error(format: Format, err: &anyhow::Error) {
    let kind = err
        .chain()
        .find_map(|e| e.downcast_ref::<ghzsplit::Error>())
        .map_or("usage", |e| e.kind());
    eprintln!("error: {err:#}");
    if format == Format::Json {
        let doc = ErrorDoc {
            schema_version: SCHEMA_VERSION,
            error: ErrorBody {
                kind,
                message: format!("{err:#}"),
            },
        };
        if let Ok(body) = to_json(&doc) {
            print!("{body}");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_formatting_round_trips_through_num_complex() {
        for c in [
            Complex64::new(0.5, 0.0),
            Complex64::new(-0.25, 0.75),
            Complex64::new(1.0, -2.0),
        ] {
            let s = format_complex(c);
            assert_eq!(s.parse::<Complex64>().unwrap(), c, "{s}");
        }
    }
}
