//! `ghzsplit`: run, verify and export the GHZ-pair information splitting
//! protocols.

mod export;
mod output;
mod run;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ghzsplit::{Encoding, VariantId};

use crate::output::report_error;

#[derive(Parser, Debug)]
#[command(
    name = "ghzsplit",
    version,
    about = "Quantum information splitting over a pair of GHZ states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Execute protocol runs and report transcripts plus a fidelity summary.
    Run(run::RunArgs),
    /// Re-derive every correction by brute force and diff against the tables.
    Verify(verify::VerifyArgs),
    /// Dump Alice's measurement basis or Bob's correction table.
    Export(export::ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    ThreeA,
    ThreeB,
    Four,
}

impl From<VariantArg> for VariantId {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::ThreeA => VariantId::ThreeA,
            VariantArg::ThreeB => VariantId::ThreeB,
            VariantArg::Four => VariantId::Four,
        }
    }
}

/// Options shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Use the formulas and tables exactly as printed instead of the
    /// canonical encodings.
    #[arg(long)]
    paper_literal: bool,

    /// Write output to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    emit: Option<PathBuf>,
}

impl Common {
    pub fn encoding(&self) -> Encoding {
        if self.paper_literal {
            Encoding::PaperLiteral
        } else {
            Encoding::Canonical
        }
    }
}

/// Exit status for a completed command whose checks failed.
pub const EXIT_CHECK_FAILED: u8 = 1;
/// Exit status for invalid input or runtime errors.
pub const EXIT_ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (format, result) = match &cli.command {
        Command::Run(args) => (args.format, run::execute(args)),
        Command::Verify(args) => (args.format, verify::execute(args)),
        Command::Export(args) => (args.format, export::execute(args)),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_CHECK_FAILED),
        Err(err) => {
            report_error(format, &err);
            ExitCode::from(EXIT_ERROR)
        }
    }
}
