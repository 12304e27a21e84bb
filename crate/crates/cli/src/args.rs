use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use ellmirror_core::Suite;

#[derive(Debug, Parser)]
#[command(
    name = "ellmirror",
    version,
    about = "Exact genus-one generating functions of Calabi-Yau complete intersections"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one series to order `qmax`.
    Compute {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum)]
        what: What,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run verification suites.
    Verify {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_delimiter = ',', default_values = ["pf", "popa", "loop", "assembly"])]
        suites: Vec<Suite>,
        /// Order of the loop and assembly suites; defaults to min(qmax, 8).
        #[arg(long)]
        loop_qmax: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Table of genus-one Gromov-Witten invariants `N_{1,d}`, `d = 1..=qmax`.
    Table {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

impl Command {
    pub fn output(&self) -> Option<&Path> {
        match self {
            Command::Compute { out, .. }
            | Command::Verify { out, .. }
            | Command::Table { out, .. } => out.output.as_deref(),
        }
    }
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    /// Dimension of the ambient projective space plus one.
    #[arg(long)]
    pub n: usize,
    /// Comma-separated degrees of the defining equations.
    #[arg(long, value_delimiter = ',', required = true)]
    pub degrees: Vec<usize>,
    #[arg(long, value_parser = positive)]
    pub qmax: usize,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Also emit a rounded decimal approximation with this many digits.
    #[arg(long, value_name = "K")]
    pub decimal: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    G1Quasimap,
    G1Gw,
    Ck,
    Mu,
    R0,
    I0,
    MirrorMap,
    Correction,
}

impl What {
    pub fn name(self) -> &'static str {
        match self {
            What::G1Quasimap => "g1-quasimap",
            What::G1Gw => "g1-gw",
            What::Ck => "ck",
            What::Mu => "mu",
            What::R0 => "r0",
            What::I0 => "i0",
            What::MirrorMap => "mirror-map",
            What::Correction => "correction",
        }
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}
