//! Command-line front end: parses flags, runs the pipeline and serializes
//! exact results as JSON or CSV.

mod args;
mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;
use ellmirror_core::verify::run_suites;
use ellmirror_core::{
    compute_ck, extract_asymptotics, gw_g1, i_fixed_point, i_underline, mirror_map, small_i,
    validate_model, CIModel, Rat, VerifyOutcome, Windows,
};

pub use args::{Cli, Command, Format, ModelArgs, What};
pub use render::decimal;

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] ellmirror_core::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot encode output: {0}")]
    Encode(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        }
    }
}

/// A computed report and whether it represents success.
pub struct Report {
    pub body: String,
    pub ok: bool,
}

/// Parses `args` (including the program name), runs the request and writes
/// the report. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let output = cli.command.output().map(|p| p.to_path_buf());
    let result = execute(&cli.command).and_then(|report| {
        match &output {
            Some(path) => std::fs::write(path, &report.body)?,
            None => stdout.write_all(report.body.as_bytes())?,
        }
        Ok(report.ok)
    });
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAILURE,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn model(args: &ModelArgs) -> Result<CIModel, CliError> {
    validate_model(args.n, &args.degrees).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn execute(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Compute {
            model: ma,
            what,
            out,
        } => {
            let m = model(ma)?;
            let series = compute(&m, ma.qmax, *what)?;
            let body = render::series(&m, ma.qmax, *what, &series, out.format, out.decimal)?;
            Ok(Report { body, ok: true })
        }
        Command::Verify {
            model: ma,
            suites,
            loop_qmax,
            out,
        } => {
            let m = model(ma)?;
            let loop_qmax = loop_qmax.unwrap_or(ma.qmax.min(8));
            let outcomes = run_suites(&m, suites, ma.qmax, loop_qmax)?;
            let ok = outcomes.iter().all(VerifyOutcome::passed);
            let body = render::outcomes(&m, ma.qmax, loop_qmax, &outcomes, out.format)?;
            Ok(Report { body, ok })
        }
        Command::Table { model: ma, out } => {
            let m = model(ma)?;
            let report = gw_g1(&m, ma.qmax)?;
            let body = render::table(
                &m,
                ma.qmax,
                &report.invariants_table,
                out.format,
                out.decimal,
            )?;
            Ok(Report { body, ok: true })
        }
    }
}

/// The requested series, one vector per component (several only for `ck`).
pub fn compute(m: &CIModel, qmax: usize, what: What) -> Result<Vec<Vec<Rat>>, CliError> {
    let one = |s: ellmirror_core::QSeries<Rat>| vec![s.into_coeffs()];
    Ok(match what {
        What::I0 => one(small_i(m, qmax).i0),
        What::MirrorMap => one(mirror_map(&small_i(m, qmax))?.q_of_q),
        What::G1Quasimap => one(gw_g1(m, qmax)?.f_quasimap),
        What::G1Gw => one(gw_g1(m, qmax)?.f_gw),
        What::Correction => one(gw_g1(m, qmax)?.correction),
        What::Ck => {
            let w = Windows::for_model(m, qmax);
            let bd = compute_ck(&i_underline(m, qmax, w.z_depth)?)?;
            let wider = compute_ck(&i_underline(m, qmax, w.enlarged(2).z_depth)?)?;
            if bd != wider {
                return Err(ellmirror_core::Error::TruncationUnstable(
                    "Birkhoff constants depend on the z-window".into(),
                )
                .into());
            }
            bd.c.into_iter().map(|s| s.into_coeffs()).collect()
        }
        What::Mu | What::R0 => {
            let w = Windows::for_model(m, qmax);
            let ad = extract_asymptotics(&i_fixed_point(m, qmax, w.w_max)?, 0)?;
            match what {
                What::Mu => one(ad.mu),
                _ => one(ad.r.into_iter().next().expect("R_0 is always present")),
            }
        }
    })
}
