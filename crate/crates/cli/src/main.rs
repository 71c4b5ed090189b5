mod args;
mod commands;
mod error;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use dsi_core::tolerances::{Profile, Tolerances};

use args::{Cli, Command, Format, ToleranceProfile};
use commands::{phases, sweeps, verify};
use error::CliError;
use output::{render_json, render_table};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dsi: {e}");
            e.exit_code()
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let g = &cli.global;
    rayon::ThreadPoolBuilder::new()
        .num_threads(g.threads)
        .build_global()
        .map_err(|e| error::usage(format!("thread pool: {e}")))?;
    let (profile, profile_name) = match g.tolerance_profile {
        ToleranceProfile::Default => (Profile::Default, "default"),
        ToleranceProfile::Strict => (Profile::Strict, "strict"),
    };
    let tol = Tolerances::for_profile(profile);
    let table_format = g.format.unwrap_or(Format::Csv);

    let (bytes, verdict) = match &cli.command {
        Command::Phases(a) => (tabulate(phases::run(a)?, table_format)?, None),
        Command::Angular(a) => (tabulate(sweeps::angular(a)?, table_format)?, None),
        Command::Spectrum(a) => (tabulate(sweeps::spectrum(a)?, table_format)?, None),
        Command::Smatrix(a) => (tabulate(sweeps::smatrix(a)?, table_format)?, None),
        Command::Wavefunction(a) => (tabulate(sweeps::wavefunction(&a.kind)?, table_format)?, None),
        Command::Verify(a) => {
            let (report, manifest) = verify::run(a, &tol, profile_name)?;
            let bytes = match g.format.unwrap_or(Format::Json) {
                Format::Json => render_json("report", serde_json::to_value(&report)?, manifest)?,
                Format::Csv => render_table(&report.table(), manifest, Format::Csv)?,
            };
            (bytes, Some(report.failures))
        }
    };

    match &g.out {
        Some(path) => std::fs::write(path, &bytes)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(&bytes)?;
            stdout.flush()?;
        }
    }
    match verdict {
        Some(n) if n > 0 => Err(CliError::Verification(n)),
        _ => Ok(()),
    }
}

fn tabulate((table, manifest): (output::Table, output::RunManifest), format: Format) -> Result<Vec<u8>, CliError> {
    render_table(&table, manifest, format)
}
