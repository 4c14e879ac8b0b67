use std::io::{self, IsTerminal, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use spinorlab::json::to_canonical_string;
use spinorlab::{parse_job, render, run_job, CliError, Format, Mode, Overrides};

/// Classifies spinors by their bilinear covariants and checks their symmetries.
#[derive(Debug, Parser)]
#[command(name = "spinorlab", version)]
struct Cli {
    /// Job file; `-` or absent reads standard input (or an empty job on a terminal).
    #[arg(long)]
    job: Option<PathBuf>,
    /// Overrides the job's mode.
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Overrides the job's seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Overrides the job's draw count.
    #[arg(long)]
    count: Option<u64>,
    /// Output rendering.
    #[arg(long, value_enum, default_value_t = Format::Structured)]
    format: Format,
    /// Relative zero threshold for bilinears.
    #[arg(long)]
    epsilon_class: Option<f64>,
    /// Relative threshold for eigen-equation residuals.
    #[arg(long)]
    epsilon_helicity: Option<f64>,
    /// Phase of the positive-helicity rest spinor.
    #[arg(long)]
    theta1: Option<f64>,
    /// Phase of the negative-helicity rest spinor.
    #[arg(long)]
    theta2: Option<f64>,
}

fn read_job(path: Option<&PathBuf>) -> Result<String, CliError> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            return std::fs::read_to_string(p)
                .map_err(|e| CliError::Io(format!("reading {}: {e}", p.display())));
        }
        Some(_) => {}
        None if io::stdin().is_terminal() => return Ok(text),
        None => {}
    }
    io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| CliError::Io(format!("reading standard input: {e}")))?;
    Ok(text)
}

fn execute(cli: &Cli) -> Result<(String, bool), CliError> {
    let text = read_job(cli.job.as_ref())?;
    let overrides = Overrides {
        mode: cli.mode,
        seed: cli.seed,
        count: cli.count,
        epsilon_class: cli.epsilon_class,
        epsilon_helicity: cli.epsilon_helicity,
        theta1: cli.theta1,
        theta2: cli.theta2,
    };
    let job = parse_job(&text, &overrides)?;
    let report = run_job(&job)?;
    Ok((render(&report, cli.format), report.passed()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok((text, passed)) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(4)
            }
        }
        Err(e) => {
            eprint!("{}", to_canonical_string(&e.to_record()));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
