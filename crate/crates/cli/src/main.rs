use std::f64::consts::FRAC_PI_2;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use twopair_cli::{clone, parse_angle, run_sweep, run_verify, sweep, verify, CliError, RunConfig, VerifyConfig};
use twopair_core::CloneReport;

/// Optimal symmetric cloning of two pairs of orthogonal qubit states.
#[derive(Parser)]
#[command(name = "twopair", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep phi and write the optimal fidelity and shrinking factors as CSV.
    Sweep {
        #[arg(long, default_value = "0", value_parser = parse_angle)]
        phi_min: f64,
        #[arg(long, default_value = "pi/2", value_parser = parse_angle)]
        phi_max: f64,
        #[arg(long, default_value_t = 91)]
        steps: usize,
        /// Output file (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Add a numeric_fidelity column from the grid-search oracle.
        #[arg(long)]
        with_oracle: bool,
        #[arg(long, default_value_t = 256)]
        oracle_grid: usize,
        /// Refinement tolerance for the oracle.
        #[arg(long, default_value_t = 1e-12)]
        tolerance: f64,
    },
    /// Report the cloner at one angle in detail.
    Clone {
        /// Angle in radians; `pi/4`-style literals are accepted.
        #[arg(value_parser = parse_angle, allow_hyphen_values = true)]
        phi: f64,
        /// Override the optimal coefficients with `a,b,c`.
        #[arg(long)]
        coeffs: Option<String>,
    },
    /// Check every invariant on an angle grid.
    Verify {
        #[arg(long, default_value_t = 1e-10)]
        tolerance: f64,
        #[arg(long, default_value_t = 1000)]
        grid: usize,
        #[arg(long, default_value_t = 256)]
        oracle_grid: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("twopair: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Sweep {
            phi_min,
            phi_max,
            steps,
            out,
            with_oracle,
            oracle_grid,
            tolerance,
        } => {
            let config = RunConfig {
                phi_min,
                phi_max,
                steps,
                with_oracle,
                oracle_grid,
                tolerance,
            };
            let rows = run_sweep(&config)?;
            let line = sweep::summary(&rows);
            match out {
                Some(path) => {
                    let file = File::create(&path)
                        .map_err(|e| io::Error::new(e.kind(), format!("cannot write {}: {e}", path.display())))?;
                    let mut w = BufWriter::new(file);
                    sweep::write_csv(&rows, with_oracle, &mut w)?;
                    w.flush()?;
                    println!("{line}");
                }
                None => {
                    // Keep stdout pure CSV.
                    sweep::write_csv(&rows, with_oracle, io::stdout().lock())?;
                    eprintln!("{line}");
                }
            }
            Ok(())
        }
        Command::Clone { phi, coeffs } => {
            if !(0.0..=FRAC_PI_2).contains(&phi) {
                return Err(CliError::Usage(format!("phi must lie in [0, pi/2], got {phi}")));
            }
            let coeffs = coeffs.as_deref().map(clone::parse_coeffs).transpose()?;
            let report = CloneReport::compute(phi, coeffs)?;
            print!("{}", clone::render(&report));
            Ok(())
        }
        Command::Verify {
            tolerance,
            grid,
            oracle_grid,
        } => {
            let results = run_verify(&VerifyConfig {
                tolerance,
                grid,
                oracle_grid,
            })?;
            let (text, outcome) = verify::report(&results);
            print!("{text}");
            outcome
        }
    }
}
