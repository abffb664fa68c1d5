use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cmdeg::config::RunConfig;
use cmdeg::verify::{self, EXIT_CONFIG, EXIT_IDENTITY_FAILURE, EXIT_PASS};

#[derive(Parser)]
#[command(name = "cmdeg", version, about = "Check CM divisor degrees against Eisenstein series derivatives")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare both sides of the identity over the configured grid
    CheckIdentity {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        tolerance: Option<f64>,
        /// Report directory (overrides $CMDEG_REPORT_DIR)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-prime degree table as CSV
    Degree {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-class Eisenstein coefficient table as CSV
    Eisenstein {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in invariant suites
    Selftest,
}

fn load(path: &Path, tolerance: Option<f64>) -> Result<verify::Prepared, String> {
    let mut cfg = RunConfig::from_file(path).map_err(|e| e.to_string())?;
    if let Some(t) = tolerance {
        if !(t > 0.0 && t.is_finite()) {
            return Err(format!("config error: tolerance must be positive, got {t}"));
        }
        cfg.tolerance = t;
    }
    verify::prepare(&cfg).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<i32, (i32, String)> {
    let config_err = |e: String| (EXIT_CONFIG, e);
    let io_err = |e: cmdeg::Error| (EXIT_CONFIG, e.to_string());
    match cli.command {
        Command::CheckIdentity { config, tolerance, out } => {
            let p = load(&config, tolerance).map_err(config_err)?;
            let report = verify::check_identity(&p).map_err(io_err)?;
            let dir = verify::report_dir(out.as_deref());
            verify::write_report(&dir, "identity.json", &report.to_json()).map_err(io_err)?;
            verify::write_report(&dir, "identity.csv", &report.to_csv()).map_err(io_err)?;
            let s = &report.summary;
            println!(
                "{}/{} passed, max rel err {} (report in {})",
                s.n_pass,
                s.n_checked,
                cmdeg::report::fmt_e(s.max_rel_err),
                dir.display()
            );
            Ok(verify::exit_code(&report))
        }
        Command::Degree { config, out } => {
            let p = load(&config, None).map_err(config_err)?;
            let table = verify::degree_table(&p).map_err(io_err)?;
            verify::write_report(&verify::report_dir(out.as_deref()), "degree.csv", &table).map_err(io_err)?;
            print!("{table}");
            Ok(EXIT_PASS)
        }
        Command::Eisenstein { config, out } => {
            let p = load(&config, None).map_err(config_err)?;
            let table = verify::eisenstein_table(&p).map_err(io_err)?;
            verify::write_report(&verify::report_dir(out.as_deref()), "eisenstein.csv", &table).map_err(io_err)?;
            print!("{table}");
            Ok(EXIT_PASS)
        }
        Command::Selftest => {
            let checks = verify::selftest().map_err(|e| (EXIT_IDENTITY_FAILURE, e.to_string()))?;
            for c in &checks {
                println!("{c}");
            }
            Ok(if checks.iter().all(|c| c.pass) { EXIT_PASS } else { EXIT_IDENTITY_FAILURE })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code as u8)
        }
    }
}
