//! `hypin` — largest inscribed circles in fundamental domains of the
//! hyperbolic plane groups [3,3,...,3].
//!
//! Subcommands: `enumerate` (domain types as degree censuses), `solve`
//! (incircle radius per census plus the global maximizer), `verify`
//! (aggregated property suite), `render` (Poincaré-disk SVG of a domain) and
//! `optimize` (constrained stationary-point search for the free-angle types
//! of l = 4).
//!
//! Exit codes: 0 success, 2 usage or precondition, 3 solver failure,
//! 4 verification failure, 5 optimizer failure.

mod commands;
mod output;
mod verify;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use output::Format;

/// Failure with the exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub exit_code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { exit_code: 2, message: message.into() }
    }
    pub fn solver(message: impl Into<String>) -> Self {
        Self { exit_code: 3, message: message.into() }
    }
    pub fn verification(message: impl Into<String>) -> Self {
        Self { exit_code: 4, message: message.into() }
    }
    pub fn optimizer(message: impl Into<String>) -> Self {
        Self { exit_code: 5, message: message.into() }
    }
}

#[derive(Parser)]
#[command(
    name = "hypin",
    version,
    about = "Largest inscribed circles in fundamental domains of the hyperbolic groups [3,3,...,3]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all combinatorial domain types (degree censuses) of the
    /// group with l order-3 rotation centers.
    Enumerate {
        /// Number of order-3 rotation centers (>= 4).
        #[arg(long)]
        l: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Output file; stdout when omitted. A run manifest is written next
        /// to the file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve the incircle radius equation for every domain type and compare
    /// the maximizer against the closed-form optimum.
    Solve {
        #[arg(long)]
        l: u32,
        /// Bracket tolerance on the radius-equation root, in [1e-14, 1e-6].
        /// Falls back to HYPIN_TOL, then 1e-13.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the aggregated property suite for l = 4..=l-max.
    Verify {
        #[arg(long = "l-max", default_value_t = 8)]
        l_max: u32,
        /// Report file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render one domain type as an SVG figure in the Poincaré disk.
    Render {
        #[arg(long)]
        l: u32,
        /// 1-based census index in canonical order (the published type
        /// numbers for l = 4).
        #[arg(long = "type")]
        type_index: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Multi-start stationary-point search for a free-angle type of l = 4.
    Optimize {
        /// Free-angle type: 3, 4 or 5.
        #[arg(long = "type")]
        type_id: u8,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn env_f64(name: &str) -> Result<Option<f64>, CliError> {
    match std::env::var(name) {
        Ok(raw) => raw
            .parse::<f64>()
            .map(Some)
            .map_err(|_| CliError::usage(format!("{name} must be a number, got {raw:?}"))),
        Err(_) => Ok(None),
    }
}

fn env_threads() -> Result<usize, CliError> {
    match std::env::var("HYPIN_THREADS") {
        Ok(raw) => raw
            .parse::<usize>()
            .ok()
            .filter(|&t| t >= 1)
            .ok_or_else(|| {
                CliError::usage(format!("HYPIN_THREADS must be a positive integer, got {raw:?}"))
            }),
        Err(_) => Ok(1),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Enumerate { l, format, out } => commands::cmd_enumerate(l, format, out.as_deref()),
        Command::Solve { l, tol, format, out } => {
            let tol = match tol {
                Some(t) => t,
                None => env_f64("HYPIN_TOL")?.unwrap_or(hypin::incircle::DEFAULT_TOL),
            };
            if !(1e-14..=1e-6).contains(&tol) {
                return Err(CliError::usage(format!(
                    "tolerance {tol} outside [1e-14, 1e-6]"
                )));
            }
            let threads = env_threads()?;
            commands::cmd_solve(l, tol, threads, format, out.as_deref())
        }
        Command::Verify { l_max, out } => verify::cmd_verify(l_max, out.as_deref()),
        Command::Render { l, type_index, out } => commands::cmd_render(l, type_index, &out),
        Command::Optimize { type_id, seed, out } => {
            commands::cmd_optimize(type_id, seed, out.as_deref())
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {}", e.message);
            std::process::exit(e.exit_code);
        }
    }
}
