//! `dho` — deterministic tables and verification runs for the damped
//! harmonic oscillator in its two quantum descriptions.
//!
//! Exit codes: 0 all embedded checks pass, 1 at least one check failed,
//! 2 usage error, 3 domain error (e.g. overdamped parameters),
//! 4 I/O error (unreadable config, unwritable output).

mod commands;
mod config;
mod output;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "dho",
    about = "Damped harmonic oscillator laboratory: BCK and first-order models",
    version
)]
pub struct Cli {
    /// Optional key=value configuration file (flags take precedence)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Angular frequency ω (default 1)
    #[arg(long, global = true, allow_negative_numbers = true)]
    omega: Option<f64>,
    /// Friction coefficient α (default 0.6; must satisfy α < ω)
    #[arg(long, global = true, allow_negative_numbers = true)]
    alpha: Option<f64>,
    /// Fock-basis truncation M (default 128)
    #[arg(long, global = true)]
    trunc: Option<usize>,
    /// Output format (default csv)
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    /// Output path; stdout when omitted. A relative path is resolved
    /// against $DHO_OUT_DIR when that variable is set.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
pub enum Command {
    /// Sample one pseudostationary state on a grid
    States {
        /// Quantum number n
        #[arg(long, default_value_t = 0)]
        n: usize,
        /// Evaluation time t
        #[arg(long, default_value_t = 0.0)]
        t: f64,
        /// Override the auto-sized grid half width
        #[arg(long)]
        grid_half_width: Option<f64>,
        /// Override the auto-sized point count (odd, >= 16)
        #[arg(long)]
        grid_points: Option<usize>,
    },
    /// Evolve an eigenstate under the BCK flow and tabulate invariants
    Evolve {
        #[arg(long, default_value_t = 0)]
        n: usize,
        /// Times: "a:b:count", comma list, or a single value
        #[arg(long, default_value = "0:1:11", allow_hyphen_values = true)]
        t: String,
    },
    /// Coherent-state means, variances and trajectory radius
    Coherent {
        /// Complex label z as "re" or "re,im"
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        z: String,
        #[arg(long, default_value = "0:2:41", allow_hyphen_values = true)]
        t: String,
    },
    /// Squeezed-state closed forms against the Fock-space construction
    Squeezed {
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        z: String,
        /// Squeeze parameter ξ
        #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
        xi: f64,
        #[arg(long, default_value = "0:2:21", allow_hyphen_values = true)]
        t: String,
    },
    /// Uncertainty product ΔxΔy(t); the critical-time row is always included
    Uncertainty {
        #[arg(long, default_value = "0:2:101", allow_hyphen_values = true)]
        t: String,
    },
    /// Classical trajectory: closed form, RK4 oracle, and the multiplier residual
    Classical {
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        x0: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        y0: f64,
        #[arg(long, default_value = "0:5:51", allow_hyphen_values = true)]
        t: String,
        /// RK4 step
        #[arg(long, default_value_t = 1e-3)]
        dt: f64,
    },
    /// Run the equivalence verification suite (the default command)
    Equivalence {
        /// Highest quantum number in the panel (levels 0..=n_max)
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        /// Times of the check lattice
        #[arg(long, default_value = "0,0.25,0.5,1", allow_hyphen_values = true)]
        t: String,
        /// Also run the large-n residual checks (base order 64)
        #[arg(long, default_value_t = false)]
        with_asymptotics: bool,
    },
    /// Large-n residuals and window errors of the asymptotic states
    Asymptotics {
        /// Base orders; each n is compared against 4n
        #[arg(long, default_value = "64")]
        orders: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("dho: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
