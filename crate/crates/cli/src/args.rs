use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use weakval_core::linalg::DEFAULT_TOL;
use weakval_core::pointer::DEFAULT_GRID_POINTS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

/// Weak values, eigen-constrained decompositions and pointer simulations
/// for pre- and post-selected quantum systems.
#[derive(Debug, Parser)]
#[command(name = "weakval", version)]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, env = "WEAKVAL_FORMAT", default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List or run the built-in paradox scenarios
    Scenarios {
        #[command(subcommand)]
        action: ScenarioAction,
    },
    /// Weak value of an observable between two states read from files
    Weakvalue(SystemFiles),
    /// Solve for or verify a split O = P + Q
    Decompose {
        #[command(subcommand)]
        action: DecomposeAction,
    },
    /// Simulate a Gaussian pointer coupled to a scenario observable
    Pointer(PointerArgs),
}

#[derive(Debug, Subcommand)]
pub enum ScenarioAction {
    List,
    Run {
        name: String,
        /// Largest accepted gap and residual
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SystemFiles {
    /// Observable matrix file
    #[arg(long)]
    pub obs: PathBuf,
    /// Pre-selected state file
    #[arg(long)]
    pub pre: PathBuf,
    /// Post-selected state file
    #[arg(long)]
    pub post: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum DecomposeAction {
    /// Minimum-norm P for a chosen p (default: half the weak value)
    Solve {
        #[command(flatten)]
        files: SystemFiles,
        #[arg(long, allow_negative_numbers = true)]
        p: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Check a split given as files, or one of the built-in fixtures
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, conflicts_with_all = ["obs", "pre", "post", "pfile", "qfile", "p", "q"])]
    pub fixture: Option<String>,
    #[arg(long, required_unless_present = "fixture")]
    pub obs: Option<PathBuf>,
    #[arg(long, required_unless_present = "fixture")]
    pub pre: Option<PathBuf>,
    #[arg(long, required_unless_present = "fixture")]
    pub post: Option<PathBuf>,
    #[arg(long, required_unless_present = "fixture")]
    pub pfile: Option<PathBuf>,
    #[arg(long, required_unless_present = "fixture")]
    pub qfile: Option<PathBuf>,
    #[arg(
        long,
        required_unless_present = "fixture",
        allow_negative_numbers = true
    )]
    pub p: Option<f64>,
    #[arg(
        long,
        required_unless_present = "fixture",
        allow_negative_numbers = true
    )]
    pub q: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct PointerArgs {
    #[arg(long)]
    pub scenario: String,
    /// Observable label within the scenario, e.g. PiC or Sz
    #[arg(long)]
    pub obs: String,
    /// Initial pointer spread
    #[arg(long)]
    pub sigma: f64,
    /// Coupling strength
    #[arg(long, allow_negative_numbers = true)]
    pub g: f64,
    #[arg(long, default_value_t = DEFAULT_GRID_POINTS)]
    pub grid_points: usize,
    /// Grid halfwidth (default 8 sigma + |g| max|eigenvalue|)
    #[arg(long)]
    pub halfwidth: Option<f64>,
    /// Monte-Carlo pointer readings to draw
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 0, requires = "samples")]
    pub seed: u64,
    /// Comma-separated couplings for a convergence table, largest first
    #[arg(long, value_delimiter = ',')]
    pub gsweep: Vec<f64>,
}
