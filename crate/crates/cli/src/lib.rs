//! The `ncg` command line: catalog inspection, pairing tables, indices,
//! module verification and the cyclic-cohomology suites.
//!
//! [`run`] parses arguments and returns what would be printed together with
//! the exit code, so the binary and the tests share one code path.

mod commands;
mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ncg_core::NcgError;

pub use commands::execute;

/// Every emitted item passed.
pub const EXIT_OK: i32 = 0;
/// Something was computed and a check failed.
pub const EXIT_FAILED: i32 = 1;
/// Bad arguments.
pub const EXIT_USAGE: i32 = 2;
/// An even pairing did not stabilize within the requested degrees.
pub const EXIT_NOT_STABILIZED: i32 = 3;
/// The computation itself raised an error.
pub const EXIT_ERROR: i32 = 4;

#[derive(Parser, Debug, Clone)]
#[command(
    name = "ncg",
    version,
    about = "Fredholm modules, K-theory pairings and cyclic cocycles for the infinite dihedral group"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Window radius N.
    #[arg(long, global = true, env = "NCG_DEFAULT_WINDOW", default_value_t = 32, value_parser = clap::value_parser!(i64).range(8..))]
    pub window: i64,

    /// Largest degree n used by even pairings.
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..))]
    pub degree: u32,

    /// Arithmetic backend; modules pick their own when omitted.
    #[arg(long, global = true, value_enum)]
    pub backend: Option<BackendArg>,

    /// Tolerance for float comparisons.
    #[arg(long, global = true, default_value_t = 1e-12, value_parser = positive_f64)]
    pub tol: f64,

    /// Exponent bound for cyclic verification.
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(i64).range(1..))]
    pub bound: i64,

    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { window: 32, degree: 2, backend: None, tol: 1e-12, bound: 12, seed: 0, format: Format::Text }
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("tolerance must be positive, got {s}"))
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BackendArg {
    Exact,
    Float,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// List the catalog modules, or show one.
    Catalog { name: Option<String> },
    /// Pairing table of an algebra's generating modules with its standard classes.
    Table {
        /// A, B or CT.
        algebra: String,
    },
    /// Fredholm index of the compression of a unitary (odd modules).
    Index { module: String, unitary: String },
    /// Pairing of a module with a class label (`P1`, `[V]`) or a JSON element.
    Pair {
        module: String,
        class: String,
        /// Pull the module back along an algebra map first
        /// (identity, alpha_minus_one, quotient, circle_to_u, circle_to_v).
        #[arg(long)]
        via: Option<String>,
    },
    /// Check the module axioms for one module, or for the whole catalog.
    Verify { module: Option<String> },
    /// Check the path of symmetries joining y₀ to the degenerate y₁.
    Homotopy,
    /// Cyclic-cohomology verification suites.
    Cyclic {
        #[command(subcommand)]
        suite: CyclicSuite,
    },
}

#[derive(Args, Debug, Clone)]
pub struct RandomData {
    /// Number of random data sets.
    #[arg(long)]
    pub count: Option<usize>,
    /// Coefficients are supported in |n| ≤ support; defaults to min(8, bound / 2).
    #[arg(long)]
    pub support: Option<i64>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum CyclicSuite {
    /// b(bψ) = 0 for random 0-cochains.
    #[command(name = "verify-0")]
    Verify0(RandomData),
    /// bφ = 0 and antisymmetry for random cocycle-form 1-cochains.
    #[command(name = "verify-1")]
    Verify1(RandomData),
    /// b(solve_1(φ)) = φ for random cocycle-form φ.
    #[command(name = "solve-1")]
    Solve1(RandomData),
    /// b(solve_2(k, c_k)) = Sψ_k.
    #[command(name = "solve-2")]
    Solve2 {
        /// Defaults to every k in 1..=8.
        #[arg(long, allow_negative_numbers = true)]
        k: Option<i64>,
        /// Rational c_k; defaults to each of 0, 1, -3/2.
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
    },
    /// The matrix [pair(ψᵢ, Pⱼ)] against the identity.
    Duality,
    /// [pair(Sψᵢ, Pⱼ)] against [pair(ψᵢ, Pⱼ)].
    #[command(name = "s-compat")]
    SCompat,
}

/// What a run printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.code == EXIT_OK
    }
}

pub fn exit_code(err: &NcgError) -> i32 {
    match err {
        NcgError::NotStabilized { .. } => EXIT_NOT_STABILIZED,
        NcgError::Unknown { .. } | NcgError::Parse(_) | NcgError::InvalidArgument(_) => EXIT_USAGE,
        _ => EXIT_ERROR,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli.command, &cli.config),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code }
            } else {
                Outcome { stdout: text, stderr: String::new(), code }
            }
        }
    }
}
