use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "dualskew")]
#[command(about = "Skew-growth polynomials of dual Artin monoids: tables, roots and exact verification")]
#[command(version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the skew-growth polynomial of a type
    Poly {
        /// Type spec, e.g. A:12, I2:7, E8
        #[arg(value_name = "TYPE")]
        ctype: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Isolate and refine the roots in (0, 1], largest first
    Roots {
        #[arg(value_name = "TYPE")]
        ctype: String,
        /// Target interval width, as a fraction or decimal
        #[arg(long, default_value = "1e-12")]
        eps: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a verification suite
    Verify(VerifyArgs),
    /// Smallest root for each rank of a series
    Sequence {
        /// A, B or D
        family: String,
        #[arg(long)]
        from: Option<u32>,
        #[arg(long)]
        to: u32,
        #[arg(long, default_value = "1e-12")]
        eps: String,
        /// Also check t(B_l) < t(D_l) < t(B_(l-1)) (D only)
        #[arg(long)]
        sandwich: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build the non-crossing interval and compare its characteristic polynomial
    Lattice {
        #[arg(value_name = "TYPE")]
        ctype: String,
        /// JSON cache file; read when present and matching, written otherwise
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long, default_value_t = dualskew_core::nclattice::DEFAULT_ORDER_LIMIT)]
        max_order: u64,
        #[arg(long, default_value_t = dualskew_core::nclattice::DEFAULT_SUBSET_LIMIT)]
        subset_limit: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print table A (series closed forms) or table B (exceptional rows)
    Table {
        /// A or B
        which: String,
        /// Expand one series instead of printing the closed forms
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        from: Option<u32>,
        #[arg(long)]
        to: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Draw the roots in the complex plane as an SVG
    Plot {
        #[arg(value_name = "TYPE")]
        ctype: String,
        /// Output file; standard output when omitted
        #[arg(long, short)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "plus")]
        style: PlotStyle,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PlotStyle {
    /// '+' markers
    Plus,
    /// '+' markers with a labelled grid on the real axis
    Grid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Rodrigues,
    Jacobi,
    Legendre,
    Recurrence,
    #[value(name = "formulaAB", alias = "formula-ab")]
    FormulaAb,
    Conj2,
    Interlace,
    Bruns,
    Divisibility,
    Derivative1,
    Sandwich,
    Conj1,
    Lattice,
    All,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Restrict to a single type
    #[arg(value_name = "TYPE")]
    pub ctype: Option<String>,
    /// Restrict to one series (A, B or D)
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub from: Option<u32>,
    /// Upper rank (or L for formulaAB); each suite has its own default
    #[arg(long)]
    pub to: Option<u32>,
    #[arg(long, default_value_t = dualskew_core::nclattice::DEFAULT_ORDER_LIMIT)]
    pub max_order: u64,
    #[arg(long, default_value_t = dualskew_core::nclattice::DEFAULT_SUBSET_LIMIT)]
    pub subset_limit: usize,
    /// Precision cap in bits for the Bruns check
    #[arg(long, default_value_t = dualskew_core::roots::DEFAULT_MAX_PRECISION)]
    pub precision_cap: u32,
    /// Comma-separated primes for conj1 (default: first 25 above the degree)
    #[arg(long, value_delimiter = ',')]
    pub primes: Option<Vec<u64>>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}
