use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "dgas",
    version,
    about = "Check whether graphs are determined by their generalized A_alpha-spectrum"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Table,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Rational parameter in [0, 1), written p/q.
    #[arg(long, global = true, env = "DGAS_ALPHA", default_value = "0")]
    pub alpha: String,
    /// Input encoding.
    #[arg(long, global = true, env = "DGAS_FORMAT", value_enum, default_value = "graph6")]
    pub format: InputFormat,
    /// Output encoding.
    #[arg(long, global = true, env = "DGAS_OUTPUT", value_enum, default_value = "json")]
    pub output: OutputFormat,
    /// Worker threads for batch work (default: available parallelism).
    #[arg(long, global = true, env = "DGAS_THREADS")]
    pub threads: Option<usize>,
    /// Seed for the factorization's pseudo-random choices.
    #[arg(long, global = true, env = "DGAS_SEED", default_value_t = 1)]
    pub seed: u64,
    /// Maximum total Pollard rho iterations per factorization.
    #[arg(long, global = true, env = "DGAS_EFFORT", default_value_t = 200_000_000)]
    pub effort: u64,
}

/// One graph, either inline or from a file (`-` reads stdin).
#[derive(Debug, Args)]
pub struct GraphInput {
    /// Inline graph: a graph6 string, or an edge list with `;` for newlines.
    #[arg(long, conflicts_with = "input")]
    pub graph: Option<String>,
    /// File holding one graph.
    pub input: Option<PathBuf>,
}

/// A list of graphs of one order: enumerated or read from a graph6 file.
#[derive(Debug, Args)]
pub struct CorpusInput {
    /// Enumerate all graphs of this order (at most 8).
    #[arg(long, conflicts_with = "input")]
    pub n: Option<usize>,
    /// Restrict enumeration to connected graphs.
    #[arg(long, requires = "n")]
    pub connected: bool,
    /// graph6 file, one graph per line.
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the arithmetic criterion for one graph.
    Check(GraphInput),
    /// Evaluate the criterion for every graph6 line of a file, as JSON lines.
    Batch {
        /// graph6 file, one graph per line (`-` reads stdin).
        input: PathBuf,
    },
    /// Print the Smith normal form of the modified walk matrix.
    Snf(GraphInput),
    /// Print the characteristic polynomials of A_c(G) and A_c(complement).
    Spectrum(GraphInput),
    /// Group graphs into generalized-cospectral classes.
    Mates(CorpusInput),
    /// Cross-check the criterion against exhaustive mate search.
    VerifyTheorem(CorpusInput),
}
