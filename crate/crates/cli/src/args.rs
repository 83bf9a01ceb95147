use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "qserre", version, about = "Braided factorials, skew pairings and q-Serre relators for an R-matrix")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Yang-Baxter equation, invertibility and the braid relation.
    Check(CommonArgs),
    /// Print the braid matrix B = P·R.
    Braid(CommonArgs),
    /// Print the braided factorials [1!]_B … [N!]_B.
    Factorial(FactorialArgs),
    /// Report q-Serre relators degree by degree.
    Serre(SerreArgs),
    /// Evaluate the skew pairing of a plus and a minus expression.
    Pair(PairArgs),
    /// List the built-in R-matrices.
    Catalog(OutputArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Doc,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output format: human-readable text or a JSON document.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the output to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["catalog", "input"])))]
pub struct SourceArgs {
    /// Built-in R-matrix (see the `catalog` subcommand).
    #[arg(long, value_name = "NAME")]
    pub catalog: Option<String>,

    /// R-matrix document (JSON).
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,

    /// Dimension of V for catalog entries.
    #[arg(long, default_value_t = 2)]
    pub n: usize,

    /// Parameters of the `diagonal` entry, row-major over (i, j).
    #[arg(long = "param", value_name = "EXPR", value_delimiter = ',')]
    pub params: Vec<String>,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[command(flatten)]
    pub source: SourceArgs,

    #[command(flatten)]
    pub output: OutputArgs,

    /// Display values specialized at q = Q0 (a rational number).
    #[arg(long = "at-q", value_name = "Q0")]
    pub at_q: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct FactorialArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Highest degree.
    #[arg(long = "N", default_value_t = 3)]
    pub degree: usize,

    /// Also compute the index-contraction Gram matrices and compare.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SerreArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Highest degree (at least 2).
    #[arg(long = "N", default_value_t = 4)]
    pub degree: usize,

    /// Largest T-U Gram matrix (rows) whose kernels are computed.
    #[arg(long, default_value_t = 100)]
    pub tu_max_size: usize,
}

#[derive(Debug, Clone, Args)]
pub struct PairArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Plus-side expression in u[i,j] and F[i].
    pub x: String,

    /// Minus-side expression in t[i,j] and E[i].
    pub a: String,

    /// Also evaluate the convolution-inverse pairing.
    #[arg(long)]
    pub inverse: bool,

    /// Check Σ <x₁,a₁>⁻<x₂,a₂> = Σ <x₁,a₁><x₂,a₂>⁻ = ε(x)ε(a).
    #[arg(long)]
    pub convolution: bool,
}
