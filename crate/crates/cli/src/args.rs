use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "skewpart", version, about = "Skew partitions, clique-cutset trees and optimal colouring of Berge graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every tight skew partition.
    TightList(GraphArgs),
    /// List every unbalanced tight skew partition of a Berge graph.
    UnbalancedTightList(GraphArgs),
    /// Find a loose skew partition.
    Loose(GraphArgs),
    /// Find a balanced skew partition of a Berge graph.
    Balanced(GraphArgs),
    /// Print the candidate cutset list.
    KrList(GraphArgs),
    /// Build the clique-cutset decomposition tree.
    CcTree(GraphArgs),
    /// Colour a Berge graph with ω colours.
    Colour(GraphArgs),
    /// Decide Berge-ness by exhaustive search.
    CheckBerge(GraphArgs),
    /// Check a colouring file against a graph.
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        /// `V C` lines, 1-based vertices and colours.
        #[arg(long, value_name = "FILE")]
        colouring: PathBuf,
    },
    /// Write a random fixture graph to standard output.
    Gen(GenArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::TightList(_) => "tight-list",
            Command::UnbalancedTightList(_) => "unbalanced-tight-list",
            Command::Loose(_) => "loose",
            Command::Balanced(_) => "balanced",
            Command::KrList(_) => "kr-list",
            Command::CcTree(_) => "cc-tree",
            Command::Colour(_) => "colour",
            Command::CheckBerge(_) => "check-berge",
            Command::Verify { .. } => "verify",
            Command::Gen(_) => "gen",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// DIMACS if the first line starts with `c`, `p` or `e`, else an edge list.
    Auto,
    Dimacs,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Human,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    /// Graph file, or `-` for standard input.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    pub format: Format,
    /// Vertex count for edge lists (required for an empty edge list).
    #[arg(long, value_name = "N")]
    pub vertices: Option<usize>,
    /// Skip the exhaustive Berge check.
    #[arg(long)]
    pub assume_berge: bool,
    /// Largest vertex count for exhaustive oracle searches.
    #[arg(long, value_name = "N", default_value_t = 12, value_parser = clap::value_parser!(u16).range(1..))]
    pub budget: u16,
    #[arg(long, value_enum, default_value = "human")]
    pub output: OutputMode,
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: Option<u16>,
    /// Report wall-clock time; off by default so output is reproducible.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// G(n, p).
    Gnp,
    /// Random bipartite graph, sides as equal as possible.
    Bipartite,
    /// Complement of a random bipartite graph.
    CoBipartite,
    /// Line graph of a random bipartite graph with bounded degree.
    LineBipartite,
    /// Random graphs kept only if the oracle confirms they are Berge.
    Berge,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub family: Family,
    /// Vertex count (for line-bipartite: the number of base edges).
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u16).range(1..=128))]
    pub n: u16,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Edge probability.
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    /// Clique bound for line-bipartite (maximum base degree) and berge.
    #[arg(long, value_name = "K", default_value_t = 3)]
    pub max_clique: usize,
    #[arg(long = "write", value_enum, default_value = "dimacs")]
    pub write: WriteFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WriteFormat {
    Dimacs,
    Edgelist,
}
