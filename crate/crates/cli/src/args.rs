use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "folkman",
    version,
    about = "Exact tools for vertex Folkman numbers"
)]
pub struct Cli {
    /// worker threads (defaults to machine parallelism)
    #[arg(long, global = true, env = "FOLKMAN_THREADS")]
    pub threads: Option<usize>,
    /// human-readable text instead of JSON
    #[arg(long, global = true)]
    pub pretty: bool,
    /// write the result here instead of standard output
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// write the run manifest here instead of standard error
    #[arg(long, global = true, value_name = "FILE")]
    pub manifest: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GraphInput {
    #[arg(long, value_name = "G6")]
    pub graph6: Option<String>,
    #[arg(long, value_name = "FILE", conflicts_with = "graph6")]
    pub graph6_file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// clique, independence and chromatic numbers with witnesses
    Invariants {
        #[command(flatten)]
        input: GraphInput,
    },
    /// vertex or edge arrowing
    Arrows {
        #[arg(value_enum)]
        kind: ArrowKind,
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_delimiter = ',', required = true)]
        pattern: Vec<usize>,
        #[arg(long, default_value_t = folkman_core::arrowing::DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[arg(long, default_value_t = folkman_core::arrowing::DEFAULT_MAX_EDGES)]
        max_edges: usize,
    },
    /// build and verify a witness graph
    Construct {
        #[arg(value_enum)]
        kind: ConstructionKind,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long)]
        m: Option<usize>,
        #[command(flatten)]
        input: GraphInput,
        /// catalog to take the (m-k,3)-graph from before mining one
        #[arg(long, value_name = "DIR")]
        catalog: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// search for a (p,q)-graph on n vertices
    Mine {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        q: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        max_restarts: Option<u64>,
        #[arg(long)]
        max_flips: Option<u64>,
        /// store a found witness in this catalog
        #[arg(long, value_name = "DIR")]
        catalog: Option<PathBuf>,
    },
    /// least order of a K_q-free graph arrowing the pattern, by enumeration
    Certify {
        #[arg(long, value_delimiter = ',', required = true)]
        pattern: Vec<usize>,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        n_cap: usize,
        #[arg(long, default_value_t = folkman_core::enumeration::DEFAULT_ORDER_WALL)]
        order_wall: usize,
        #[arg(long, value_name = "FILE")]
        checkpoint: Option<PathBuf>,
        /// write every examined class as a JSON line
        #[arg(long, value_name = "FILE")]
        stream: Option<PathBuf>,
    },
    /// bound grid for F_v(2_r; r-k+1)
    Table {
        #[arg(long, default_value_t = 30)]
        r_max: usize,
        #[arg(long, default_value_t = 15, allow_hyphen_values = true)]
        k_max: i64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// emit the uniform offset lines instead of the grid
        #[arg(long)]
        offsets: bool,
    },
    /// witness catalog access
    Witness {
        #[command(subcommand)]
        action: WitnessAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum WitnessAction {
    Lookup {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        q: usize,
        #[arg(long, value_name = "DIR", default_value = "catalog")]
        catalog: PathBuf,
    },
    Ingest {
        #[arg(long, value_name = "FILE")]
        graph6_file: PathBuf,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 3)]
        q: usize,
        #[arg(long, value_name = "DIR", default_value = "catalog")]
        catalog: PathBuf,
    },
    Verify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 3)]
        q: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ArrowKind {
    Vertex,
    Edge,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ConstructionKind {
    Dirac,
    DoubleC5,
    TripleC5,
    Grotzsch,
    Mycielskian,
    RamseyJoin,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Invariants { .. } => "invariants",
            Command::Arrows { .. } => "arrows",
            Command::Construct { .. } => "construct",
            Command::Mine { .. } => "mine",
            Command::Certify { .. } => "certify",
            Command::Table { .. } => "table",
            Command::Witness { .. } => "witness",
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            Command::Mine { seed, .. } | Command::Construct { seed, .. } => Some(*seed),
            _ => None,
        }
    }
}
