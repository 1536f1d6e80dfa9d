use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Monochromatic sub-hypergraphs in colored complete hypergraphs: verify,
/// construct and search small Ramsey and Turán numbers.
///
/// Exit status: 0 success, 1 verification or precondition failure,
/// 2 unreadable input, 3 search budget exceeded.
#[derive(Debug, Parser)]
#[command(name = "ramseylab", version)]
pub struct Cli {
    /// Worker threads for searches.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a coloring file (or catalog certificate) for monochromatic copies.
    Verify {
        #[arg(long)]
        pattern: String,
        /// HRC1 file, or the name of a catalog certificate.
        coloring: String,
    },
    /// Build a coloring from a known construction and check it.
    Construct {
        #[command(subcommand)]
        what: Construct,
        /// Output file; standard output if omitted.
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
    },
    /// Decide whether some k-coloring of K_n avoids the pattern.
    Search {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        k: u16,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
        /// Where to write a found coloring (default `<pattern>_k<k>_n<n>.hrc`).
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Compute ex(n, pattern).
    Turan {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
        /// Write the extremal hypergraph as a one-color HRC1 file.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Best verified interval for r_k(pattern).
    Bounds {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        k: u16,
        #[arg(long, default_value_t = 50_000_000)]
        search_budget: u64,
        #[arg(long, default_value_t = 5_000_000)]
        turan_budget: u64,
        #[arg(long, default_value_t = 12)]
        turan_n_cap: usize,
        #[arg(long, default_value_t = 10)]
        search_n_cap: usize,
    },
    /// Certificate catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Block designs.
    Design {
        #[command(subcommand)]
        action: DesignAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// Lift an r-uniform coloring on n vertices to an (r+1)-uniform one on 2^n.
    SteppingUp {
        #[arg(long)]
        input: PathBuf,
    },
    /// Lift a pair coloring without monochromatic triangles to a K43e-free triple coloring.
    K43e {
        #[arg(long)]
        input: PathBuf,
    },
    /// Triple ijl gets (i+j+l) mod m.
    SumMod {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u16,
    },
    /// Kneser coloring of K_{k+2r-2}^r without a monochromatic 2-matching.
    Kneser {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: u16,
    },
    /// Cover the complete host with k random copies of a base hypergraph.
    RandomCover {
        /// HRC1 file; its assigned edges form the base.
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        k: u16,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        retries: u32,
        /// Also check that no class contains this pattern.
        #[arg(long)]
        pattern: Option<String>,
    },
    /// Pasch-free triple system from the projective plane of order q.
    PaschHost {
        #[arg(long)]
        q: u32,
    },
    /// A named catalog certificate.
    Certificate {
        #[arg(long)]
        name: String,
    },
    /// Bow-free coloring from a 3-(v,4,1) design.
    DesignColoring {
        /// DES1 file; if omitted a 3-(v,4,1) design is searched for.
        #[arg(long, conflicts_with = "v")]
        design: Option<PathBuf>,
        #[arg(long)]
        v: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Resolve)]
        method: Method,
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Method {
    /// One color per parallel class.
    Resolve,
    /// One color per pair of disjoint blocks.
    Pairs,
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// List certificate names with their pattern, k and n.
    List,
    /// Write every certificate as `<name>.hrc` into a directory.
    Export {
        #[arg(long)]
        dir: PathBuf,
    },
    /// Check every file in the catalog directory against its declared pattern.
    Check,
}

#[derive(Debug, Subcommand)]
pub enum DesignAction {
    /// Search for a t-(v,k,lambda) design.
    Find(DesignParams),
    /// Check a DES1 file.
    Verify {
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 1)]
        lambda: u64,
        path: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct DesignParams {
    #[arg(long)]
    pub t: usize,
    #[arg(long)]
    pub v: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 1)]
    pub lambda: u64,
    #[arg(long, default_value_t = 50_000_000)]
    pub budget: u64,
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}
