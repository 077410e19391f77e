use std::path::PathBuf;

use clap::{Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "pentforge", version, about = "Build, verify and catalogue pentagonal geometries PENT(k,r)")]
pub struct Cli {
    /// Write generated designs without verifying them first.
    #[arg(long, global = true)]
    pub no_verify: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a design or orbit file is a pentagonal geometry.
    Verify { file: PathBuf },
    /// Opposite line pairs and the structure of the deficiency graph.
    Analyze { file: PathBuf },
    /// Develop an orbit file into an explicit design.
    Expand {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct a PENT(3,r) from a triple system or PBD.
    #[command(subcommand)]
    Build(Build),
    /// Fill the groups of a GDD with pentagonal geometries.
    Compose {
        #[arg(long)]
        gdd: PathBuf,
        /// One design per group, in group order.
        #[arg(long = "part", required = true)]
        parts: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count or list the PENT(2,r).
    #[command(subcommand)]
    Pent2(Pent2),
    /// Search for a geometry with a prescribed deficiency graph.
    Complete {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 100_000_000)]
        nodes: u64,
        #[arg(long, default_value_t = 60.0)]
        seconds: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The bundled geometries.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Recorded existence status of PENT(k,r).
    Spectrum { k: usize, r: usize },
    /// Point and line counts of PENT(k,r).
    Params { k: usize, r: usize },
}

#[derive(Debug, Subcommand)]
pub enum Build {
    /// Reduced Bose construction from a Steiner triple system.
    Bose {
        #[arg(long)]
        sts: PathBuf,
        #[arg(long)]
        drop: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The same construction from a PBD(v,{3,5*}).
    Pbd {
        #[arg(long)]
        pbd: PathBuf,
        #[arg(long)]
        drop: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Pent2 {
    /// Number of PENT(2,r) up to isomorphism.
    Count { r: usize },
    /// One PENT(2,r) per cycle type.
    Enumerate {
        r: usize,
        #[arg(long)]
        outdir: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCmd {
    /// Entries with their expected statistics.
    List,
    /// Verify every entry against its expected statistics.
    VerifyAll,
}
