//! `caprng`: construct, run, and analyze rule-90/150 CA pseudo-random number
//! generators from the command line.

mod commands;
mod pbm;
mod selection;

use anyhow::Result;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "caprng",
    version,
    about = "Combined rule-90/150 CA PRNG toolkit"
)]
struct Cli {
    /// Catalog file (default: $CAPRNG_CATALOG, then the embedded registry)
    #[arg(long, global = true)]
    catalog_file: Option<std::path::PathBuf>,
    /// Mersenne factor table (default: $CAPRNG_FACTORS, then the embedded table)
    #[arg(long, global = true)]
    factor_file: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit raw little-endian 32-bit words (headerless, testbed-ready)
    Generate(commands::generate::GenerateArgs),
    /// Render space-time diagrams as binary PBM (P4) images
    Spacetime(commands::spacetime::SpacetimeArgs),
    /// Period and equidistribution report for one generator
    Report(commands::report::ReportArgs),
    /// Measure generator throughput
    Bench(commands::bench::BenchArgs),
    /// List component CAs from the registry
    Catalog(commands::catalog::CatalogArgs),
    /// Enumerate coprime pairs and spacings, classifying each combination
    Search(commands::search::SearchArgs),
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    let ctx = selection::Context::load(cli.catalog_file.as_deref(), cli.factor_file.as_deref())?;
    match cli.command {
        Command::Generate(args) => commands::generate::run(&ctx, args),
        Command::Spacetime(args) => commands::spacetime::run(&ctx, args),
        Command::Report(args) => commands::report::run(&ctx, args),
        Command::Bench(args) => commands::bench::run(&ctx, args),
        Command::Catalog(args) => commands::catalog::run(&ctx, args),
        Command::Search(args) => commands::search::run(&ctx, args),
    }
}
