//! `caprng bench`: wall-clock throughput of the word-parallel generator.
//! Numbers are machine-dependent; the checksum line keeps the loop honest.

use crate::selection::{Context, SeedArgs, SpecArgs};
use anyhow::{bail, Result};
use clap::Args;
use std::time::Instant;

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    #[command(flatten)]
    pub seeds: SeedArgs,
    /// Number of 32-bit words to generate
    #[arg(long, default_value_t = 10_000_000)]
    pub count: u64,
}

pub fn run(ctx: &Context, args: BenchArgs) -> Result<()> {
    if args.count == 0 {
        bail!("--count must be at least 1");
    }
    let (spec, ids) = args.spec.build(ctx)?;
    let seeds = args.seeds.materialize(&spec)?;
    let mut state = spec.seed(&seeds)?;
    let start = Instant::now();
    let mut checksum = 0u32;
    for _ in 0..args.count {
        checksum ^= spec.next(&mut state);
    }
    let elapsed = start.elapsed().as_secs_f64();
    println!(
        "generator {} s={}: {} words in {:.3} s = {:.3e} words/s (machine-dependent; checksum {checksum:08x})",
        ids.join("+"),
        spec.spacing(),
        args.count,
        elapsed,
        args.count as f64 / elapsed,
    );
    Ok(())
}
