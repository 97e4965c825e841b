//! `caprng search`: enumerate coprime component pairs and spacings, classify
//! each combination, and keep a resumable results file.

use super::catalog::FamilyArg;
use super::report::RankModeArg;
use crate::selection::Context;
use anyhow::Result;
use caprng_core::catalog::Family;
use caprng_core::equidist::MeVerdict;
use caprng_core::search::{enumerate, read_checkpoint, write_checkpoint, N1Filter, SearchSpace};
use clap::{Args, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum N1FilterArg {
    Close,
    Notclose,
    Any,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long, default_value_t = 32)]
    pub k_min: usize,
    #[arg(long, default_value_t = 64)]
    pub k_max: usize,
    #[arg(long, default_value_t = 2)]
    pub s_min: usize,
    #[arg(long, default_value_t = 10)]
    pub s_max: usize,
    /// Polynomial-weight filter on the components
    #[arg(long, value_enum, default_value_t = N1FilterArg::Any)]
    pub n1: N1FilterArg,
    /// Component family (default table-mca; `any` disables the filter)
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    #[arg(long, value_enum, default_value_t = RankModeArg::Rational)]
    pub rank_mode: RankModeArg,
    #[arg(long, default_value_t = 32)]
    pub word_size: usize,
    /// Results/checkpoint file; existing (k1,k2,s) lines are not recomputed
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print every result line, not just the summary
    #[arg(long)]
    pub verbose: bool,
}

pub fn run(ctx: &Context, args: SearchArgs) -> Result<()> {
    let mut space = SearchSpace::new(args.k_min, args.k_max, args.s_min, args.s_max)?;
    space.family = Some(args.family.map(Family::from).unwrap_or(Family::TableMca));
    space.n1_filter = match args.n1 {
        N1FilterArg::Close => N1Filter::CloseToHalf,
        N1FilterArg::Notclose => N1Filter::NotCloseToHalf,
        N1FilterArg::Any => N1Filter::Any,
    };
    space.rank_mode = args.rank_mode.into();
    space.word_size = args.word_size;

    let mut checkpoint = match &args.out {
        Some(path) => read_checkpoint(path)?,
        None => Default::default(),
    };
    let resumed = checkpoint.len();
    if resumed > 0 {
        eprintln!("resuming: {resumed} combinations already in checkpoint");
    }

    let skip: std::collections::BTreeSet<_> = checkpoint.keys().copied().collect();
    let results = enumerate(&space, &ctx.entries, &skip, |r| {
        if args.verbose {
            println!("{}", r.to_line());
        }
    })?;

    for r in &results {
        checkpoint.insert((r.k1, r.k2, r.s), r.to_line());
    }
    if let Some(path) = &args.out {
        write_checkpoint(path, &checkpoint)?;
        eprintln!(
            "wrote {} result lines to {}",
            checkpoint.len(),
            path.display()
        );
    }

    let me: Vec<_> = results
        .iter()
        .filter(|r| r.verdict == MeVerdict::MaximallyEquidistributed)
        .collect();
    let me_maximal = me.iter().filter(|r| r.period.close_to_maximal).count();
    println!(
        "{} combinations computed ({} resumed); {} ME, of those {} with close-to-maximal period",
        results.len(),
        resumed,
        me.len(),
        me_maximal
    );
    for r in me {
        println!(
            "  ME: ({},{},{}) log2rho={:.2}{}",
            r.k1,
            r.k2,
            r.s,
            r.period.log2_rho,
            if r.period.close_to_maximal {
                " maximal"
            } else {
                ""
            }
        );
    }
    Ok(())
}
