//! `caprng catalog`: list registry entries with weight, maximality status,
//! and chaos parameters.

use crate::selection::Context;
use anyhow::Result;
use caprng_core::catalog::{Family, MaximalStatus};
use caprng_core::chaos::p_parameter;
use clap::{Args, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    TableMca,
    Ca90prime,
    Ca150prime,
    Literature,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::TableMca => Family::TableMca,
            FamilyArg::Ca90prime => Family::Ca90Prime,
            FamilyArg::Ca150prime => Family::Ca150Prime,
            FamilyArg::Literature => Family::Literature,
        }
    }
}

#[derive(Args, Debug)]
pub struct CatalogArgs {
    /// Keep only this family
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    /// Keep only entries of this size
    #[arg(long)]
    pub k: Option<usize>,
    /// Re-run the matrix-order maximality test for entries up to this size
    /// (load time covers k <= 32)
    #[arg(long)]
    pub verify_up_to: Option<usize>,
}

pub fn run(ctx: &Context, args: CatalogArgs) -> Result<()> {
    let family = args.family.map(Family::from);
    println!(
        "{:<14} {:<11} {:>5} {:>4} {:>6}  {:<10} {:<8} positions",
        "id", "family", "k", "n1", "n1/k", "maximal", "P"
    );
    let mut shown = 0;
    for e in &ctx.entries {
        if family.is_some_and(|f| e.family != f) || args.k.is_some_and(|k| e.k != k) {
            continue;
        }
        let mut maximal = e.maximal;
        if maximal == MaximalStatus::AssumedFromSource
            && args.verify_up_to.is_some_and(|cap| e.k <= cap)
        {
            maximal = match e.build_rule_vector().verify_maximal_period(&ctx.factors) {
                Ok(caprng_core::ca::MaximalityCheck::Maximal { .. }) => MaximalStatus::Verified,
                Ok(caprng_core::ca::MaximalityCheck::NotMaximal) => MaximalStatus::Failed,
                Err(_) => maximal, // no factorization for this size
            };
        }
        let status = match maximal {
            MaximalStatus::Verified => "verified",
            MaximalStatus::AssumedFromSource => "assumed",
            MaximalStatus::Failed => "FAILED",
        };
        let (p1, p2) = p_parameter(&e.build_rule_vector());
        let positions = if e.rule150_positions.len() > 12 {
            format!("({} cells)", e.rule150_positions.len())
        } else {
            e.rule150_positions
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let n1 = if e.source_n1 != e.n1 {
            format!("{}*", e.n1) // starred: source table printed a different weight
        } else {
            e.n1.to_string()
        };
        println!(
            "{:<14} {:<11} {:>5} {:>4} {:>6.2}  {:<10} ({p1},{p2})  {}",
            e.id,
            e.family.name(),
            e.k,
            n1,
            e.n1_ratio(),
            status,
            positions
        );
        shown += 1;
    }
    println!("{shown} entries");
    Ok(())
}
