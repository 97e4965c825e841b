//! Shared context (catalog + factor table) and generator selection flags.

use anyhow::{anyhow, bail, Context as _, Result};
use caprng_core::bitlinalg::BitVector;
use caprng_core::catalog::{self, CatalogEntry};
use caprng_core::combined::{GeneratorSpec, PaddingSide};
use caprng_core::factors::FactorTable;
use clap::{Args, ValueEnum};
use num_bigint::BigUint;
use num_traits::Zero;
use rand::RngCore;
use std::path::Path;

pub struct Context {
    pub entries: Vec<CatalogEntry>,
    pub factors: FactorTable,
}

impl Context {
    /// Resolution order: explicit flag, then environment variable, then the
    /// data embedded in the library.
    pub fn load(catalog_path: Option<&Path>, factor_path: Option<&Path>) -> Result<Self> {
        let factor_text = match resolve(factor_path, "CAPRNG_FACTORS")? {
            Some(text) => text,
            None => caprng_core::factors::SHIPPED_FACTORS.to_string(),
        };
        let factors = FactorTable::parse(&factor_text).context("parsing factor table")?;
        let catalog_text = match resolve(catalog_path, "CAPRNG_CATALOG")? {
            Some(text) => text,
            None => catalog::SHIPPED_CATALOG.to_string(),
        };
        let entries = catalog::load_catalog(&catalog_text, &factors, catalog::LOAD_VERIFY_CAP)
            .context("loading catalog")?;
        Ok(Self { entries, factors })
    }

    pub fn by_id(&self, id: &str) -> Result<&CatalogEntry> {
        catalog::find_by_id(&self.entries, id).ok_or_else(|| anyhow!("no catalog entry `{id}`"))
    }

    pub fn table_mca(&self, k: usize) -> Result<&CatalogEntry> {
        catalog::find_table_mca(&self.entries, k)
            .ok_or_else(|| anyhow!("no table-mca entry of size {k}"))
    }
}

fn resolve(flag: Option<&Path>, env: &str) -> Result<Option<String>> {
    if let Some(p) = flag {
        return Ok(Some(
            std::fs::read_to_string(p).with_context(|| format!("reading {p:?}"))?,
        ));
    }
    if let Ok(p) = std::env::var(env) {
        return Ok(Some(
            std::fs::read_to_string(&p).with_context(|| format!("reading {env}={p}"))?,
        ));
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PaddingArg {
    Left,
    Right,
}

impl From<PaddingArg> for PaddingSide {
    fn from(p: PaddingArg) -> Self {
        match p {
            PaddingArg::Left => PaddingSide::Left,
            PaddingArg::Right => PaddingSide::Right,
        }
    }
}

/// Flags that pick one or two components and assemble a generator.
#[derive(Args, Debug, Clone)]
pub struct SpecArgs {
    /// Size of the first component (table-mca row)
    #[arg(long)]
    pub k1: Option<usize>,
    /// Size of the second component (table-mca row)
    #[arg(long)]
    pub k2: Option<usize>,
    /// Catalog id of the first component (overrides --k1)
    #[arg(long)]
    pub id1: Option<String>,
    /// Catalog id of the second component (overrides --k2)
    #[arg(long)]
    pub id2: Option<String>,
    /// Time spacing: CA steps per emitted number
    #[arg(long, short = 's', default_value_t = 1)]
    pub s: usize,
    /// Output width in bits (default: 32, clamped to the combined width)
    #[arg(long, short = 'w')]
    pub w: Option<usize>,
    /// Zero-extension side for the shorter component
    #[arg(long, value_enum, default_value_t = PaddingArg::Left)]
    pub padding: PaddingArg,
}

impl SpecArgs {
    pub fn entries<'c>(&self, ctx: &'c Context) -> Result<Vec<&'c CatalogEntry>> {
        let mut out = Vec::new();
        match (&self.id1, self.k1) {
            (Some(id), _) => out.push(ctx.by_id(id)?),
            (None, Some(k)) => out.push(ctx.table_mca(k)?),
            (None, None) => bail!("select a component with --k1 or --id1"),
        }
        match (&self.id2, self.k2) {
            (Some(id), _) => out.push(ctx.by_id(id)?),
            (None, Some(k)) => out.push(ctx.table_mca(k)?),
            (None, None) => {}
        }
        Ok(out)
    }

    pub fn build(&self, ctx: &Context) -> Result<(GeneratorSpec, Vec<String>)> {
        let entries = self.entries(ctx)?;
        let ids = entries.iter().map(|e| e.id.clone()).collect();
        let width = entries
            .iter()
            .map(|e| e.k)
            .max()
            .expect("at least one component");
        let w = self.w.unwrap_or_else(|| 32.min(width));
        let spec = GeneratorSpec::from_entries(&entries, self.s, w, self.padding.into())?;
        Ok((spec, ids))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeedMode {
    /// Explicit --seed1/--seed2 hex values
    Hex,
    /// Operating-system entropy (the chosen seeds are echoed for replay)
    Entropy,
    /// Middle cell 1, all other cells 0
    Middle,
}

#[derive(Args, Debug, Clone)]
pub struct SeedArgs {
    #[arg(long, value_enum, default_value_t = SeedMode::Middle)]
    pub seed_mode: SeedMode,
    /// Hex seed for component 1 (cell 0 is the most significant bit)
    #[arg(long)]
    pub seed1: Option<String>,
    /// Hex seed for component 2
    #[arg(long)]
    pub seed2: Option<String>,
}

impl SeedArgs {
    pub fn materialize(&self, spec: &GeneratorSpec) -> Result<Vec<BitVector>> {
        let sizes: Vec<usize> = spec.component_sizes();
        match self.seed_mode {
            SeedMode::Middle => Ok(spec.middle_bit_seeds()),
            SeedMode::Entropy => {
                let mut rng = rand::rngs::OsRng;
                Ok(sizes
                    .iter()
                    .map(|&k| loop {
                        let mut v = BitVector::zeros(k).expect("k >= 1");
                        for w in v.words_mut() {
                            *w = rng.next_u64();
                        }
                        v.mask_tail();
                        if !v.is_zero() {
                            break v;
                        }
                    })
                    .collect())
            }
            SeedMode::Hex => {
                let given = [self.seed1.as_ref(), self.seed2.as_ref()];
                let mut out = Vec::new();
                for (j, &k) in sizes.iter().enumerate() {
                    let hex = given[j]
                        .ok_or_else(|| anyhow!("--seed{} required with --seed-mode hex", j + 1))?;
                    out.push(parse_seed_hex(hex, k)?);
                }
                Ok(out)
            }
        }
    }
}

/// Hex seed as a k-bit value; bit k-1 of the value is cell 0.
pub fn parse_seed_hex(hex: &str, k: usize) -> Result<BitVector> {
    let value = BigUint::parse_bytes(hex.trim_start_matches("0x").as_bytes(), 16)
        .ok_or_else(|| anyhow!("invalid hex seed `{hex}`"))?;
    if value.bits() as usize > k {
        bail!("seed `{hex}` does not fit in {k} bits");
    }
    let mut v = BitVector::zeros(k)?;
    for i in 0..k {
        if value.bit((k - 1 - i) as u64) {
            v.set(i, true);
        }
    }
    Ok(v)
}

/// Canonical hex of a configuration, inverse of [`parse_seed_hex`].
pub fn seed_to_hex(v: &BitVector) -> String {
    let k = v.len();
    let mut value = BigUint::zero();
    for i in 0..k {
        if v.get(i) {
            value.set_bit((k - 1 - i) as u64, true);
        }
    }
    format!("{value:x}")
}
