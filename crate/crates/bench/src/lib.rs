//! Benchmark-only crate; see the `benches/` directory.

use caprng_core::catalog::{find_table_mca, shipped_catalog, CatalogEntry};
use caprng_core::combined::{GeneratorSpec, PaddingSide};
use caprng_core::factors::FactorTable;

/// The flagship combined generator used across the benchmarks.
pub fn standard_pair(k1: usize, k2: usize, s: usize) -> GeneratorSpec {
    let entries = shipped_catalog(&FactorTable::shipped());
    let a: &CatalogEntry = find_table_mca(&entries, k1).expect("catalog row");
    let b: &CatalogEntry = find_table_mca(&entries, k2).expect("catalog row");
    GeneratorSpec::from_entries(&[a, b], s, 32, PaddingSide::Left).expect("valid spec")
}
