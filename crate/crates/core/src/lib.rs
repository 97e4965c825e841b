//! Bit-exact toolkit for rule-90/150 cellular-automaton pseudo-random number
//! generators: GF(2) linear algebra, null-boundary CA evolution, a registry
//! of maximal-length component CAs, XOR-combined generators with time
//! spacing, period arithmetic, and (t, l)-equidistribution analysis with
//! maximal-equidistribution verdicts.

pub mod bitlinalg;
pub mod ca;
pub mod catalog;
pub mod chaos;
pub mod combined;
pub mod equidist;
pub mod factors;
pub mod search;

pub use bitlinalg::{BitMatrix, BitVector, DimensionError};
pub use ca::{CaError, CellRule, Gf2Poly, MaximalityCheck, RuleVector};
pub use catalog::{CatalogEntry, CatalogError, Family, MaximalStatus};
pub use combined::{
    Component, GeneratorError, GeneratorSpec, GeneratorState, PaddingSide, PeriodReport,
};
pub use equidist::{
    me_verdict, phi_sets, psi_sets, EquidistError, EquidistQuery, EquidistReport, MeVerdict,
    RankMode,
};
pub use factors::{FactorTable, FactorTableError};
