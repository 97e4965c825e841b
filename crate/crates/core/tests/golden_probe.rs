//! Spot checks of the headline verdict-table values at the library level.
//! The full table reproductions live in the CLI crate's acceptance suite.

use caprng_core::catalog::{find_by_id, find_table_mca, shipped_catalog};
use caprng_core::combined::{GeneratorSpec, PaddingSide};
use caprng_core::equidist::{check_tl, EquidistQuery, RankMode};
use caprng_core::factors::FactorTable;

#[test]
fn r1_bist_rank_spots() {
    let entries = shipped_catalog(&FactorTable::shipped());
    let r1 = find_by_id(&entries, "r1-bist").unwrap();
    let spec = GeneratorSpec::from_entries(&[r1], 1, 32, PaddingSide::Left).unwrap();
    for (t, l, rational, gf2) in [(2, 16, 18, 17), (16, 2, 17, 17), (32, 1, 32, 32)] {
        let q = EquidistQuery { t, l };
        assert_eq!(
            check_tl(&spec, q, RankMode::Rational).unwrap().0,
            rational,
            "t={t} rational"
        );
        assert_eq!(
            check_tl(&spec, q, RankMode::Gf2).unwrap().0,
            gf2,
            "t={t} gf2"
        );
    }
}

#[test]
fn combined_31_32_rank_spots() {
    let entries = shipped_catalog(&FactorTable::shipped());
    let e31 = find_table_mca(&entries, 31).unwrap();
    let e32 = find_table_mca(&entries, 32).unwrap();
    let spec = GeneratorSpec::from_entries(&[e31, e32], 1, 32, PaddingSide::Left).unwrap();
    for (t, l, rational) in [(2, 31, 39), (3, 21, 33), (31, 2, 62), (63, 1, 63)] {
        let q = EquidistQuery { t, l };
        assert_eq!(
            check_tl(&spec, q, RankMode::Rational).unwrap().0,
            rational,
            "t={t}"
        );
    }
    let spaced = GeneratorSpec::from_entries(&[e31, e32], 7, 32, PaddingSide::Left).unwrap();
    let (rank, equi) =
        check_tl(&spaced, EquidistQuery { t: 2, l: 31 }, RankMode::Rational).unwrap();
    assert_eq!((rank, equi), (62, true));
}

#[test]
fn combined_31_32_period_arithmetic() {
    use num_bigint::BigUint;
    use num_traits::One;
    let entries = shipped_catalog(&FactorTable::shipped());
    let e31 = find_table_mca(&entries, 31).unwrap();
    let e32 = find_table_mca(&entries, 32).unwrap();
    let rho0 =
        ((BigUint::one() << 31u32) - BigUint::one()) * ((BigUint::one() << 32u32) - BigUint::one());
    // close-to-maximal spacings for this pair are exactly {2, 4, 7, 8}
    for s in 2..=10usize {
        let spec = GeneratorSpec::from_entries(&[e31, e32], s, 32, PaddingSide::Left).unwrap();
        let period = spec.period();
        let expect_maximal = matches!(s, 2 | 4 | 7 | 8);
        assert_eq!(period.close_to_maximal, expect_maximal, "s={s}");
        if expect_maximal {
            assert_eq!(period.rho, rho0);
            assert!((period.log2_rho - 63.0).abs() < 0.01);
        }
    }
    // s=9 cuts the period by gcd(9, rho) = 3
    let spec9 = GeneratorSpec::from_entries(&[e31, e32], 9, 32, PaddingSide::Left).unwrap();
    let p9 = spec9.period();
    assert_eq!(p9.rho, &rho0 / BigUint::from(3u8));
    assert!((p9.log2_rho - (63.0 - 3f64.log2())).abs() < 0.01);
}
