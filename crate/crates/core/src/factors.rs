//! Factor table for Mersenne numbers 2^k - 1, 2 <= k <= 128.
//!
//! Maximality verification needs the prime factorization of 2^k - 1; factoring
//! those on the fly is out of scope, so a static table ships with the crate.
//! Format: one line per k, `k: p1 p2 p3 ...`, decimal primes with multiplicity.

use num_bigint::BigUint;
use num_traits::One;
use std::collections::BTreeMap;
use thiserror::Error;

pub const SHIPPED_FACTORS: &str = include_str!("../data/mersenne_factors.txt");

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FactorTableError {
    #[error("line {0}: expected `k: p1 p2 ...`")]
    Malformed(usize),
    #[error("line {line}: product of factors does not equal 2^{k} - 1")]
    BadProduct { line: usize, k: usize },
    #[error("duplicate entry for k = {0}")]
    Duplicate(usize),
}

#[derive(Debug, Clone)]
pub struct FactorTable {
    entries: BTreeMap<usize, Vec<BigUint>>,
}

impl FactorTable {
    /// Parses a table, checking that every line's factors multiply back to
    /// 2^k - 1.
    pub fn parse(text: &str) -> Result<Self, FactorTableError> {
        let mut entries = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k_str, rest) = line
                .split_once(':')
                .ok_or(FactorTableError::Malformed(lineno))?;
            let k: usize = k_str
                .trim()
                .parse()
                .map_err(|_| FactorTableError::Malformed(lineno))?;
            let mut factors = Vec::new();
            let mut product = BigUint::one();
            for tok in rest.split_whitespace() {
                let p: BigUint = tok
                    .parse()
                    .map_err(|_| FactorTableError::Malformed(lineno))?;
                product *= &p;
                factors.push(p);
            }
            if factors.is_empty() {
                return Err(FactorTableError::Malformed(lineno));
            }
            let mersenne = (BigUint::one() << k) - BigUint::one();
            if product != mersenne {
                return Err(FactorTableError::BadProduct { line: lineno, k });
            }
            if entries.insert(k, factors).is_some() {
                return Err(FactorTableError::Duplicate(k));
            }
        }
        Ok(Self { entries })
    }

    /// The table bundled with the crate (k = 2..=128).
    pub fn shipped() -> Self {
        Self::parse(SHIPPED_FACTORS).expect("shipped factor table is valid")
    }

    pub fn factors(&self, k: usize) -> Option<&[BigUint]> {
        self.entries.get(&k).map(|v| v.as_slice())
    }

    /// Distinct primes dividing 2^k - 1.
    pub fn distinct_primes(&self, k: usize) -> Option<Vec<&BigUint>> {
        let list = self.entries.get(&k)?;
        let mut out: Vec<&BigUint> = Vec::new();
        for p in list {
            if out.last() != Some(&p) {
                out.push(p);
            }
        }
        Some(out)
    }

    pub fn max_k(&self) -> usize {
        self.entries.keys().next_back().copied().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_table_covers_2_through_128() {
        let t = FactorTable::shipped();
        for k in 2..=128 {
            assert!(t.factors(k).is_some(), "missing k={k}");
        }
        assert_eq!(t.max_k(), 128);
    }

    #[test]
    fn small_entries() {
        let t = FactorTable::shipped();
        assert_eq!(t.factors(2).unwrap(), &[BigUint::from(3u8)]);
        assert_eq!(
            t.factors(4).unwrap(),
            &[BigUint::from(3u8), BigUint::from(5u8)]
        );
        // 2^31 - 1 is prime
        assert_eq!(t.factors(31).unwrap(), &[BigUint::from(2147483647u32)]);
        // distinct primes of 2^30-1 = 3^2 * 7 * 11 * 31 * 151 * 331
        let d = t.distinct_primes(30).unwrap();
        assert_eq!(d.len(), 6);
    }

    #[test]
    fn bad_product_rejected() {
        let err = FactorTable::parse("3: 3 3").unwrap_err();
        assert_eq!(err, FactorTableError::BadProduct { line: 1, k: 3 });
    }

    #[test]
    fn malformed_rejected() {
        assert_eq!(
            FactorTable::parse("nope").unwrap_err(),
            FactorTableError::Malformed(1)
        );
        assert_eq!(
            FactorTable::parse("5:").unwrap_err(),
            FactorTableError::Malformed(1)
        );
    }

    #[test]
    fn duplicate_rejected() {
        assert_eq!(
            FactorTable::parse("2: 3\n2: 3").unwrap_err(),
            FactorTableError::Duplicate(2)
        );
    }
}
