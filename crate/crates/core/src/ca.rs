//! Null-boundary elementary CA evolution for rule vectors over {90, 150}.
//!
//! The direct stepper works word-parallel on the packed configuration:
//! `(c >> 1) ^ (c << 1) ^ (mask150 & c)`, with the missing neighbors of the
//! terminal cells fixed at zero. The characteristic matrix path is kept as a
//! slower, independently-derived oracle for it.

use crate::bitlinalg::{BitMatrix, BitVector, DimensionError};
use crate::factors::FactorTable;
use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CaError {
    #[error("rule vector must be non-empty")]
    EmptyRuleVector,
    #[error("only rules 90 and 150 are supported, got {0}")]
    UnsupportedRule(u16),
    #[error("configuration length {config} does not match CA size {ca}")]
    LengthMismatch { config: usize, ca: usize },
    #[error("no factorization of 2^{0} - 1 available")]
    UnsupportedSize(usize),
    #[error("the zero polynomial has no coefficient count")]
    ZeroPolynomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellRule {
    Rule90,
    Rule150,
}

impl CellRule {
    pub fn number(self) -> u16 {
        match self {
            CellRule::Rule90 => 90,
            CellRule::Rule150 => 150,
        }
    }
}

/// Per-cell rule assignment; defines one CA component. Cell 0 is leftmost.
#[derive(Clone, PartialEq, Eq)]
pub struct RuleVector {
    cells: Vec<CellRule>,
    mask150: Vec<u64>,
    tail_mask: u64,
}

impl RuleVector {
    pub fn new(cells: Vec<CellRule>) -> Result<Self, CaError> {
        if cells.is_empty() {
            return Err(CaError::EmptyRuleVector);
        }
        let k = cells.len();
        let mut mask150 = vec![0u64; k.div_ceil(64)];
        for (i, rule) in cells.iter().enumerate() {
            if *rule == CellRule::Rule150 {
                mask150[i / 64] |= 1 << (i % 64);
            }
        }
        let tail_mask = if k.is_multiple_of(64) {
            u64::MAX
        } else {
            (1u64 << (k % 64)) - 1
        };
        Ok(Self {
            cells,
            mask150,
            tail_mask,
        })
    }

    pub fn from_numbers(rules: &[u16]) -> Result<Self, CaError> {
        let cells = rules
            .iter()
            .map(|&r| match r {
                90 => Ok(CellRule::Rule90),
                150 => Ok(CellRule::Rule150),
                other => Err(CaError::UnsupportedRule(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(cells)
    }

    /// Uniform rule 90 with rule 150 at the given 0-indexed cells.
    pub fn with_rule150_at(k: usize, cells150: &[usize]) -> Result<Self, CaError> {
        if k == 0 {
            return Err(CaError::EmptyRuleVector);
        }
        let mut cells = vec![CellRule::Rule90; k];
        for &i in cells150 {
            assert!(i < k, "rule-150 cell {i} out of range for k={k}");
            cells[i] = CellRule::Rule150;
        }
        Self::new(cells)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn cells(&self) -> &[CellRule] {
        &self.cells
    }

    pub fn rule(&self, i: usize) -> CellRule {
        self.cells[i]
    }

    /// Advances `config` by one step, in place. The word loop keeps the
    /// original neighbor words on hand so the update stays synchronous.
    pub fn step_in_place(&self, config: &mut BitVector) -> Result<(), CaError> {
        let k = self.len();
        if config.len() != k {
            return Err(CaError::LengthMismatch {
                config: config.len(),
                ca: k,
            });
        }
        let words = config.words_mut();
        let n = words.len();
        let mut prev_orig = 0u64;
        for i in 0..n {
            let cur = words[i];
            let next = if i + 1 < n { words[i + 1] } else { 0 };
            // bit j: left neighbor = bit j-1 (comes in via << 1), right = >> 1
            words[i] = ((cur << 1) | (prev_orig >> 63))
                ^ ((cur >> 1) | (next << 63))
                ^ (cur & self.mask150[i]);
            prev_orig = cur;
        }
        words[n - 1] &= self.tail_mask;
        Ok(())
    }

    /// One CA step as a fresh configuration.
    pub fn step(&self, config: &BitVector) -> Result<BitVector, CaError> {
        let mut next = config.clone();
        self.step_in_place(&mut next)?;
        Ok(next)
    }

    /// The k x k dependence matrix: sub/super-diagonal 1, diagonal 1 exactly
    /// at rule-150 cells.
    pub fn characteristic_matrix(&self) -> BitMatrix {
        let k = self.len();
        let mut t = BitMatrix::zeros(k, k).expect("k >= 1");
        for i in 0..k {
            if i > 0 {
                t.set(i, i - 1, true);
            }
            if i + 1 < k {
                t.set(i, i + 1, true);
            }
            if self.cells[i] == CellRule::Rule150 {
                t.set(i, i, true);
            }
        }
        t
    }

    /// Characteristic polynomial via the tridiagonal three-term recurrence
    /// `p_i = (x + d_i) p_{i-1} + p_{i-2}` over GF(2); degree is exactly k.
    pub fn char_poly(&self) -> Gf2Poly {
        let mut prev = Gf2Poly::zero();
        let mut cur = Gf2Poly::one();
        for rule in &self.cells {
            let mut next = cur.mul_x();
            if *rule == CellRule::Rule150 {
                next.xor_assign(&cur);
            }
            next.xor_assign(&prev);
            prev = cur;
            cur = next;
        }
        cur
    }

    /// Matrix-order test for the maximal period 2^k - 1: `T^(2^k-1) = I` and
    /// `T^((2^k-1)/p) != I` for every prime p dividing 2^k - 1.
    pub fn verify_maximal_period(&self, factors: &FactorTable) -> Result<MaximalityCheck, CaError> {
        let k = self.len();
        let primes = factors
            .distinct_primes(k)
            .ok_or(CaError::UnsupportedSize(k))?;
        let t = self.characteristic_matrix();
        let order = (BigUint::one() << k) - BigUint::one();
        let identity = BitMatrix::identity(k).expect("k >= 1");
        if t.mat_pow(&order).expect("square") != identity {
            return Ok(MaximalityCheck::NotMaximal);
        }
        for p in primes {
            let reduced = &order / p;
            if t.mat_pow(&reduced).expect("square") == identity {
                return Ok(MaximalityCheck::NotMaximal);
            }
        }
        Ok(MaximalityCheck::Maximal { order })
    }
}

impl std::fmt::Debug for RuleVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<")?;
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c.number())?;
        }
        write!(f, ">")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MaximalityCheck {
    Maximal { order: BigUint },
    NotMaximal,
}

/// Polynomial over GF(2); bit `i` of word `i / 64` is the coefficient of x^i.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Poly {
    words: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self { words: vec![1] }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Degree of the polynomial; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate().rev() {
            if w != 0 {
                return Some(i * 64 + 63 - w.leading_zeros() as usize);
            }
        }
        None
    }

    pub fn coefficient(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    fn mul_x(&self) -> Gf2Poly {
        let mut words = vec![0u64; self.words.len() + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i] |= w << 1;
            words[i + 1] |= w >> 63;
        }
        let mut p = Gf2Poly { words };
        p.trim();
        p
    }

    fn xor_assign(&mut self, other: &Gf2Poly) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Evaluates the polynomial at a square matrix (Cayley-Hamilton checks).
    pub fn eval_matrix(&self, m: &BitMatrix) -> Result<BitMatrix, DimensionError> {
        let n = m.rows();
        let mut acc = BitMatrix::zeros(n, n)?;
        let mut power = BitMatrix::identity(n)?;
        let deg = match self.degree() {
            Some(d) => d,
            None => return Ok(acc),
        };
        for i in 0..=deg {
            if self.coefficient(i) {
                for r in 0..n {
                    for c in 0..n {
                        if power.get(r, c) {
                            acc.set(r, c, !acc.get(r, c));
                        }
                    }
                }
            }
            if i < deg {
                power = power.mat_mul(m)?;
            }
        }
        Ok(acc)
    }
}

impl std::fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.degree() {
            None => write!(f, "0"),
            Some(d) => {
                let mut first = true;
                for i in (0..=d).rev() {
                    if self.coefficient(i) {
                        if !first {
                            write!(f, " + ")?;
                        }
                        match i {
                            0 => write!(f, "1")?,
                            1 => write!(f, "x")?,
                            _ => write!(f, "x^{i}")?,
                        }
                        first = false;
                    }
                }
                Ok(())
            }
        }
    }
}

/// `(N1, N1/degree)` for a nonzero polynomial: the count of nonzero
/// coefficients and its ratio to the degree.
pub fn n1_fraction(p: &Gf2Poly) -> Result<(usize, f64), CaError> {
    let degree = p.degree().ok_or(CaError::ZeroPolynomial)?;
    let n1 = p.weight();
    Ok((n1, n1 as f64 / degree as f64))
}
