//! Dense matrices and vectors over GF(2), packed 64 cells to a word.
//!
//! Everything the rest of the crate hangs off: characteristic matrices,
//! matrix powers for time spacing, and the rank computations behind the
//! equidistribution tests. Two rank routines are provided: [`BitMatrix::rank`]
//! eliminates over GF(2), while [`BitMatrix::rational_rank`] treats the same
//! 0/1 entries as integers and eliminates fraction-free over Z (Bareiss), so
//! it returns the rank of the matrix as a rational matrix. The two disagree
//! whenever rows are independent over Q but collapse mod 2.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DimensionError {
    #[error("dimension must be at least 1")]
    Empty,
    #[error("dimension mismatch: {left} vs {right}")]
    Mismatch { left: usize, right: usize },
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
}

const WORD_BITS: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// Packed bit vector; bit `i` of word `i / 64` holds entry `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Result<Self, DimensionError> {
        if len == 0 {
            return Err(DimensionError::Empty);
        }
        Ok(Self {
            len,
            words: vec![0; words_for(len)],
        })
    }

    /// Unit vector with a single 1 at `index`.
    pub fn unit(len: usize, index: usize) -> Result<Self, DimensionError> {
        let mut v = Self::zeros(len)?;
        assert!(index < len, "unit index {index} out of range {len}");
        v.set(index, true);
        Ok(v)
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self, DimensionError> {
        let mut v = Self::zeros(bits.len())?;
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false // len >= 1 by construction
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len);
        let (w, b) = (i / WORD_BITS, i % WORD_BITS);
        if value {
            self.words[w] |= 1 << b;
        } else {
            self.words[w] &= !(1 << b);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    /// Clears any bits beyond `len` in the last word.
    pub fn mask_tail(&mut self) {
        let extra = self.len % WORD_BITS;
        if extra != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << extra) - 1;
            }
        }
    }

    pub fn xor_assign(&mut self, other: &BitVector) -> Result<(), DimensionError> {
        if self.len != other.len {
            return Err(DimensionError::Mismatch {
                left: self.len,
                right: other.len,
            });
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        Ok(())
    }

    /// XORs `other`, with each of its entries moved up by `shift` positions,
    /// into `self`. Entries pushed beyond `self.len` are an error in the
    /// caller's arithmetic and panic via the tail assertion.
    pub fn xor_shifted(&mut self, other: &BitVector, shift: usize) {
        assert!(other.len + shift <= self.len, "shifted vector does not fit");
        let (wshift, bshift) = (shift / WORD_BITS, shift % WORD_BITS);
        for (i, &w) in other.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            let lo = i + wshift;
            if bshift == 0 {
                self.words[lo] ^= w;
            } else {
                self.words[lo] ^= w << bshift;
                if lo + 1 < self.words.len() {
                    self.words[lo + 1] ^= w >> (WORD_BITS - bshift);
                }
            }
        }
    }

    pub fn iter_bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(|i| self.get(i))
    }
}

impl std::fmt::Debug for BitVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for b in self.iter_bits() {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// Dense GF(2) matrix, row-major, each row packed like a [`BitVector`].
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self, DimensionError> {
        if rows == 0 || cols == 0 {
            return Err(DimensionError::Empty);
        }
        let stride = words_for(cols);
        Ok(Self {
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        })
    }

    pub fn identity(n: usize) -> Result<Self, DimensionError> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.set(i, i, true);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        (self.words[r * self.stride + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols);
        let idx = r * self.stride + c / WORD_BITS;
        let bit = 1u64 << (c % WORD_BITS);
        if value {
            self.words[idx] |= bit;
        } else {
            self.words[idx] &= !bit;
        }
    }

    fn row_words(&self, r: usize) -> &[u64] {
        &self.words[r * self.stride..(r + 1) * self.stride]
    }

    /// GF(2) matrix product.
    pub fn mat_mul(&self, other: &BitMatrix) -> Result<BitMatrix, DimensionError> {
        if self.cols != other.rows {
            return Err(DimensionError::Mismatch {
                left: self.cols,
                right: other.rows,
            });
        }
        let mut out = BitMatrix::zeros(self.rows, other.cols)?;
        for r in 0..self.rows {
            let out_row = r * out.stride;
            for (wi, &w) in self.row_words(r).iter().enumerate() {
                let mut bits = w;
                while bits != 0 {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let mid = wi * WORD_BITS + b;
                    let src = mid * other.stride;
                    for j in 0..other.stride {
                        out.words[out_row + j] ^= other.words[src + j];
                    }
                }
            }
        }
        Ok(out)
    }

    /// GF(2) matrix-vector product.
    pub fn mat_vec(&self, v: &BitVector) -> Result<BitVector, DimensionError> {
        if self.cols != v.len() {
            return Err(DimensionError::Mismatch {
                left: self.cols,
                right: v.len(),
            });
        }
        let mut out = BitVector::zeros(self.rows)?;
        for r in 0..self.rows {
            let mut parity = 0u64;
            for (a, b) in self.row_words(r).iter().zip(v.words()) {
                parity ^= a & b;
            }
            out.set(r, parity.count_ones() % 2 == 1);
        }
        Ok(out)
    }

    /// `self^e` by square-and-multiply; `e` may be as large as the period
    /// orders this crate checks (up to 2^128 - 1).
    pub fn mat_pow(&self, e: &BigUint) -> Result<BitMatrix, DimensionError> {
        if self.rows != self.cols {
            return Err(DimensionError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = BitMatrix::identity(self.rows)?;
        let mut base = self.clone();
        let nbits = e.bits();
        for i in 0..nbits {
            if e.bit(i) {
                acc = acc.mat_mul(&base)?;
            }
            if i + 1 < nbits {
                base = base.mat_mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.cols, self.rows).expect("nonempty");
        for r in 0..self.rows {
            for (wi, &w) in self.row_words(r).iter().enumerate() {
                let mut bits = w;
                while bits != 0 {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    out.set(wi * WORD_BITS + b, r, true);
                }
            }
        }
        out
    }

    /// Rank over GF(2). Elimination runs on a copy; `self` is untouched.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<u64>> = (0..self.rows).map(|r| self.row_words(r).to_vec()).collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let (wi, bit) = (col / WORD_BITS, 1u64 << (col % WORD_BITS));
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][wi] & bit != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let (pivot_row, rest) = {
                let (head, tail) = rows.split_at_mut(rank + 1);
                (&head[rank], tail)
            };
            for row in rest.iter_mut() {
                if row[wi] & bit != 0 {
                    for (a, b) in row.iter_mut().zip(pivot_row) {
                        *a ^= b;
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    /// Rank of the 0/1 matrix read as an integer matrix (equivalently, its
    /// rank over the rationals). Fraction-free elimination keeps every
    /// intermediate entry an exact integer.
    pub fn rational_rank(&self) -> usize {
        // Eliminating over the smaller row count costs less; rank is
        // transpose-invariant.
        if self.rows > self.cols {
            return self.transpose().rational_rank();
        }
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| BigInt::from(self.get(r, c) as u8))
                    .collect()
            })
            .collect();
        let mut prev = BigInt::one();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot);
            let (head, tail) = m.split_at_mut(rank + 1);
            let pivot_row = &head[rank];
            let pv = pivot_row[col].clone();
            for row in tail.iter_mut() {
                let factor = std::mem::replace(&mut row[col], BigInt::zero());
                for j in (col + 1)..self.cols {
                    let num = &pv * &row[j] - &factor * &pivot_row[j];
                    row[j] = num / &prev; // exact by the Bareiss identity
                }
            }
            prev = pv;
            rank += 1;
            if rank == m.len() {
                break;
            }
        }
        rank
    }
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{}", if self.get(r, c) { '1' } else { '0' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
