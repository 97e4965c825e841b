//! Binary PBM (P4) writer: one bit per pixel, packed 8 to a byte, rows padded
//! to whole bytes; a set bit renders black.

use caprng_core::bitlinalg::BitVector;
use std::io::{self, Write};

pub struct PbmImage {
    width: usize,
    rows: Vec<Vec<u8>>,
}

impl PbmImage {
    pub fn new(width: usize) -> Self {
        assert!(width >= 1);
        Self {
            width,
            rows: Vec::new(),
        }
    }

    /// Appends one row; set cells render black.
    pub fn push_row(&mut self, config: &BitVector) {
        assert_eq!(config.len(), self.width, "row width mismatch");
        let mut packed = vec![0u8; self.width.div_ceil(8)];
        for i in 0..self.width {
            if config.get(i) {
                packed[i / 8] |= 0x80 >> (i % 8);
            }
        }
        self.rows.push(packed);
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> io::Result<()> {
        write!(w, "P4\n{} {}\n", self.width, self.rows.len())?;
        for row in &self.rows {
            w.write_all(row)?;
        }
        Ok(())
    }
}
