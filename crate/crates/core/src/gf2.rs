//! GF(2) linear algebra on bit-packed rows.

use crate::matrix::SparseBitMatrix;

/// Dense bit-packed view of the rows of a sparse matrix, for elimination.
#[derive(Debug, Clone)]
pub struct BitRows {
    pub words: usize,
    pub rows: Vec<Vec<u64>>,
}

impl BitRows {
    pub fn from_matrix(h: &SparseBitMatrix) -> Self {
        let words = h.cols_count().div_ceil(64);
        let rows = (0..h.rows_count())
            .map(|r| {
                let mut row = vec![0u64; words];
                for &c in h.row(r) {
                    row[c as usize / 64] |= 1 << (c % 64);
                }
                row
            })
            .collect();
        Self { words, rows }
    }

    fn bit(&self, r: usize, c: usize) -> bool {
        self.rows[r][c / 64] >> (c % 64) & 1 == 1
    }

    fn xor_row(&mut self, dst: usize, src: usize) {
        let (a, b) = if dst < src {
            let (lo, hi) = self.rows.split_at_mut(src);
            (&mut lo[dst], &hi[0])
        } else {
            let (lo, hi) = self.rows.split_at_mut(dst);
            (&mut hi[0], &lo[src])
        };
        for (x, y) in a.iter_mut().zip(b) {
            *x ^= y;
        }
    }

    /// In-place reduced row echelon form over GF(2).
    /// Returns the pivot column of each of the leading `rank` rows.
    pub fn rref(&mut self, ncols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            if r == self.rows.len() {
                break;
            }
            let Some(piv) = (r..self.rows.len()).find(|&i| self.bit(i, c)) else {
                continue;
            };
            self.rows.swap(r, piv);
            for i in 0..self.rows.len() {
                if i != r && self.bit(i, c) {
                    self.xor_row(i, r);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}

/// Rank of the matrix over GF(2).
pub fn gf2_rank(h: &SparseBitMatrix) -> usize {
    let mut rows = BitRows::from_matrix(h);
    rows.rref(h.cols_count()).len()
}
