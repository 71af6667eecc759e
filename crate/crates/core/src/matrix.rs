//! Sparse binary matrix over GF(2), stored as row-major and column-major
//! adjacency so both row and column supports iterate in O(degree).

use crate::{CoreError, Result};

/// Sparse binary matrix over GF(2). Immutable once built.
///
/// Entries are kept sorted in both orientations. Duplicate insertion is an
/// error rather than a no-op: it catches construction bugs early.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseBitMatrix {
    m: usize,
    n: usize,
    rows: Vec<Vec<u32>>,
    cols: Vec<Vec<u32>>,
}

impl SparseBitMatrix {
    pub fn new(m: usize, n: usize, entries: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut rows = vec![Vec::new(); m];
        let mut cols = vec![Vec::new(); n];
        for (r, c) in entries {
            if r >= m || c >= n {
                return Err(CoreError::EntryOutOfRange { row: r, col: c, m, n });
            }
            rows[r].push(c as u32);
            cols[c].push(r as u32);
        }
        for (r, row) in rows.iter_mut().enumerate() {
            row.sort_unstable();
            if row.windows(2).any(|w| w[0] == w[1]) {
                let c = row.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
                return Err(CoreError::DuplicateEntry { row: r, col: c as usize });
            }
        }
        for col in cols.iter_mut() {
            col.sort_unstable();
        }
        Ok(Self { m, n, rows, cols })
    }

    pub fn zero(m: usize, n: usize) -> Self {
        Self { m, n, rows: vec![Vec::new(); m], cols: vec![Vec::new(); n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(n, n, (0..n).map(|i| (i, i))).unwrap()
    }

    pub fn rows_count(&self) -> usize {
        self.m
    }

    pub fn cols_count(&self) -> usize {
        self.n
    }

    /// Column indices of the 1-entries in row `r`, ascending.
    pub fn row(&self, r: usize) -> &[u32] {
        &self.rows[r]
    }

    /// Row indices of the 1-entries in column `c`, ascending.
    pub fn col(&self, c: usize) -> &[u32] {
        &self.cols[c]
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        self.rows[r].binary_search(&(c as u32)).is_ok()
    }

    pub fn entry_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// All 1-entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, cs)| cs.iter().map(move |&c| (r, c as usize)))
    }

    pub fn row_weights(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn col_weights(&self) -> Vec<usize> {
        self.cols.iter().map(Vec::len).collect()
    }

    /// Syndrome of a binary word: one bit per row, true where the parity fails.
    pub fn syndrome(&self, word: &[bool]) -> Vec<bool> {
        assert_eq!(word.len(), self.n);
        self.rows
            .iter()
            .map(|cs| cs.iter().fold(false, |acc, &c| acc ^ word[c as usize]))
            .collect()
    }

    pub fn syndrome_is_zero(&self, word: &[bool]) -> bool {
        assert_eq!(word.len(), self.n);
        self.rows
            .iter()
            .all(|cs| !cs.iter().fold(false, |acc, &c| acc ^ word[c as usize]))
    }

    /// Block-diagonal stack of `t` copies of `self`.
    pub fn block_diag(&self, t: usize) -> SparseBitMatrix {
        let entries = (0..t).flat_map(|k| {
            self.entries()
                .map(move |(r, c)| (k * self.m + r, k * self.n + c))
                .collect::<Vec<_>>()
        });
        SparseBitMatrix::new(t * self.m, t * self.n, entries).unwrap()
    }
}
