//! Exact minimum distance by exhaustive codeword enumeration through a
//! systematic generator matrix derived by GF(2) elimination.

use crate::gf2::BitRows;
use crate::matrix::SparseBitMatrix;
use crate::{CoreError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinDistance {
    Distance(usize),
    /// The code has dimension zero: no nonzero codeword exists.
    NoNonzeroCodeword,
}

/// Exact minimum Hamming weight over all nonzero codewords of the code with
/// parity-check matrix `h`. Enumeration is 2^(n - rank); dimensions above
/// `max_dim` are rejected.
pub fn min_distance_bruteforce(h: &SparseBitMatrix, max_dim: usize) -> Result<MinDistance> {
    let n = h.cols_count();
    let mut rows = BitRows::from_matrix(h);
    let pivots = rows.rref(n);
    let rank = pivots.len();
    let dim = n - rank;
    if dim == 0 {
        return Ok(MinDistance::NoNonzeroCodeword);
    }
    if dim > max_dim {
        return Err(CoreError::DimensionOverBudget { dim, max: max_dim });
    }

    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free_cols: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();

    // generator row for free column f: bit f set, plus pivot p_i wherever
    // reduced row i has a 1 in column f
    let words = n.div_ceil(64);
    let mut gen: Vec<Vec<u64>> = Vec::with_capacity(dim);
    for &f in &free_cols {
        let mut row = vec![0u64; words];
        row[f / 64] |= 1 << (f % 64);
        for (i, &p) in pivots.iter().enumerate() {
            if rows.rows[i][f / 64] >> (f % 64) & 1 == 1 {
                row[p / 64] |= 1 << (p % 64);
            }
        }
        gen.push(row);
    }

    // Gray-code walk over all 2^dim - 1 nonzero information words
    let mut current = vec![0u64; words];
    let mut best = usize::MAX;
    for x in 1u64..(1u64 << dim) {
        let flip = x.trailing_zeros() as usize;
        let mut weight = 0;
        for (w, g) in current.iter_mut().zip(&gen[flip]) {
            *w ^= g;
            weight += w.count_ones() as usize;
        }
        best = best.min(weight);
    }
    Ok(MinDistance::Distance(best))
}
