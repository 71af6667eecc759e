//! Quasi-cyclic expansion: a grid of circulant shifts into a sparse matrix.

use crate::matrix::SparseBitMatrix;
use crate::{CoreError, Result};

/// One cell of a quasi-cyclic exponent table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QcCell {
    /// Identity rows rotated by the shift: block entry (t, (t + shift) mod z).
    Shift(usize),
    Zero,
}

/// Expand an exponent table into the full parity-check matrix. Each cell
/// becomes a z-by-z circulant permutation block or a zero block.
pub fn qc_expand(table: &[Vec<QcCell>], circulant_size: usize) -> Result<SparseBitMatrix> {
    let z = circulant_size;
    let block_rows = table.len();
    let block_cols = table.first().map_or(0, Vec::len);
    let mut entries = Vec::new();
    for (bi, row) in table.iter().enumerate() {
        for (bj, &cell) in row.iter().enumerate() {
            if let QcCell::Shift(s) = cell {
                if s >= z {
                    return Err(CoreError::ShiftOutOfRange { shift: s, size: z });
                }
                for t in 0..z {
                    entries.push((bi * z + t, bj * z + (t + s) % z));
                }
            }
        }
    }
    SparseBitMatrix::new(block_rows * z, block_cols * z, entries)
}

/// Parse an exponent-table file: comment lines start with '#'; first data line
/// is `rows cols circulant_size`; then `rows` lines of shifts, `-` for a zero
/// block.
pub fn parse_exponent_table(text: &str) -> Result<(Vec<Vec<QcCell>>, usize)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (ln, header) = lines.next().ok_or(CoreError::AlistParse {
        line: 0,
        msg: "empty exponent table".into(),
    })?;
    let head: Vec<usize> = header
        .split_whitespace()
        .map(|t| {
            t.parse().map_err(|_| CoreError::AlistParse {
                line: ln,
                msg: format!("invalid integer {t:?}"),
            })
        })
        .collect::<Result<_>>()?;
    if head.len() != 3 {
        return Err(CoreError::AlistParse {
            line: ln,
            msg: "expected \"rows cols circulant_size\"".into(),
        });
    }
    let (rows, cols, z) = (head[0], head[1], head[2]);
    let mut table = Vec::with_capacity(rows);
    for _ in 0..rows {
        let (ln, line) = lines.next().ok_or(CoreError::AlistParse {
            line: 0,
            msg: "missing exponent row".into(),
        })?;
        let row: Vec<QcCell> = line
            .split_whitespace()
            .map(|t| {
                if t == "-" {
                    Ok(QcCell::Zero)
                } else {
                    t.parse::<usize>().map(QcCell::Shift).map_err(|_| CoreError::AlistParse {
                        line: ln,
                        msg: format!("invalid shift {t:?}"),
                    })
                }
            })
            .collect::<Result<_>>()?;
        if row.len() != cols {
            return Err(CoreError::AlistParse {
                line: ln,
                msg: format!("expected {cols} shifts, got {}", row.len()),
            });
        }
        table.push(row);
    }
    Ok((table, z))
}
