//! alist interchange format (MacKay archive style).
//!
//! Layout: line 1 `n m`; line 2 `max_col_degree max_row_degree`; line 3 the n
//! column degrees; line 4 the m row degrees; then n lines of 1-indexed check
//! neighbors per variable and m lines of 1-indexed variable neighbors per
//! check. Zero padding up to the max degree is permitted and ignored.
//! 1-indexed on disk, 0-indexed in memory.

use crate::matrix::SparseBitMatrix;
use crate::{CoreError, Result};
use std::fmt::Write as _;

fn parse_line(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| CoreError::AlistParse {
                line: lineno,
                msg: format!("invalid integer {tok:?}"),
            })
        })
        .collect()
}

pub fn parse_alist(text: &str) -> Result<SparseBitMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let mut next = |what: &str| {
        lines.next().ok_or_else(|| CoreError::AlistParse {
            line: 0,
            msg: format!("unexpected end of input, expected {what}"),
        })
    };

    let (ln, header) = next("header")?;
    let header = parse_line(header, ln)?;
    if header.len() != 2 {
        return Err(CoreError::AlistParse { line: ln, msg: "header must be \"n m\"".into() });
    }
    let (n, m) = (header[0], header[1]);

    let (ln, deg_line) = next("max degrees")?;
    let maxdeg = parse_line(deg_line, ln)?;
    if maxdeg.len() != 2 {
        return Err(CoreError::AlistParse {
            line: ln,
            msg: "expected \"max_col_degree max_row_degree\"".into(),
        });
    }
    let (max_col, max_row) = (maxdeg[0], maxdeg[1]);

    let (ln, col_line) = next("column degrees")?;
    let col_deg = parse_line(col_line, ln)?;
    if col_deg.len() != n {
        return Err(CoreError::AlistParse {
            line: ln,
            msg: format!("expected {n} column degrees, got {}", col_deg.len()),
        });
    }
    if let Some(d) = col_deg.iter().find(|&&d| d > max_col) {
        return Err(CoreError::AlistParse {
            line: ln,
            msg: format!("column degree {d} exceeds declared maximum {max_col}"),
        });
    }

    let (ln, row_line) = next("row degrees")?;
    let row_deg = parse_line(row_line, ln)?;
    if row_deg.len() != m {
        return Err(CoreError::AlistParse {
            line: ln,
            msg: format!("expected {m} row degrees, got {}", row_deg.len()),
        });
    }
    if let Some(d) = row_deg.iter().find(|&&d| d > max_row) {
        return Err(CoreError::AlistParse {
            line: ln,
            msg: format!("row degree {d} exceeds declared maximum {max_row}"),
        });
    }

    let mut entries: Vec<(usize, usize)> = Vec::new();
    for (v, &deg) in col_deg.iter().enumerate() {
        let (ln, line) = next("variable neighbor list")?;
        let vals = parse_line(line, ln)?;
        let nonzero: Vec<usize> = vals.iter().copied().filter(|&x| x != 0).collect();
        if nonzero.len() != deg {
            return Err(CoreError::AlistParse {
                line: ln,
                msg: format!(
                    "variable {} lists {} neighbors, degree says {deg}",
                    v + 1,
                    nonzero.len()
                ),
            });
        }
        for c in nonzero {
            if c > m {
                return Err(CoreError::AlistParse {
                    line: ln,
                    msg: format!("check index {c} out of range 1..={m}"),
                });
            }
            entries.push((c - 1, v));
        }
    }
    // check-side lists: validated for consistency against the variable side
    let mut row_seen = vec![Vec::new(); m];
    for (c, &deg) in row_deg.iter().enumerate() {
        let (ln, line) = next("check neighbor list")?;
        let vals = parse_line(line, ln)?;
        let nonzero: Vec<usize> = vals.iter().copied().filter(|&x| x != 0).collect();
        if nonzero.len() != deg {
            return Err(CoreError::AlistParse {
                line: ln,
                msg: format!(
                    "check {} lists {} neighbors, degree says {deg}",
                    c + 1,
                    nonzero.len()
                ),
            });
        }
        for v in nonzero {
            if v > n {
                return Err(CoreError::AlistParse {
                    line: ln,
                    msg: format!("variable index {v} out of range 1..={n}"),
                });
            }
            row_seen[c].push(v - 1);
        }
    }
    let matrix = SparseBitMatrix::new(m, n, entries).map_err(|e| match e {
        CoreError::DuplicateEntry { row, col } => CoreError::AlistParse {
            line: 0,
            msg: format!("duplicate entry at check {}, variable {}", row + 1, col + 1),
        },
        other => other,
    })?;
    for (c, mut vars) in row_seen.into_iter().enumerate() {
        vars.sort_unstable();
        let expect: Vec<usize> = matrix.row(c).iter().map(|&v| v as usize).collect();
        if vars != expect {
            return Err(CoreError::AlistParse {
                line: 0,
                msg: format!("check {} neighbor list disagrees with variable lists", c + 1),
            });
        }
    }
    Ok(matrix)
}

pub fn write_alist(matrix: &SparseBitMatrix) -> String {
    let m = matrix.rows_count();
    let n = matrix.cols_count();
    let max_col = (0..n).map(|c| matrix.col(c).len()).max().unwrap_or(0);
    let max_row = (0..m).map(|r| matrix.row(r).len()).max().unwrap_or(0);
    let mut out = String::new();
    let _ = writeln!(out, "{n} {m}");
    let _ = writeln!(out, "{max_col} {max_row}");
    let col_degs: Vec<String> = (0..n).map(|c| matrix.col(c).len().to_string()).collect();
    let _ = writeln!(out, "{}", col_degs.join(" "));
    let row_degs: Vec<String> = (0..m).map(|r| matrix.row(r).len().to_string()).collect();
    let _ = writeln!(out, "{}", row_degs.join(" "));
    // zero-degree nodes still get a line; "0" is padding and is ignored
    for c in 0..n {
        let ns: Vec<String> = matrix.col(c).iter().map(|&r| (r + 1).to_string()).collect();
        let _ = writeln!(out, "{}", if ns.is_empty() { "0".into() } else { ns.join(" ") });
    }
    for r in 0..m {
        let ns: Vec<String> = matrix.row(r).iter().map(|&v| (v + 1).to_string()).collect();
        let _ = writeln!(out, "{}", if ns.is_empty() { "0".into() } else { ns.join(" ") });
    }
    out
}
