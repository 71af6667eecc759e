//! Sparse GF(2) parity-check matrices, Tanner graphs and the exact structural
//! computations (rank, rate, girth, brute-force minimum distance) used by the
//! trapping-set and graph-cover tooling, plus alist file I/O.

pub mod alist;
pub mod distance;
pub mod gf2;
pub mod graph;
pub mod matrix;
pub mod profile;
pub mod qc;

pub use distance::{min_distance_bruteforce, MinDistance};
pub use gf2::gf2_rank;
pub use graph::{EdgeId, TannerGraph};
pub use matrix::SparseBitMatrix;
pub use profile::{code_profile, CodeProfile, Girth};
pub use qc::qc_expand;

use thiserror::Error;

/// Errors from matrix construction, file parsing and budgeted computations.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("duplicate entry at ({row}, {col})")]
    DuplicateEntry { row: usize, col: usize },
    #[error("entry ({row}, {col}) outside {m}x{n} matrix")]
    EntryOutOfRange { row: usize, col: usize, m: usize, n: usize },
    #[error("line {line}: {msg}")]
    AlistParse { line: usize, msg: String },
    #[error("code dimension {dim} exceeds enumeration budget {max}")]
    DimensionOverBudget { dim: usize, max: usize },
    #[error("circulant shift {shift} out of range [0, {size})")]
    ShiftOutOfRange { shift: usize, size: usize },
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, CoreError>;
