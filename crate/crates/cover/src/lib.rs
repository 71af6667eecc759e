//! Building t-fold Tanner-graph covers and removing trapping sets from them
//! by swapping edges between the copies, with the freeze bookkeeping that
//! keeps already-treated sets broken. Also verifies the rate and distance
//! theorems the construction relies on, and unwraps a double cover into its
//! convolutional form.

pub mod build;
pub mod eliminate;
pub mod plan;
pub mod verify;

pub use build::{build_cover, unwrap_convolutional, CoverCode};
pub use eliminate::{eliminate_trapping_sets, EliminateOptions};
pub use plan::{LogAction, LogEntry, Schedule, SwapPlan};
pub use verify::{
    verify_distance_theorem, verify_elimination, verify_rate_theorem, DistanceReport,
    EliminationReport, RateReport,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoverError {
    #[error("cover needs at least 2 copies, got {0}")]
    TooFewCopies(usize),
    #[error("shift {shift} invalid for a {copies}-cover (must be in 1..{copies})")]
    InvalidShift { shift: usize, copies: usize },
    #[error("target set {index} has no critical number")]
    MissingCriticalNumber { index: usize },
    #[error("manual schedule ran out of edges at target {index}")]
    ManualScheduleExhausted { index: usize },
    #[error("manual edge ({check}, {var}) is not an eligible edge of target {index}")]
    ManualEdgeIneligible { check: usize, var: usize, index: usize },
    #[error(transparent)]
    Core(#[from] trapcover_core::CoreError),
    #[error(transparent)]
    Search(#[from] trapcover_search::SearchError),
}

pub type Result<T> = std::result::Result<T, CoverError>;
