//! Finding the trapping sets that dominate the error floor: exhaustive
//! small-weight instanton search, classification of decoder failures into
//! (a,b) sets, critical-number certification, and a purely topological scan
//! that enumerates candidate sets without running the decoder at all.

pub mod census;
pub mod classify;
pub mod record;
pub mod scan;

pub use census::{
    instanton_search, restricted_instanton_search, ClassCount, InstantonCensus, SearchConfig,
};
pub use classify::{classify_failure, critical_number, CriticalNumber};
pub use record::TrappingSetRecord;
pub use scan::{topological_ts_scan, ScanConfig};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("enumeration needs {required} patterns, budget is {budget}")]
    BudgetExceeded { required: u64, budget: u64 },
    #[error("cannot classify a trace that decoded correctly")]
    ClassifyOnCleanTrace,
    #[error("trapping set references variable {var} outside the graph")]
    VariableOutOfRange { var: usize },
    #[error(transparent)]
    Decoder(#[from] trapcover_decoders::DecoderError),
}

pub type Result<T> = std::result::Result<T, SearchError>;
