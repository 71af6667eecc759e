//! Monte Carlo frame-error-rate estimation over the BSC and AWGN channels,
//! an exact FER oracle for small codes, and log-domain slope fitting.
//!
//! Every frame's noise is derived from (seed, point index, frame index)
//! through an independent counter-based RNG stream, so results are
//! bit-reproducible and independent of how frames are scheduled across
//! workers.

pub mod channel;
pub mod exact;
pub mod fer;
pub mod slope;

pub use channel::{ChannelSpec, DecoderSpec};
pub use exact::{exact_fer_bsc, ExactFer};
pub use fer::{fer_points_to_csv, simulate_fer, FerPoint, StopRule};
pub use slope::{fit_slope, SlopeDomain, SlopeEstimate};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SimError {
    #[error("BSC crossover probability {0} outside (0, 0.5)")]
    InvalidAlpha(f64),
    #[error("SNR {0} must be positive (linear scale)")]
    InvalidSnr(f64),
    #[error("code rate {0} outside (0, 1)")]
    InvalidRate(f64),
    #[error("enumeration needs {required} patterns, budget is {budget}")]
    BudgetExceeded { required: u64, budget: u64 },
    #[error("slope fit needs at least 2 usable points, found {0}")]
    InsufficientPoints(usize),
    #[error(transparent)]
    Decoder(#[from] trapcover_decoders::DecoderError),
}

pub type Result<T> = std::result::Result<T, SimError>;
