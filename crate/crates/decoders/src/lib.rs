//! Hard-decision Gallager B decoding for the BSC and min-sum decoding for the
//! AWGN channel. Both decoders record a full per-iteration trace (error
//! support of every hard-decision step) so that failures can be classified
//! into trapping sets afterwards.

pub mod gallager_b;
pub mod min_sum;
pub mod trace;

pub use gallager_b::{gallager_b_decode, GallagerBConfig};
pub use min_sum::{min_sum_decode, MinSumConfig};
pub use trace::{DecodeOutcome, DecodeTrace};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum DecoderError {
    #[error("input length {got} does not match code length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("non-finite LLR at position {pos}")]
    NonFiniteLlr { pos: usize },
}

pub type Result<T> = std::result::Result<T, DecoderError>;
