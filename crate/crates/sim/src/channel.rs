//! Channel and decoder specifications.

use crate::{Result, SimError};
use serde::Serialize;
use trapcover_decoders::{GallagerBConfig, MinSumConfig};

/// A single channel operating point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum ChannelSpec {
    /// Binary symmetric channel with crossover probability `alpha`.
    Bsc { alpha: f64 },
    /// AWGN channel at linear Eb/N0 `snr`; `rate` feeds the noise variance
    /// sigma^2 = 1 / (2 * rate * snr) under BPSK (bit 0 -> +1, 1 -> -1).
    Awgn { snr: f64, rate: f64 },
}

impl ChannelSpec {
    pub fn awgn_from_db(snr_db: f64, rate: f64) -> Self {
        ChannelSpec::Awgn { snr: 10f64.powf(snr_db / 10.0), rate }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            ChannelSpec::Bsc { alpha } => {
                if !(alpha > 0.0 && alpha < 0.5) {
                    return Err(SimError::InvalidAlpha(alpha));
                }
            }
            ChannelSpec::Awgn { snr, rate } => {
                if !(snr > 0.0) {
                    return Err(SimError::InvalidSnr(snr));
                }
                if !(rate > 0.0 && rate < 1.0) {
                    return Err(SimError::InvalidRate(rate));
                }
            }
        }
        Ok(())
    }

    /// The channel parameter on the axis used for sweeps and slope fits:
    /// alpha for the BSC, linear SNR for AWGN.
    pub fn parameter(&self) -> f64 {
        match *self {
            ChannelSpec::Bsc { alpha } => alpha,
            ChannelSpec::Awgn { snr, .. } => snr,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ChannelSpec::Bsc { .. } => "bsc",
            ChannelSpec::Awgn { .. } => "awgn",
        }
    }
}

/// Which decoder a simulation runs.
#[derive(Debug, Clone, Copy)]
pub enum DecoderSpec {
    GallagerB(GallagerBConfig),
    MinSum(MinSumConfig),
}

impl DecoderSpec {
    pub fn id(&self) -> &'static str {
        match self {
            DecoderSpec::GallagerB(_) => "gallager-b",
            DecoderSpec::MinSum(_) => "min-sum",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(ChannelSpec::Bsc { alpha: 0.01 }.validate().is_ok());
        assert!(ChannelSpec::Bsc { alpha: 0.5 }.validate().is_err());
        assert!(ChannelSpec::Bsc { alpha: 0.0 }.validate().is_err());
        assert!(ChannelSpec::Awgn { snr: 2.0, rate: 0.5 }.validate().is_ok());
        assert!(ChannelSpec::Awgn { snr: 0.0, rate: 0.5 }.validate().is_err());
        assert!(ChannelSpec::Awgn { snr: 1.0, rate: 1.5 }.validate().is_err());
    }

    #[test]
    fn db_conversion() {
        let c = ChannelSpec::awgn_from_db(3.0103, 0.5);
        match c {
            ChannelSpec::Awgn { snr, .. } => assert!((snr - 2.0).abs() < 1e-3),
            _ => unreachable!(),
        }
    }
}
