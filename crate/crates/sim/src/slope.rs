//! Least-squares slope fits of FER sweeps in the asymptotic log domain.

use crate::channel::ChannelSpec;
use crate::fer::FerPoint;
use crate::{Result, SimError};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SlopeDomain {
    /// (log10 alpha, log10 FER): the slope estimates the instanton size i.
    BscLogLog,
    /// (linear SNR, ln FER): the slope estimates -omega_in / 2.
    AwgnLinear,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub enum SlopeInterpretation {
    /// BSC: estimated instanton size i (the slope itself).
    InstantonSize(f64),
    /// AWGN: estimated input pseudo-weight omega_in = -2 * slope.
    PseudoWeight(f64),
}

#[derive(Debug, Clone, Serialize)]
pub struct SlopeEstimate {
    pub domain: SlopeDomain,
    pub points_used: usize,
    pub slope: f64,
    pub intercept: f64,
    /// Root mean square residual of the fit, in the fit's y units.
    pub residual: f64,
    pub interpretation: SlopeInterpretation,
}

impl SlopeEstimate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("slope report serializes")
    }
}

/// Maximum CI width in log10 domain for a point to enter the fit; wider
/// points belong to the noise, not the asymptote.
const MAX_LOG10_CI_WIDTH: f64 = 0.5;

fn usable(p: &FerPoint, domain: SlopeDomain) -> bool {
    let kind_ok = match (domain, &p.channel) {
        (SlopeDomain::BscLogLog, ChannelSpec::Bsc { .. }) => true,
        (SlopeDomain::AwgnLinear, ChannelSpec::Awgn { .. }) => true,
        _ => false,
    };
    kind_ok
        && p.failures > 0
        && p.ci_low > 0.0
        && (p.ci_high / p.ci_low).log10() < MAX_LOG10_CI_WIDTH
}

pub fn fit_slope(points: &[FerPoint], domain: SlopeDomain) -> Result<SlopeEstimate> {
    let data: Vec<(f64, f64)> = points
        .iter()
        .filter(|p| usable(p, domain))
        .map(|p| match domain {
            SlopeDomain::BscLogLog => (p.channel.parameter().log10(), p.fer.log10()),
            SlopeDomain::AwgnLinear => (p.channel.parameter(), p.fer.ln()),
        })
        .collect();
    if data.len() < 2 {
        return Err(SimError::InsufficientPoints(data.len()));
    }
    let n = data.len() as f64;
    let sx: f64 = data.iter().map(|d| d.0).sum();
    let sy: f64 = data.iter().map(|d| d.1).sum();
    let sxx: f64 = data.iter().map(|d| d.0 * d.0).sum();
    let sxy: f64 = data.iter().map(|d| d.0 * d.1).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    let intercept = (sy - slope * sx) / n;
    let residual = (data
        .iter()
        .map(|&(x, y)| {
            let r = y - (slope * x + intercept);
            r * r
        })
        .sum::<f64>()
        / n)
        .sqrt();
    let interpretation = match domain {
        SlopeDomain::BscLogLog => SlopeInterpretation::InstantonSize(slope),
        SlopeDomain::AwgnLinear => SlopeInterpretation::PseudoWeight(-2.0 * slope),
    };
    Ok(SlopeEstimate { domain, points_used: data.len(), slope, intercept, residual, interpretation })
}

/// Build a FerPoint from an exactly known FER with an effectively infinite
/// frame count; used for synthetic fits and oracle plumbing.
pub fn synthetic_point(channel: ChannelSpec, fer: f64) -> FerPoint {
    let frames = 1_000_000_000_000u64;
    FerPoint {
        channel,
        frames,
        failures: (fer * frames as f64).round() as u64,
        fer,
        ci_low: fer * 0.999,
        ci_high: fer * 1.001,
        seed: 0,
        decoder: "synthetic",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_cubic_power_law_recovered() {
        let points: Vec<FerPoint> = [0.003, 0.005, 0.008, 0.012, 0.02]
            .iter()
            .map(|&alpha| {
                synthetic_point(ChannelSpec::Bsc { alpha }, 0.4 * alpha * alpha * alpha)
            })
            .collect();
        let fit = fit_slope(&points, SlopeDomain::BscLogLog).unwrap();
        assert!((fit.slope - 3.0).abs() < 1e-9, "slope {}", fit.slope);
        assert!(fit.residual < 1e-12);
        assert_eq!(fit.points_used, 5);
        match fit.interpretation {
            SlopeInterpretation::InstantonSize(i) => assert!((i - 3.0).abs() < 1e-9),
            _ => unreachable!(),
        }
    }

    #[test]
    fn awgn_exponential_recovered() {
        // FER = exp(-10 * snr) => slope -10, omega_in = 20
        let points: Vec<FerPoint> = [0.5, 0.8, 1.1, 1.4]
            .iter()
            .map(|&snr| {
                synthetic_point(ChannelSpec::Awgn { snr, rate: 0.5 }, (-10.0 * snr).exp())
            })
            .collect();
        let fit = fit_slope(&points, SlopeDomain::AwgnLinear).unwrap();
        assert!((fit.slope + 10.0).abs() < 1e-9);
        match fit.interpretation {
            SlopeInterpretation::PseudoWeight(w) => assert!((w - 20.0).abs() < 1e-9),
            _ => unreachable!(),
        }
    }

    #[test]
    fn noisy_and_failure_free_points_excluded() {
        let mut good = synthetic_point(ChannelSpec::Bsc { alpha: 0.01 }, 1e-3);
        good.failures = 100;
        let mut wide = synthetic_point(ChannelSpec::Bsc { alpha: 0.005 }, 1e-4);
        wide.ci_low = 1e-5;
        wide.ci_high = 1e-3;
        let mut empty = synthetic_point(ChannelSpec::Bsc { alpha: 0.003 }, 0.0);
        empty.failures = 0;
        let err = fit_slope(&[good, wide, empty], SlopeDomain::BscLogLog).unwrap_err();
        assert!(matches!(err, SimError::InsufficientPoints(1)));
    }

    #[test]
    fn wrong_channel_kind_filtered() {
        let p = synthetic_point(ChannelSpec::Awgn { snr: 1.0, rate: 0.5 }, 1e-3);
        let err = fit_slope(&[p, p], SlopeDomain::BscLogLog).unwrap_err();
        assert!(matches!(err, SimError::InsufficientPoints(0)));
    }

    #[test]
    fn json_report() {
        let points: Vec<FerPoint> = [0.01, 0.02]
            .iter()
            .map(|&alpha| synthetic_point(ChannelSpec::Bsc { alpha }, alpha * alpha))
            .collect();
        let fit = fit_slope(&points, SlopeDomain::BscLogLog).unwrap();
        let v: serde_json::Value = serde_json::from_str(&fit.to_json()).unwrap();
        assert!(v["slope"].as_f64().is_some());
        assert_eq!(v["points_used"], 2);
    }
}
