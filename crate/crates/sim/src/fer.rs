//! The Monte Carlo loop.

use crate::channel::{ChannelSpec, DecoderSpec};
use crate::Result;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;
use std::fmt::Write as _;
use trapcover_core::graph::TannerGraph;
use trapcover_decoders::{gallager_b_decode, min_sum_decode};

#[derive(Debug, Clone, Copy)]
pub struct StopRule {
    pub target_failures: u64,
    pub max_frames: u64,
}

impl Default for StopRule {
    fn default() -> Self {
        Self { target_failures: 100, max_frames: 10_000_000 }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct FerPoint {
    pub channel: ChannelSpec,
    pub frames: u64,
    pub failures: u64,
    pub fer: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub seed: u64,
    pub decoder: &'static str,
}

/// Wilson 95% score interval for a binomial proportion; well-behaved at
/// small failure counts where the normal approximation collapses.
pub fn wilson_ci95(failures: u64, frames: u64) -> (f64, f64) {
    if frames == 0 {
        return (0.0, 1.0);
    }
    let z = 1.959963984540054f64;
    let n = frames as f64;
    let p = failures as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = p + z2 / (2.0 * n);
    let spread = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    let low = if failures == 0 { 0.0 } else { ((center - spread) / denom).max(0.0) };
    let high = if failures == frames { 1.0 } else { ((center + spread) / denom).min(1.0) };
    (low, high)
}

/// One frame's RNG: an independent counter-based stream keyed by the run
/// seed, the sweep point and the frame index. Frame order never matters.
fn frame_rng(seed: u64, point: usize, frame: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((point as u64) << 40) | frame);
    rng
}

/// Decode one frame; true means frame error (non-convergence or convergence
/// to a wrong codeword). All-zero transmission is assumed throughout.
fn frame_fails(
    graph: &TannerGraph,
    channel: &ChannelSpec,
    decoder: &DecoderSpec,
    rng: &mut ChaCha8Rng,
) -> bool {
    let n = graph.var_count();
    match (channel, decoder) {
        (&ChannelSpec::Bsc { alpha }, DecoderSpec::GallagerB(config)) => {
            let received: Vec<bool> = (0..n).map(|_| rng.gen_bool(alpha)).collect();
            let trace = gallager_b_decode(graph, &received, config).expect("valid frame");
            !(trace.is_success() && trace.final_support().is_empty())
        }
        (&ChannelSpec::Awgn { snr, rate }, DecoderSpec::MinSum(config)) => {
            let sigma2 = 1.0 / (2.0 * rate * snr);
            let noise = Normal::new(0.0, sigma2.sqrt()).expect("valid sigma");
            let llrs: Vec<f64> =
                (0..n).map(|_| 2.0 * (1.0 + noise.sample(rng)) / sigma2).collect();
            let trace = min_sum_decode(graph, &llrs, config).expect("valid frame");
            !(trace.is_success() && trace.final_support().is_empty())
        }
        (&ChannelSpec::Bsc { alpha }, DecoderSpec::MinSum(config)) => {
            // hard-input min-sum: channel LLR magnitude log((1-a)/a)
            let mag = ((1.0 - alpha) / alpha).ln();
            let llrs: Vec<f64> =
                (0..n).map(|_| if rng.gen_bool(alpha) { -mag } else { mag }).collect();
            let trace = min_sum_decode(graph, &llrs, config).expect("valid frame");
            !(trace.is_success() && trace.final_support().is_empty())
        }
        (&ChannelSpec::Awgn { snr, rate }, DecoderSpec::GallagerB(config)) => {
            // hard-decision front end on the AWGN channel
            let sigma2 = 1.0 / (2.0 * rate * snr);
            let noise = Normal::new(0.0, sigma2.sqrt()).expect("valid sigma");
            let received: Vec<bool> = (0..n).map(|_| 1.0 + noise.sample(rng) < 0.0).collect();
            let trace = gallager_b_decode(graph, &received, config).expect("valid frame");
            !(trace.is_success() && trace.final_support().is_empty())
        }
    }
}

const BATCH: u64 = 4096;

/// Estimate FER at each channel point, stopping per point at
/// `target_failures` failures or `max_frames` frames, whichever first
/// (checked at batch granularity so the frame count is scheduling-independent).
pub fn simulate_fer(
    graph: &TannerGraph,
    points: &[ChannelSpec],
    decoder: &DecoderSpec,
    stop: &StopRule,
    seed: u64,
) -> Result<Vec<FerPoint>> {
    for p in points {
        p.validate()?;
    }
    let mut out = Vec::with_capacity(points.len());
    for (pi, channel) in points.iter().enumerate() {
        let mut frames: u64 = 0;
        let mut failures: u64 = 0;
        while failures < stop.target_failures && frames < stop.max_frames {
            let batch = BATCH.min(stop.max_frames - frames);
            failures += (frames..frames + batch)
                .into_par_iter()
                .map(|f| {
                    let mut rng = frame_rng(seed, pi, f);
                    frame_fails(graph, channel, decoder, &mut rng) as u64
                })
                .sum::<u64>();
            frames += batch;
        }
        let (ci_low, ci_high) = wilson_ci95(failures, frames);
        out.push(FerPoint {
            channel: *channel,
            frames,
            failures,
            fer: failures as f64 / frames as f64,
            ci_low,
            ci_high,
            seed,
            decoder: decoder.id(),
        });
    }
    Ok(out)
}

/// CSV export, one row per point.
pub fn fer_points_to_csv(code_id: &str, points: &[FerPoint]) -> String {
    let mut out =
        String::from("code_id,decoder,channel_kind,channel_param,frames,failures,fer,ci_low,ci_high,seed\n");
    for p in points {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            code_id,
            p.decoder,
            p.channel.kind(),
            p.channel.parameter(),
            p.frames,
            p.failures,
            p.fer,
            p.ci_low,
            p.ci_high,
            p.seed
        );
    }
    out
}
