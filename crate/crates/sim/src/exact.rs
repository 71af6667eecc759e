//! Exact FER on the BSC by exhaustive decoding of all error patterns up to
//! a weight cap: FER(alpha) = sum_k c_k alpha^k (1-alpha)^(n-k), where c_k
//! counts the weight-k received words the decoder fails on (either
//! non-convergence or a wrong codeword). Capped at weight `cap`, the sum is
//! an exact lower bound on the FER.

use crate::channel::DecoderSpec;
use crate::{Result, SimError};
use rayon::prelude::*;
use trapcover_core::graph::TannerGraph;
use trapcover_decoders::{gallager_b_decode, min_sum_decode};

#[derive(Debug, Clone)]
pub struct ExactFer {
    pub alpha: f64,
    pub cap: usize,
    /// c[k] = number of weight-k error patterns that produce a frame error.
    pub c: Vec<u64>,
    /// Truncated sum: exact when cap = n, otherwise a lower bound.
    pub fer: f64,
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

fn pattern_fails(graph: &TannerGraph, pattern: &[u32], alpha: f64, decoder: &DecoderSpec) -> bool {
    let n = graph.var_count();
    match decoder {
        DecoderSpec::GallagerB(config) => {
            let mut word = vec![false; n];
            for &v in pattern {
                word[v as usize] = true;
            }
            let trace = gallager_b_decode(graph, &word, config).expect("length matches");
            !(trace.is_success() && trace.final_support().is_empty())
        }
        DecoderSpec::MinSum(config) => {
            let mag = ((1.0 - alpha) / alpha).ln();
            let mut llrs = vec![mag; n];
            for &v in pattern {
                llrs[v as usize] = -mag;
            }
            let trace = min_sum_decode(graph, &llrs, config).expect("length matches");
            !(trace.is_success() && trace.final_support().is_empty())
        }
    }
}

fn count_failures_at_weight(
    graph: &TannerGraph,
    k: usize,
    alpha: f64,
    decoder: &DecoderSpec,
) -> u64 {
    let n = graph.var_count();
    if k == 0 {
        return pattern_fails(graph, &[], alpha, decoder) as u64;
    }
    (0..n as u32)
        .into_par_iter()
        .map(|first| {
            let mut count = 0u64;
            let mut prefix = vec![first];
            fn rec(
                graph: &TannerGraph,
                n: u32,
                left: usize,
                prefix: &mut Vec<u32>,
                alpha: f64,
                decoder: &DecoderSpec,
                count: &mut u64,
            ) {
                if left == 0 {
                    *count += pattern_fails(graph, prefix, alpha, decoder) as u64;
                    return;
                }
                let start = prefix.last().unwrap() + 1;
                for v in start..=n - left as u32 {
                    prefix.push(v);
                    rec(graph, n, left - 1, prefix, alpha, decoder, count);
                    prefix.pop();
                }
            }
            rec(graph, n as u32, k - 1, &mut prefix, alpha, decoder, &mut count);
            count
        })
        .sum()
}

pub fn exact_fer_bsc(
    graph: &TannerGraph,
    alpha: f64,
    decoder: &DecoderSpec,
    cap: usize,
    budget: u64,
) -> Result<ExactFer> {
    if !(alpha > 0.0 && alpha < 0.5) {
        return Err(SimError::InvalidAlpha(alpha));
    }
    let n = graph.var_count();
    let cap = cap.min(n);
    let required: u64 =
        (0..=cap).map(|k| binomial(n as u64, k as u64)).fold(0u64, u64::saturating_add);
    if required > budget {
        return Err(SimError::BudgetExceeded { required, budget });
    }
    let c: Vec<u64> =
        (0..=cap).map(|k| count_failures_at_weight(graph, k, alpha, decoder)).collect();
    let fer: f64 = c
        .iter()
        .enumerate()
        .map(|(k, &ck)| {
            ck as f64 * alpha.powi(k as i32) * (1.0 - alpha).powi((n - k) as i32)
        })
        .sum();
    Ok(ExactFer { alpha, cap, c, fer })
}
