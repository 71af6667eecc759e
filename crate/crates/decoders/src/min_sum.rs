//! Min-sum decoder for the AWGN channel.
//!
//! Channel input is a vector of LLRs, positive meaning bit 0. The check
//! update is the usual sign-product with the minimum magnitude over the other
//! inputs; the variable update is the channel LLR plus the other incoming
//! check messages. Decisions are taken on the full posterior (channel plus
//! all incoming messages), with a zero posterior read as bit 0.
//!
//! As with the Gallager B decoder, words are relative to the all-zero
//! codeword, so the recorded supports are error supports.

use crate::trace::{DecodeOutcome, DecodeTrace};
use crate::{DecoderError, Result};
use trapcover_core::graph::{EdgeId, TannerGraph};

#[derive(Debug, Clone, Copy)]
pub struct MinSumConfig {
    pub max_iters: usize,
}

impl Default for MinSumConfig {
    fn default() -> Self {
        Self { max_iters: 500 }
    }
}

fn harden(llrs: &[f64]) -> Vec<bool> {
    llrs.iter().map(|&l| l < 0.0).collect()
}

fn support(word: &[bool]) -> Vec<u32> {
    word.iter()
        .enumerate()
        .filter_map(|(v, &b)| b.then_some(v as u32))
        .collect()
}

fn syndrome_is_zero(graph: &TannerGraph, word: &[bool]) -> bool {
    (0..graph.check_count()).all(|c| {
        !graph
            .check_neighbors(c)
            .iter()
            .fold(false, |acc, &(v, _)| acc ^ word[v as usize])
    })
}

pub fn min_sum_decode(
    graph: &TannerGraph,
    llrs: &[f64],
    config: &MinSumConfig,
) -> Result<DecodeTrace> {
    let n = graph.var_count();
    if llrs.len() != n {
        return Err(DecoderError::LengthMismatch { expected: n, got: llrs.len() });
    }
    if let Some(pos) = llrs.iter().position(|l| !l.is_finite()) {
        return Err(DecoderError::NonFiniteLlr { pos });
    }

    let mut decision = harden(llrs);
    let mut supports = vec![support(&decision)];
    if syndrome_is_zero(graph, &decision) {
        return Ok(DecodeTrace {
            n,
            supports,
            outcome: DecodeOutcome::Success(0),
            oscillation_period: None,
        });
    }

    let e = graph.edge_count();
    let mut var_to_check: Vec<f64> =
        (0..e).map(|id| llrs[graph.edge(EdgeId(id as u32)).1]).collect();
    let mut check_to_var = vec![0.0f64; e];

    for iter in 1..=config.max_iters {
        for c in 0..graph.check_count() {
            // sign product and two smallest magnitudes over the inputs
            let mut neg_parity = false;
            let mut min1 = f64::INFINITY;
            let mut min2 = f64::INFINITY;
            let mut argmin = EdgeId(u32::MAX);
            for &(_, e) in graph.check_neighbors(c) {
                let msg = var_to_check[e.0 as usize];
                neg_parity ^= msg < 0.0;
                let mag = msg.abs();
                if mag < min1 {
                    min2 = min1;
                    min1 = mag;
                    argmin = e;
                } else if mag < min2 {
                    min2 = mag;
                }
            }
            for &(_, e) in graph.check_neighbors(c) {
                let msg = var_to_check[e.0 as usize];
                let mag = if e == argmin { min2 } else { min1 };
                let neg = neg_parity ^ (msg < 0.0);
                check_to_var[e.0 as usize] = if neg { -mag } else { mag };
            }
        }

        for v in 0..n {
            let total: f64 = llrs[v]
                + graph
                    .var_neighbors(v)
                    .iter()
                    .map(|&(_, e)| check_to_var[e.0 as usize])
                    .sum::<f64>();
            decision[v] = total < 0.0;
            for &(_, e) in graph.var_neighbors(v) {
                var_to_check[e.0 as usize] = total - check_to_var[e.0 as usize];
            }
        }
        supports.push(support(&decision));
        if syndrome_is_zero(graph, &decision) {
            return Ok(DecodeTrace {
                n,
                supports,
                outcome: DecodeOutcome::Success(iter),
                oscillation_period: None,
            });
        }
    }

    let oscillation_period = DecodeTrace::detect_oscillation(&supports);
    Ok(DecodeTrace { n, supports, outcome: DecodeOutcome::Failure, oscillation_period })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use trapcover_core::matrix::SparseBitMatrix;

    /// Dense reference implementation: recomputes every extrinsic message
    /// directly over "all inputs except this edge", no min1/min2 shortcut.
    fn reference_min_sum(
        h: &SparseBitMatrix,
        llrs: &[f64],
        max_iters: usize,
    ) -> (Vec<Vec<u32>>, DecodeOutcome) {
        let m = h.rows_count();
        let n = h.cols_count();
        let harden = |post: &[f64]| post.iter().map(|&l| l < 0.0).collect::<Vec<bool>>();
        let mut decision = harden(llrs);
        let mut supports = vec![super::support(&decision)];
        if h.syndrome_is_zero(&decision) {
            return (supports, DecodeOutcome::Success(0));
        }
        let mut v2c = vec![vec![0.0f64; n]; m];
        for c in 0..m {
            for &v in h.row(c) {
                v2c[c][v as usize] = llrs[v as usize];
            }
        }
        let mut c2v = vec![vec![0.0f64; n]; m];
        for iter in 1..=max_iters {
            for c in 0..m {
                for &v in h.row(c) {
                    let mut sign = 1.0f64;
                    let mut min = f64::INFINITY;
                    for &u in h.row(c) {
                        if u == v {
                            continue;
                        }
                        let msg = v2c[c][u as usize];
                        sign *= if msg < 0.0 { -1.0 } else { 1.0 };
                        min = min.min(msg.abs());
                    }
                    c2v[c][v as usize] = sign * min;
                }
            }
            let mut posterior = vec![0.0f64; n];
            for v in 0..n {
                posterior[v] =
                    llrs[v] + h.col(v).iter().map(|&c| c2v[c as usize][v]).sum::<f64>();
            }
            for c in 0..m {
                for &v in h.row(c) {
                    v2c[c][v as usize] = posterior[v as usize] - c2v[c][v as usize];
                }
            }
            decision = harden(&posterior);
            supports.push(super::support(&decision));
            if h.syndrome_is_zero(&decision) {
                return (supports, DecodeOutcome::Success(iter));
            }
        }
        (supports, DecodeOutcome::Failure)
    }

    fn random_sparse(m: usize, n: usize, rng: &mut impl Rng) -> SparseBitMatrix {
        loop {
            let mut entries = Vec::new();
            for r in 0..m {
                for c in 0..n {
                    if rng.gen_bool(0.4) {
                        entries.push((r, c));
                    }
                }
            }
            let h = SparseBitMatrix::new(m, n, entries).unwrap();
            if (0..n).all(|c| !h.col(c).is_empty()) && (0..m).all(|r| h.row(r).len() >= 2) {
                return h;
            }
        }
    }

    #[test]
    fn matches_dense_reference() {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for _ in 0..60 {
            let m = rng.gen_range(3..7);
            let n = rng.gen_range(4..9);
            let h = random_sparse(m, n, &mut rng);
            let llrs: Vec<f64> = (0..n).map(|_| rng.gen_range(-3.0..3.0)).collect();
            let graph = TannerGraph::from_matrix(&h);
            let cfg = MinSumConfig { max_iters: 20 };
            let trace = min_sum_decode(&graph, &llrs, &cfg).unwrap();
            let (ref_supports, ref_outcome) = reference_min_sum(&h, &llrs, 20);
            assert_eq!(trace.outcome, ref_outcome);
            assert_eq!(trace.supports, ref_supports);
        }
    }

    #[test]
    fn confident_clean_llrs_succeed_immediately() {
        let h = SparseBitMatrix::new(2, 4, [(0, 0), (0, 1), (1, 2), (1, 3)]).unwrap();
        let graph = TannerGraph::from_matrix(&h);
        let trace =
            min_sum_decode(&graph, &[4.0, 3.0, 5.0, 2.0], &MinSumConfig::default()).unwrap();
        assert_eq!(trace.outcome, DecodeOutcome::Success(0));
    }

    #[test]
    fn single_weak_bit_is_pulled_back() {
        // [1 1 1] single parity check: one mildly negative LLR against two
        // strong positives must flip back.
        let h = SparseBitMatrix::new(1, 3, [(0, 0), (0, 1), (0, 2)]).unwrap();
        let graph = TannerGraph::from_matrix(&h);
        let trace =
            min_sum_decode(&graph, &[-0.5, 4.0, 4.0], &MinSumConfig::default()).unwrap();
        assert!(trace.is_success());
        assert!(trace.final_support().is_empty());
    }

    #[test]
    fn non_finite_llr_rejected() {
        let h = SparseBitMatrix::identity(2);
        let graph = TannerGraph::from_matrix(&h);
        let err =
            min_sum_decode(&graph, &[1.0, f64::NAN], &MinSumConfig::default()).unwrap_err();
        assert!(matches!(err, DecoderError::NonFiniteLlr { pos: 1 }));
    }
}
