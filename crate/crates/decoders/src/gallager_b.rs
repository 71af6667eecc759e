//! Hard-decision Gallager B decoder for the binary symmetric channel.
//!
//! Message-passing rules:
//! * iteration 0: every variable sends its channel bit; the hard decision is
//!   the received word itself;
//! * check to variable: XOR of the other incoming variable messages;
//! * variable to check (iteration >= 1): send the flipped channel bit iff at
//!   least one other check message arrived and all of them disagree with the
//!   channel bit;
//! * hard decision: majority vote over the channel bit together with all
//!   incoming check messages, ties resolved towards the channel bit.
//!
//! The syndrome is tested after every hard decision, with early exit.
//!
//! All words are relative to the all-zero codeword, which the symmetry of the
//! channel and of the update rules makes lossless: `received` is the error
//! pattern and the recorded supports are error supports.

use crate::trace::{DecodeOutcome, DecodeTrace};
use crate::{DecoderError, Result};
use trapcover_core::graph::TannerGraph;

#[derive(Debug, Clone, Copy)]
pub struct GallagerBConfig {
    pub max_iters: usize,
}

impl Default for GallagerBConfig {
    fn default() -> Self {
        Self { max_iters: 50 }
    }
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

pub fn gallager_b_decode(
    graph: &TannerGraph,
    received: &[bool],
    config: &GallagerBConfig,
) -> Result<DecodeTrace> {
    let n = graph.var_count();
    if received.len() != n {
        return Err(DecoderError::LengthMismatch { expected: n, got: received.len() });
    }

    let mut supports = vec![support(received)];
    if syndrome_is_zero(graph, received) {
        return Ok(DecodeTrace {
            n,
            supports,
            outcome: DecodeOutcome::Success(0),
            oscillation_period: None,
        });
    }

    let e = graph.edge_count();
    let mut var_to_check: Vec<bool> = (0..e)
        .map(|id| received[graph.edge(trapcover_core::graph::EdgeId(id as u32)).1])
        .collect();
    let mut check_to_var = vec![false; e];
    let mut decision = vec![false; n];

    for iter in 1..=config.max_iters {
        for c in 0..graph.check_count() {
            let total = graph
                .check_neighbors(c)
                .iter()
                .fold(false, |acc, &(_, e)| acc ^ var_to_check[e.0 as usize]);
            for &(_, e) in graph.check_neighbors(c) {
                check_to_var[e.0 as usize] = total ^ var_to_check[e.0 as usize];
            }
        }

        for v in 0..n {
            let incoming = graph.var_neighbors(v);
            let ones = incoming
                .iter()
                .filter(|&&(_, e)| check_to_var[e.0 as usize])
                .count()
                + received[v] as usize;
            let votes = incoming.len() + 1;
            decision[v] = match (2 * ones).cmp(&votes) {
                std::cmp::Ordering::Greater => true,
                std::cmp::Ordering::Less => false,
                std::cmp::Ordering::Equal => received[v],
            };
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

        for v in 0..n {
            let incoming = graph.var_neighbors(v);
            let disagreeing = incoming
                .iter()
                .filter(|&&(_, e)| check_to_var[e.0 as usize] != received[v])
                .count();
            for &(_, e) in incoming {
                let others_disagree = disagreeing
                    - (check_to_var[e.0 as usize] != received[v]) as usize;
                let flip = incoming.len() >= 2 && others_disagree == incoming.len() - 1;
                var_to_check[e.0 as usize] = received[v] ^ flip;
            }
        }
    }

    let oscillation_period = DecodeTrace::detect_oscillation(&supports);
    Ok(DecodeTrace { n, supports, outcome: DecodeOutcome::Failure, oscillation_period })
}

#[cfg(test)]
mod tests {
    use super::*;
    use trapcover_core::matrix::SparseBitMatrix;

    fn word(n: usize, ones: &[usize]) -> Vec<bool> {
        let mut w = vec![false; n];
        for &i in ones {
            w[i] = true;
        }
        w
    }

    /// Isolated theta subgraph of a (5,3) set: end variables 0,1 joined by
    /// three paths through middle variables 2,3,4, each middle carrying one
    /// extra degree-one check.
    fn theta_graph() -> TannerGraph {
        let mut entries = Vec::new();
        for i in 0..3 {
            let mid = 2 + i;
            entries.push((2 * i, 0));
            entries.push((2 * i, mid));
            entries.push((2 * i + 1, mid));
            entries.push((2 * i + 1, 1));
            entries.push((6 + i, mid));
        }
        TannerGraph::from_matrix(&SparseBitMatrix::new(9, 5, entries).unwrap())
    }

    /// Isolated eight-cycle of a (4,4) set: variables 0..3 in a ring of four
    /// degree-two checks, plus one degree-one check per variable.
    fn eight_cycle_graph() -> TannerGraph {
        let mut entries = Vec::new();
        for i in 0..4 {
            entries.push((i, i));
            entries.push((i, (i + 1) % 4));
            entries.push((4 + i, i));
        }
        TannerGraph::from_matrix(&SparseBitMatrix::new(8, 4, entries).unwrap())
    }

    #[test]
    fn clean_channel_is_iteration_zero_success() {
        let g = theta_graph();
        let trace = gallager_b_decode(&g, &vec![false; 5], &GallagerBConfig::default()).unwrap();
        assert_eq!(trace.outcome, DecodeOutcome::Success(0));
        assert_eq!(trace.iterations(), 1);
    }

    #[test]
    fn length_mismatch_rejected() {
        let g = theta_graph();
        let err = gallager_b_decode(&g, &[false; 4], &GallagerBConfig::default()).unwrap_err();
        assert!(matches!(err, DecoderError::LengthMismatch { expected: 5, got: 4 }));
    }

    #[test]
    fn theta_middles_oscillate_with_period_two() {
        let g = theta_graph();
        let trace =
            gallager_b_decode(&g, &word(5, &[2, 3, 4]), &GallagerBConfig::default()).unwrap();
        assert_eq!(trace.outcome, DecodeOutcome::Failure);
        assert_eq!(trace.oscillation_period, Some(2));
        // the decoder flips between the three middles and the two ends
        assert_eq!(trace.supports[1], vec![0, 1]);
        assert_eq!(trace.supports[2], vec![2, 3, 4]);
        assert_eq!(trace.terminal_support_union(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn eight_cycle_with_all_four_errors_is_stuck() {
        let g = eight_cycle_graph();
        let trace =
            gallager_b_decode(&g, &word(4, &[0, 1, 2, 3]), &GallagerBConfig::default()).unwrap();
        assert_eq!(trace.outcome, DecodeOutcome::Failure);
        assert_eq!(trace.oscillation_period, Some(1));
        assert_eq!(trace.final_support(), &[0, 1, 2, 3]);
    }

    #[test]
    fn eight_cycle_with_three_errors_corrects() {
        let g = eight_cycle_graph();
        for skip in 0..4 {
            let errs: Vec<usize> = (0..4).filter(|&v| v != skip).collect();
            let trace = gallager_b_decode(&g, &word(4, &errs), &GallagerBConfig::default()).unwrap();
            assert!(trace.is_success(), "errors {errs:?} should decode");
        }
    }

    #[test]
    fn single_error_on_theta_corrects() {
        let g = theta_graph();
        for v in 0..5 {
            let trace = gallager_b_decode(&g, &word(5, &[v]), &GallagerBConfig::default()).unwrap();
            assert!(trace.is_success(), "single error at {v} should decode");
        }
    }
}
