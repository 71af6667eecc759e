//! Turning a decoder trace into a trapping-set record, and certifying
//! critical numbers by restricted search.

use crate::census::{binomial, for_each_pattern, SearchConfig};
use crate::record::TrappingSetRecord;
use crate::{Result, SearchError};
use trapcover_core::graph::TannerGraph;
use trapcover_decoders::{gallager_b_decode, DecodeTrace};

/// Classify a decoding error.
///
/// A `Failure` trace maps to the union of error supports over its terminal
/// phase (the detected periodic suffix, or the last iteration when no period
/// was found). A `Success` trace with nonzero support converged to a wrong
/// codeword; it classifies as a codeword-type miscorrection with `b == 0`.
/// A clean success has nothing to classify and is an error.
pub fn classify_failure(graph: &TannerGraph, trace: &DecodeTrace) -> Result<TrappingSetRecord> {
    let variables = if trace.is_success() {
        let support = trace.final_support();
        if support.is_empty() {
            return Err(SearchError::ClassifyOnCleanTrace);
        }
        support.to_vec()
    } else {
        trace.terminal_support_union()
    };
    Ok(TrappingSetRecord::from_variables(graph, variables))
}

/// Outcome of a critical-number search. `Found` is an upper-bound certificate
/// relative to the searched region (set plus halo), not a global minimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriticalNumber {
    Found { k: usize, halo: usize },
    NotFound { searched_up_to: usize, halo: usize },
}

/// Smallest k for which some weight-k pattern in the set-plus-halo region
/// drives the decoder into a trapping set containing `ts.variables` (set
/// containment, since a larger absorbing set may envelop the target).
pub fn critical_number(
    graph: &TannerGraph,
    ts: &TrappingSetRecord,
    halo_radius: usize,
    config: &SearchConfig,
) -> Result<CriticalNumber> {
    for &v in &ts.variables {
        if v as usize >= graph.var_count() {
            return Err(SearchError::VariableOutOfRange { var: v as usize });
        }
    }
    let seeds: Vec<usize> = ts.variables.iter().map(|&v| v as usize).collect();
    let allowed: Vec<u32> =
        graph.variable_ball(&seeds, halo_radius).into_iter().map(|v| v as u32).collect();
    let n = graph.var_count();
    let mut word = vec![false; n];
    for k in 1..=ts.a {
        let total = binomial(allowed.len() as u64, k as u64);
        if total > config.pattern_budget {
            return Err(SearchError::BudgetExceeded {
                required: total,
                budget: config.pattern_budget,
            });
        }
        let mut hit = false;
        for_each_pattern(&allowed, k, |pattern| {
            for &v in pattern {
                word[v as usize] = true;
            }
            let trace = gallager_b_decode(graph, &word, &config.decoder).expect("length matches");
            for &v in pattern {
                word[v as usize] = false;
            }
            if !trace.is_success() {
                if let Ok(record) = classify_failure(graph, &trace) {
                    if record.contains_all(&ts.variables) {
                        hit = true;
                        return false;
                    }
                }
            }
            true
        });
        if hit {
            return Ok(CriticalNumber::Found { k, halo: halo_radius });
        }
    }
    Ok(CriticalNumber::NotFound { searched_up_to: ts.a, halo: halo_radius })
}

#[cfg(test)]
mod tests {
    use super::*;
    use trapcover_core::matrix::SparseBitMatrix;
    use trapcover_decoders::GallagerBConfig;

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
    fn oscillating_theta_classifies_as_5_3() {
        let g = theta_graph();
        let mut word = vec![false; 5];
        for v in 2..5 {
            word[v] = true;
        }
        let trace = gallager_b_decode(&g, &word, &GallagerBConfig::default()).unwrap();
        let rec = classify_failure(&g, &trace).unwrap();
        assert_eq!((rec.a, rec.b), (5, 3));
        assert_eq!(rec.variables, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn stuck_eight_cycle_classifies_as_4_4() {
        let g = eight_cycle_graph();
        let trace = gallager_b_decode(&g, &[true; 4], &GallagerBConfig::default()).unwrap();
        let rec = classify_failure(&g, &trace).unwrap();
        assert_eq!((rec.a, rec.b), (4, 4));
    }

    #[test]
    fn codeword_error_is_miscorrection_class() {
        // single check over two variables: (1,1) is a weight-2 codeword and
        // passes the syndrome untouched
        let g = TannerGraph::from_matrix(
            &SparseBitMatrix::new(1, 2, [(0, 0), (0, 1)]).unwrap(),
        );
        let trace = gallager_b_decode(&g, &[true, true], &GallagerBConfig::default()).unwrap();
        assert!(trace.is_success());
        let rec = classify_failure(&g, &trace).unwrap();
        assert!(rec.is_codeword_class());
        assert_eq!(rec.a, 2);
    }

    #[test]
    fn clean_trace_rejected() {
        let g = theta_graph();
        let trace = gallager_b_decode(&g, &[false; 5], &GallagerBConfig::default()).unwrap();
        assert!(matches!(classify_failure(&g, &trace), Err(SearchError::ClassifyOnCleanTrace)));
    }

    #[test]
    fn theta_critical_number_is_three() {
        let g = theta_graph();
        let ts = TrappingSetRecord::from_variables(&g, 0..5);
        let got = critical_number(&g, &ts, 0, &SearchConfig::default()).unwrap();
        assert_eq!(got, CriticalNumber::Found { k: 3, halo: 0 });
    }

    #[test]
    fn eight_cycle_critical_number_is_four() {
        let g = eight_cycle_graph();
        let ts = TrappingSetRecord::from_variables(&g, 0..4);
        let got = critical_number(&g, &ts, 0, &SearchConfig::default()).unwrap();
        assert_eq!(got, CriticalNumber::Found { k: 4, halo: 0 });
    }
}
