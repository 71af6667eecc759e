//! The elimination algorithm: walk the target sets in order of their
//! critical numbers, swap one edge per set, freeze the set's edges.

use crate::build::{build_cover, CoverCode};
use crate::plan::{set_survives, LogAction, LogEntry, Schedule, SwapPlan};
use crate::{CoverError, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use trapcover_core::graph::{EdgeId, TannerGraph};
use trapcover_core::matrix::SparseBitMatrix;
use trapcover_search::TrappingSetRecord;

#[derive(Debug, Clone, Copy)]
pub struct EliminateOptions {
    pub copies: usize,
    /// Only sets with critical number up to this threshold are treated.
    pub max_critical: usize,
}

impl Default for EliminateOptions {
    fn default() -> Self {
        Self { copies: 2, max_critical: usize::MAX }
    }
}

/// Build a cover that breaks the given trapping sets.
///
/// Targets are processed in ascending order of critical number (ties by
/// variable set). Per target: if one of its edges is already swapped, the
/// set is frozen directly; otherwise one eligible edge is swapped — chosen
/// by the schedule, and verified to actually break the set in the cover,
/// since a swap that amounts to a check-copy interchange changes nothing —
/// and then all the set's edges are frozen. A target whose every edge is
/// frozen with none swapped is logged as unresolvable and left alone.
///
/// The `Manual` schedule applies the caller's edges without the breakage
/// check (the log still records the honest verdict); `RelaxedFreeze` may
/// swap frozen edges but re-verifies every previously broken set after each
/// swap.
pub fn eliminate_trapping_sets(
    base: &SparseBitMatrix,
    targets: &[TrappingSetRecord],
    schedule: Schedule,
    options: &EliminateOptions,
) -> Result<(CoverCode, SwapPlan)> {
    let graph = TannerGraph::from_matrix(base);
    let mut order: Vec<usize> = Vec::new();
    for (i, t) in targets.iter().enumerate() {
        let k = t.critical_number.ok_or(CoverError::MissingCriticalNumber { index: i })?;
        if k <= options.max_critical {
            order.push(i);
        }
    }
    order.sort_by_key(|&i| (targets[i].critical_number.unwrap(), targets[i].variables.clone()));

    let edge_sets: Vec<Vec<EdgeId>> = order
        .iter()
        .map(|&i| {
            let vars: Vec<usize> = targets[i].variables.iter().map(|&v| v as usize).collect();
            graph.edges_of_vars(&vars)
        })
        .collect();
    let mut participation: BTreeMap<EdgeId, usize> = BTreeMap::new();
    for edges in &edge_sets {
        for &e in edges {
            *participation.entry(e).or_insert(0) += 1;
        }
    }

    let mut rng = match schedule {
        Schedule::Random { seed } | Schedule::RelaxedFreeze { seed } => {
            Some(ChaCha8Rng::seed_from_u64(seed))
        }
        _ => None,
    };
    let relaxed = matches!(schedule, Schedule::RelaxedFreeze { .. });
    let mut manual_cursor = 0usize;

    let mut plan = SwapPlan::new(base.clone(), schedule.clone());
    let mut broken: Vec<usize> = Vec::new(); // positions in `order` verified broken

    for (pos, &i) in order.iter().enumerate() {
        let target = &targets[i];
        let edges = &edge_sets[pos];

        if edges.iter().any(|e| plan.swapped_edges.contains(e)) {
            let eliminated = !set_survives(&graph, &plan, &target.variables, options.copies);
            // under the relaxed schedule an intersecting-but-intact set is
            // not settled for free: it falls through to the swap step
            if eliminated || !relaxed {
                for &e in edges {
                    plan.frozen_edges.insert(e);
                }
                if eliminated {
                    broken.push(pos);
                }
                plan.log.push(LogEntry {
                    target: target.variables.clone(),
                    edge: None,
                    action: LogAction::AlreadyIntersected,
                    eliminated,
                });
                continue;
            }
        }

        let mut eligible: Vec<EdgeId> = edges
            .iter()
            .copied()
            .filter(|e| {
                if relaxed {
                    !plan.swapped_edges.contains(e)
                } else {
                    !plan.frozen_edges.contains(e)
                }
            })
            .collect();

        if eligible.is_empty() {
            plan.log.push(LogEntry {
                target: target.variables.clone(),
                edge: None,
                action: LogAction::Unresolvable,
                eliminated: false,
            });
            continue;
        }

        let candidates: Vec<EdgeId> = match &schedule {
            Schedule::Random { .. } | Schedule::RelaxedFreeze { .. } => {
                eligible.shuffle(rng.as_mut().unwrap());
                eligible
            }
            Schedule::UniqueEdge => {
                eligible.sort_by_key(|e| (participation[e] > 1, *e));
                eligible
            }
            Schedule::Manual { edges: manual } => {
                let &(check, var) = manual
                    .get(manual_cursor)
                    .ok_or(CoverError::ManualScheduleExhausted { index: i })?;
                manual_cursor += 1;
                let edge = graph
                    .find_edge(check, var)
                    .filter(|e| eligible.contains(e))
                    .ok_or(CoverError::ManualEdgeIneligible { check, var, index: i })?;
                vec![edge]
            }
        };

        let mut chosen: Option<EdgeId> = None;
        for &candidate in &candidates {
            plan.swapped_edges.insert(candidate);
            let target_broken =
                !set_survives(&graph, &plan, &target.variables, options.copies);
            let others_still_broken = !relaxed
                || broken.iter().all(|&p| {
                    !set_survives(&graph, &plan, &targets[order[p]].variables, options.copies)
                });
            let accept = matches!(schedule, Schedule::Manual { .. })
                || (target_broken && others_still_broken);
            if accept {
                chosen = Some(candidate);
                break;
            }
            plan.swapped_edges.remove(&candidate);
        }

        match chosen {
            Some(edge) => {
                for &e in edges {
                    plan.frozen_edges.insert(e);
                }
                let eliminated = !set_survives(&graph, &plan, &target.variables, options.copies);
                if eliminated {
                    broken.push(pos);
                }
                plan.log.push(LogEntry {
                    target: target.variables.clone(),
                    edge: Some(graph.edge(edge)),
                    action: LogAction::Swapped,
                    eliminated,
                });
            }
            None => {
                plan.log.push(LogEntry {
                    target: target.variables.clone(),
                    edge: None,
                    action: LogAction::Unresolvable,
                    eliminated: false,
                });
            }
        }
    }

    let cover = build_cover(&plan, options.copies)?;
    Ok((cover, plan))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plan::set_survives;
    use trapcover_search::TrappingSetRecord;

    fn theta_matrix() -> SparseBitMatrix {
        let mut entries = Vec::new();
        for i in 0..3 {
            let mid = 2 + i;
            entries.push((2 * i, 0));
            entries.push((2 * i, mid));
            entries.push((2 * i + 1, mid));
            entries.push((2 * i + 1, 1));
            entries.push((6 + i, mid));
        }
        SparseBitMatrix::new(9, 5, entries).unwrap()
    }

    /// Two 6-cycles sharing variable 2: cycle A on {0,1,2}, cycle B on {2,3,4}.
    fn two_cycle_matrix() -> SparseBitMatrix {
        SparseBitMatrix::new(
            6,
            5,
            [
                (0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0), // cycle A
                (3, 2), (3, 3), (4, 3), (4, 4), (5, 4), (5, 2), // cycle B
            ],
        )
        .unwrap()
    }

    fn record(h: &SparseBitMatrix, vars: &[u32], k: usize) -> TrappingSetRecord {
        let g = TannerGraph::from_matrix(h);
        let mut rec = TrappingSetRecord::from_variables(&g, vars.iter().copied());
        rec.critical_number = Some(k);
        rec
    }

    #[test]
    fn single_theta_target_is_broken_by_any_seed() {
        let base = theta_matrix();
        let target = record(&base, &[0, 1, 2, 3, 4], 3);
        for seed in 0..10 {
            let (cover, plan) = eliminate_trapping_sets(
                &base,
                &[target.clone()],
                Schedule::Random { seed },
                &EliminateOptions::default(),
            )
            .unwrap();
            let graph = TannerGraph::from_matrix(&base);
            assert!(!set_survives(&graph, &plan, &[0, 1, 2, 3, 4], 2));
            assert_eq!(plan.log.len(), 1);
            assert_eq!(plan.log[0].action, LogAction::Swapped);
            assert!(plan.log[0].eliminated);
            assert_eq!(cover.matrix.rows_count(), 18);
        }
    }

    #[test]
    fn overlapping_cycles_both_broken_and_freeze_respected() {
        let base = two_cycle_matrix();
        let targets = [record(&base, &[0, 1, 2], 2), record(&base, &[2, 3, 4], 3)];
        let (_, plan) = eliminate_trapping_sets(
            &base,
            &targets,
            Schedule::Random { seed: 7 },
            &EliminateOptions::default(),
        )
        .unwrap();
        let graph = TannerGraph::from_matrix(&base);
        for t in &targets {
            assert!(!set_survives(&graph, &plan, &t.variables, 2));
        }
        // freeze discipline: replay the log; no swap may hit an earlier freeze
        let mut frozen: Vec<(usize, usize)> = Vec::new();
        for entry in &plan.log {
            if let Some(edge) = entry.edge {
                assert!(!frozen.contains(&edge), "swapped a frozen edge: {edge:?}");
            }
            let vars: Vec<usize> = entry.target.iter().map(|&v| v as usize).collect();
            for e in graph.edges_of_vars(&vars) {
                frozen.push(graph.edge(e));
            }
        }
    }

    #[test]
    fn unique_edge_prefers_unshared_edges() {
        let base = two_cycle_matrix();
        let targets = [record(&base, &[0, 1, 2], 2), record(&base, &[2, 3, 4], 3)];
        let (_, plan) = eliminate_trapping_sets(
            &base,
            &targets,
            Schedule::UniqueEdge,
            &EliminateOptions::default(),
        )
        .unwrap();
        let graph = TannerGraph::from_matrix(&base);
        let shared: Vec<EdgeId> = graph
            .edges_of_vars(&[0, 1, 2])
            .into_iter()
            .filter(|e| graph.edges_of_vars(&[2, 3, 4]).contains(e))
            .collect();
        for entry in &plan.log {
            let (check, var) = entry.edge.unwrap();
            let e = graph.find_edge(check, var).unwrap();
            assert!(!shared.contains(&e), "picked a shared edge {:?}", entry.edge);
            assert!(entry.eliminated);
        }
    }

    #[test]
    fn repeated_target_freezes_via_intersection() {
        let base = theta_matrix();
        let t = record(&base, &[0, 1, 2, 3, 4], 3);
        let (_, plan) = eliminate_trapping_sets(
            &base,
            &[t.clone(), t],
            Schedule::Random { seed: 1 },
            &EliminateOptions::default(),
        )
        .unwrap();
        assert_eq!(plan.log[0].action, LogAction::Swapped);
        assert_eq!(plan.log[1].action, LogAction::AlreadyIntersected);
        assert!(plan.log[1].eliminated);
    }

    #[test]
    fn nested_target_with_all_edges_frozen_is_unresolvable() {
        // cycle A = {0,1,2}; the sub-pair {0,1} has no cycle and all its
        // edges get frozen when A is treated with a swap at (1, 2)
        let base = two_cycle_matrix();
        let a = record(&base, &[0, 1, 2], 1);
        let b = record(&base, &[0, 1], 2);
        let (_, plan) = eliminate_trapping_sets(
            &base,
            &[a, b],
            Schedule::Manual { edges: vec![(1, 2)] },
            &EliminateOptions::default(),
        )
        .unwrap();
        assert_eq!(plan.log[1].action, LogAction::Unresolvable);
        assert!(!plan.log[1].eliminated);
    }

    #[test]
    fn relaxed_freeze_may_reuse_frozen_edges_and_keeps_earlier_sets_broken() {
        let base = two_cycle_matrix();
        let targets = [record(&base, &[0, 1, 2], 2), record(&base, &[2, 3, 4], 3)];
        let (_, plan) = eliminate_trapping_sets(
            &base,
            &targets,
            Schedule::RelaxedFreeze { seed: 3 },
            &EliminateOptions::default(),
        )
        .unwrap();
        let graph = TannerGraph::from_matrix(&base);
        for (t, entry) in targets.iter().zip(&plan.log) {
            assert!(entry.eliminated);
            assert!(!set_survives(&graph, &plan, &t.variables, 2));
        }
    }

    #[test]
    fn missing_critical_number_is_an_error() {
        let base = theta_matrix();
        let g = TannerGraph::from_matrix(&base);
        let rec = TrappingSetRecord::from_variables(&g, 0..5);
        let err = eliminate_trapping_sets(
            &base,
            &[rec],
            Schedule::UniqueEdge,
            &EliminateOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, CoverError::MissingCriticalNumber { index: 0 }));
    }

    #[test]
    fn threshold_skips_large_critical_numbers() {
        let base = theta_matrix();
        let t = record(&base, &[0, 1, 2, 3, 4], 5);
        let options = EliminateOptions { max_critical: 4, ..Default::default() };
        let (cover, plan) =
            eliminate_trapping_sets(&base, &[t], Schedule::UniqueEdge, &options).unwrap();
        assert!(plan.log.is_empty());
        assert!(plan.swapped_edges.is_empty());
        assert_eq!(cover.matrix, base.block_diag(2));
    }
}
