//! The swap plan: which base edges move to the other copy, which are frozen,
//! and the decision log that produced it.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use trapcover_core::graph::{EdgeId, TannerGraph};
use trapcover_core::matrix::SparseBitMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Schedule {
    /// Swap a uniformly drawn eligible edge.
    Random { seed: u64 },
    /// Prefer an edge that participates in no other target set.
    UniqueEdge,
    /// Caller supplies the edge for each swap, in target order.
    Manual { edges: Vec<(usize, usize)> },
    /// Frozen edges stay swappable; every swap is re-verified against all
    /// previously treated sets.
    RelaxedFreeze { seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LogAction {
    /// An edge of this set was swapped (and the set's edges then frozen).
    Swapped,
    /// The set already shared an edge with the swapped set; frozen directly.
    AlreadyIntersected,
    /// No eligible edge could break the set under the freeze rule.
    Unresolvable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogEntry {
    /// Variable set of the target, sorted.
    pub target: Vec<u32>,
    /// (check, variable) of the swapped edge, when one was swapped.
    pub edge: Option<(usize, usize)>,
    pub action: LogAction,
    /// Survival verdict for this set in the cover after the action.
    pub eliminated: bool,
}

/// A double-cover (or t-cover) recipe over a base matrix H: the swapped
/// edges define B, the rest H' = H - B.
#[derive(Debug, Clone)]
pub struct SwapPlan {
    pub base: SparseBitMatrix,
    pub swapped_edges: BTreeSet<EdgeId>,
    pub frozen_edges: BTreeSet<EdgeId>,
    /// Cyclic shift per swapped edge for covers with more than two copies;
    /// absent means shift 1.
    pub shifts: BTreeMap<EdgeId, usize>,
    pub schedule: Schedule,
    pub log: Vec<LogEntry>,
}

impl SwapPlan {
    pub fn new(base: SparseBitMatrix, schedule: Schedule) -> Self {
        SwapPlan {
            base,
            swapped_edges: BTreeSet::new(),
            frozen_edges: BTreeSet::new(),
            shifts: BTreeMap::new(),
            schedule,
            log: Vec::new(),
        }
    }

    /// A manual plan directly from a set of (check, variable) edges to swap.
    pub fn manual(base: SparseBitMatrix, edges: &[(usize, usize)]) -> Self {
        let graph = TannerGraph::from_matrix(&base);
        let swapped_edges = edges
            .iter()
            .map(|&(c, v)| graph.find_edge(c, v).expect("edge exists in base matrix"))
            .collect();
        SwapPlan {
            base,
            swapped_edges,
            frozen_edges: BTreeSet::new(),
            shifts: BTreeMap::new(),
            schedule: Schedule::Manual { edges: edges.to_vec() },
            log: Vec::new(),
        }
    }

    pub fn shift_of(&self, edge: EdgeId) -> usize {
        if self.swapped_edges.contains(&edge) {
            self.shifts.get(&edge).copied().unwrap_or(1)
        } else {
            0
        }
    }

    /// Serialized form: seed, schedule and the ordered decision log, enough
    /// to replay the construction bit-exactly against the same base matrix.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Export<'a> {
            seed: Option<u64>,
            schedule: &'a Schedule,
            swapped: Vec<(usize, usize)>,
            log: &'a [LogEntry],
        }
        let graph = TannerGraph::from_matrix(&self.base);
        let export = Export {
            seed: match self.schedule {
                Schedule::Random { seed } | Schedule::RelaxedFreeze { seed } => Some(seed),
                _ => None,
            },
            schedule: &self.schedule,
            swapped: self.swapped_edges.iter().map(|&e| graph.edge(e)).collect(),
            log: &self.log,
        };
        serde_json::to_string_pretty(&export).expect("plan serializes")
    }
}

/// Does the trapping set on `vars` survive in the cover defined by the plan?
///
/// The lift of the induced subgraph splits into t disjoint copies of the
/// original — i.e. the set survives — exactly when the edge shifts form a
/// coboundary: around every cycle of the induced subgraph the shifts sum to
/// zero mod t. Tested by assigning potentials along a spanning forest and
/// checking every remaining edge. Swapping edges that merely interchange the
/// check copies (a coboundary) leaves the set intact, which is why the swap
/// log alone can never certify elimination.
pub fn set_survives(graph: &TannerGraph, plan: &SwapPlan, vars: &[u32], copies: usize) -> bool {
    let t = copies as i64;
    // local indices: variables then induced checks
    let mut var_index = BTreeMap::new();
    for (i, &v) in vars.iter().enumerate() {
        var_index.insert(v, i);
    }
    let mut check_index = BTreeMap::new();
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); vars.len()];
    for &v in vars {
        for &(c, e) in graph.var_neighbors(v as usize) {
            let next = vars.len() + check_index.len();
            let ci = *check_index.entry(c).or_insert(next);
            if ci == adj.len() {
                adj.push(Vec::new());
            }
            let shift = plan.shift_of(e) as i64;
            adj[var_index[&v]].push((ci, shift));
            adj[ci].push((var_index[&v], -shift));
        }
    }
    let total = adj.len();
    let mut potential: Vec<Option<i64>> = vec![None; total];
    for start in 0..total {
        if potential[start].is_some() {
            continue;
        }
        potential[start] = Some(0);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let pu = potential[u].unwrap();
            for &(w, shift) in &adj[u] {
                let expected = (pu + shift).rem_euclid(t);
                match potential[w] {
                    None => {
                        potential[w] = Some(expected);
                        stack.push(w);
                    }
                    Some(p) => {
                        if p != expected {
                            return false; // some cycle has nonzero net shift
                        }
                    }
                }
            }
        }
    }
    true
}
