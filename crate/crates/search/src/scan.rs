//! Topological trapping-set enumeration: no decoding involved.
//!
//! Dominant trapping sets are built around short cycles, so the scan seeds
//! from every cycle of length up to girth + 4 (capped at 2·a_max, since a
//! subset of a variables cannot hold a longer one) and grows each seed by one
//! adjacent variable at a time. Every connected, cycle-containing variable
//! set of size at most a_max whose shortest cycle fits the seed bound is
//! reached this way; those with 0 < b <= b_max odd checks are reported.

use crate::record::TrappingSetRecord;
use crate::{Result, SearchError};
use std::collections::BTreeSet;
use trapcover_core::graph::TannerGraph;
use trapcover_core::profile::{girth, Girth};

#[derive(Debug, Clone, Copy)]
pub struct ScanConfig {
    /// Maximum number of distinct variable subsets the scan may explore.
    pub subset_budget: u64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self { subset_budget: 10_000_000 }
    }
}

struct CycleDfs<'a> {
    graph: &'a TannerGraph,
    root: u32,
    max_vars: usize,
    var_used: Vec<bool>,
    check_used: Vec<bool>,
    path: Vec<u32>,
    seeds: BTreeSet<Vec<u32>>,
}

impl CycleDfs<'_> {
    /// Extend the variable path from `current`, closing cycles back at the
    /// root. Only variables above the root are entered, so each cycle is
    /// found exactly at its minimal variable.
    fn extend(&mut self, current: u32) {
        for &(c, _) in self.graph.var_neighbors(current as usize) {
            if self.check_used[c as usize] {
                continue;
            }
            self.check_used[c as usize] = true;
            for &(w, _) in self.graph.check_neighbors(c as usize) {
                if w == self.root && self.path.len() >= 2 {
                    let mut cyc = self.path.clone();
                    cyc.sort_unstable();
                    self.seeds.insert(cyc);
                } else if w > self.root
                    && !self.var_used[w as usize]
                    && self.path.len() < self.max_vars
                {
                    self.var_used[w as usize] = true;
                    self.path.push(w);
                    self.extend(w);
                    self.path.pop();
                    self.var_used[w as usize] = false;
                }
            }
            self.check_used[c as usize] = false;
        }
    }
}

fn cycle_seeds(graph: &TannerGraph, max_vars: usize) -> BTreeSet<Vec<u32>> {
    let mut dfs = CycleDfs {
        graph,
        root: 0,
        max_vars,
        var_used: vec![false; graph.var_count()],
        check_used: vec![false; graph.check_count()],
        path: Vec::new(),
        seeds: BTreeSet::new(),
    };
    for v in 0..graph.var_count() as u32 {
        dfs.root = v;
        dfs.var_used[v as usize] = true;
        dfs.path.push(v);
        dfs.extend(v);
        dfs.path.pop();
        dfs.var_used[v as usize] = false;
    }
    dfs.seeds
}

pub fn topological_ts_scan(
    graph: &TannerGraph,
    a_max: usize,
    b_max: usize,
    config: &ScanConfig,
) -> Result<Vec<TrappingSetRecord>> {
    let seed_cycle_vars = match girth(graph) {
        Girth::Acyclic => return Ok(Vec::new()),
        Girth::Cycle(g) => ((g + 4) / 2).min(a_max),
    };
    let mut seen: BTreeSet<Vec<u32>> = cycle_seeds(graph, seed_cycle_vars);
    if seen.len() as u64 > config.subset_budget {
        return Err(SearchError::BudgetExceeded {
            required: seen.len() as u64,
            budget: config.subset_budget,
        });
    }
    let mut frontier: Vec<Vec<u32>> = seen.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for set in &frontier {
            if set.len() >= a_max {
                continue;
            }
            // grow by one variable adjacent through a shared check
            let mut adjacent: BTreeSet<u32> = BTreeSet::new();
            for &v in set {
                for &(c, _) in graph.var_neighbors(v as usize) {
                    for &(w, _) in graph.check_neighbors(c as usize) {
                        if set.binary_search(&w).is_err() {
                            adjacent.insert(w);
                        }
                    }
                }
            }
            for w in adjacent {
                let mut grown = set.clone();
                let pos = grown.binary_search(&w).unwrap_err();
                grown.insert(pos, w);
                if seen.insert(grown.clone()) {
                    if seen.len() as u64 > config.subset_budget {
                        return Err(SearchError::BudgetExceeded {
                            required: seen.len() as u64,
                            budget: config.subset_budget,
                        });
                    }
                    next.push(grown);
                }
            }
        }
        frontier = next;
    }
    Ok(seen
        .into_iter()
        .map(|vars| TrappingSetRecord::from_variables(graph, vars))
        .filter(|rec| rec.b > 0 && rec.b <= b_max)
        .collect())
}
