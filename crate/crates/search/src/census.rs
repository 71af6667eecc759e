//! Exhaustive decoding of small-weight error patterns under Gallager B.
//!
//! All searches assume the all-zero codeword was transmitted, so an error
//! pattern of weight k is simply a received word with k ones. Enumeration is
//! lexicographic; the parallel path partitions patterns by their smallest
//! element and merges ranges in order, so results do not depend on the worker
//! count.

use crate::classify::classify_failure;
use crate::record::TrappingSetRecord;
use crate::{Result, SearchError};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use trapcover_core::graph::TannerGraph;
use trapcover_decoders::{gallager_b_decode, GallagerBConfig};

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub decoder: GallagerBConfig,
    /// Maximum number of error patterns a single search may enumerate.
    pub pattern_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self { decoder: GallagerBConfig::default(), pattern_budget: 100_000_000 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassCount {
    pub record: TrappingSetRecord,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct InstantonCensus {
    pub k: usize,
    pub patterns_tested: u64,
    /// (initial error support, classification), in enumeration order.
    pub failures: Vec<(Vec<u32>, TrappingSetRecord)>,
    /// Distinct trapping-set classes keyed by variable set, with the witness
    /// patterns that reached each and how often.
    pub classes: Vec<ClassCount>,
}

impl InstantonCensus {
    fn from_failures(k: usize, patterns_tested: u64, failures: Vec<(Vec<u32>, TrappingSetRecord)>) -> Self {
        let mut by_vars: BTreeMap<Vec<u32>, ClassCount> = BTreeMap::new();
        for (pattern, record) in &failures {
            let entry = by_vars.entry(record.variables.clone()).or_insert_with(|| ClassCount {
                record: record.clone(),
                multiplicity: 0,
            });
            entry.multiplicity += 1;
            entry.record.witness_patterns.push(pattern.clone());
        }
        InstantonCensus { k, patterns_tested, failures, classes: by_vars.into_values().collect() }
    }

    /// Export as JSON with a stable field order per record.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Entry<'a> {
            variables: &'a [u32],
            a: usize,
            b: usize,
            critical_number: Option<usize>,
            halo: Option<usize>,
            witnesses: &'a [Vec<u32>],
        }
        #[derive(Serialize)]
        struct Export<'a> {
            k: usize,
            patterns_tested: u64,
            classes: Vec<Entry<'a>>,
        }
        let export = Export {
            k: self.k,
            patterns_tested: self.patterns_tested,
            classes: self
                .classes
                .iter()
                .map(|c| Entry {
                    variables: &c.record.variables,
                    a: c.record.a,
                    b: c.record.b,
                    critical_number: c.record.critical_number,
                    halo: c.record.halo,
                    witnesses: &c.record.witness_patterns,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&export).expect("census serializes")
    }
}

/// Binomial coefficient, saturating.
pub(crate) fn binomial(n: u64, k: u64) -> u64 {
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

/// Visit every k-subset of `allowed[from..]` that starts with `prefix`, in
/// lexicographic order. Returns false if the visitor asked to stop.
fn combinations(
    allowed: &[u32],
    from: usize,
    k: usize,
    prefix: &mut Vec<u32>,
    visit: &mut impl FnMut(&[u32]) -> bool,
) -> bool {
    if k == 0 {
        return visit(prefix);
    }
    for i in from..=allowed.len().saturating_sub(k) {
        prefix.push(allowed[i]);
        let keep_going = combinations(allowed, i + 1, k - 1, prefix, visit);
        prefix.pop();
        if !keep_going {
            return false;
        }
    }
    true
}

/// Lexicographic enumeration with early exit; `visit` returns false to stop.
pub(crate) fn for_each_pattern(allowed: &[u32], k: usize, mut visit: impl FnMut(&[u32]) -> bool) {
    let mut prefix = Vec::with_capacity(k);
    combinations(allowed, 0, k, &mut prefix, &mut visit);
}

fn decode_pattern(
    graph: &TannerGraph,
    pattern: &[u32],
    word: &mut [bool],
    config: &GallagerBConfig,
) -> Option<(Vec<u32>, TrappingSetRecord)> {
    for &v in pattern {
        word[v as usize] = true;
    }
    let trace = gallager_b_decode(graph, word, config).expect("pattern length matches graph");
    for &v in pattern {
        word[v as usize] = false;
    }
    if trace.is_success() {
        None
    } else {
        let record = classify_failure(graph, &trace).expect("failure traces classify");
        Some((pattern.to_vec(), record))
    }
}

fn search_over(
    graph: &TannerGraph,
    allowed: &[u32],
    k: usize,
    config: &SearchConfig,
) -> Result<InstantonCensus> {
    let total = binomial(allowed.len() as u64, k as u64);
    if total > config.pattern_budget {
        return Err(SearchError::BudgetExceeded { required: total, budget: config.pattern_budget });
    }
    if k == 0 {
        return Ok(InstantonCensus::from_failures(0, 1, Vec::new()));
    }
    let n = graph.var_count();
    // partition by smallest pattern element; ranges are disjoint and ordered
    let failures: Vec<(Vec<u32>, TrappingSetRecord)> = (0..allowed.len())
        .into_par_iter()
        .map(|first| {
            let mut word = vec![false; n];
            let mut found = Vec::new();
            let mut prefix = vec![allowed[first]];
            combinations(allowed, first + 1, k - 1, &mut prefix, &mut |pattern| {
                if let Some(hit) = decode_pattern(graph, pattern, &mut word, &config.decoder) {
                    found.push(hit);
                }
                true
            });
            found
        })
        .flatten_iter()
        .collect();
    Ok(InstantonCensus::from_failures(k, total, failures))
}

/// Decode every weight-k error pattern of the code.
pub fn instanton_search(graph: &TannerGraph, k: usize, config: &SearchConfig) -> Result<InstantonCensus> {
    let allowed: Vec<u32> = (0..graph.var_count() as u32).collect();
    search_over(graph, &allowed, k, config)
}

/// Decode every weight-k pattern supported on the candidate variables plus
/// their halo (variables within graph distance 2·halo_radius).
pub fn restricted_instanton_search(
    graph: &TannerGraph,
    k: usize,
    candidate_variables: &[u32],
    halo_radius: usize,
    config: &SearchConfig,
) -> Result<InstantonCensus> {
    for &v in candidate_variables {
        if v as usize >= graph.var_count() {
            return Err(SearchError::VariableOutOfRange { var: v as usize });
        }
    }
    let seeds: Vec<usize> = candidate_variables.iter().map(|&v| v as usize).collect();
    let allowed: Vec<u32> =
        graph.variable_ball(&seeds, halo_radius).into_iter().map(|v| v as u32).collect();
    search_over(graph, &allowed, k, config)
}
