//! The (a,b) trapping-set record and its induced-subgraph bookkeeping.

use serde::Serialize;
use std::collections::BTreeMap;
use trapcover_core::graph::TannerGraph;

/// An (a,b) trapping set: `a` variables whose induced subgraph leaves `b`
/// checks with odd degree. `b == 0` marks a codeword-type miscorrection
/// class rather than a trapping set proper.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrappingSetRecord {
    /// Sorted variable indices.
    pub variables: Vec<u32>,
    pub a: usize,
    pub b: usize,
    /// All checks adjacent to `variables`, sorted.
    pub induced_checks: Vec<u32>,
    /// Checks with odd degree in the induced subgraph, sorted.
    pub odd_checks: Vec<u32>,
    /// Certified upper bound on the critical number, if computed.
    pub critical_number: Option<usize>,
    /// Halo radius the critical-number search was restricted to.
    pub halo: Option<usize>,
    /// Initial error supports known to drive the decoder into this set.
    pub witness_patterns: Vec<Vec<u32>>,
}

impl TrappingSetRecord {
    /// Build the record for a variable set from its induced subgraph.
    pub fn from_variables(graph: &TannerGraph, variables: impl IntoIterator<Item = u32>) -> Self {
        let mut variables: Vec<u32> = variables.into_iter().collect();
        variables.sort_unstable();
        variables.dedup();
        let mut degree: BTreeMap<u32, usize> = BTreeMap::new();
        for &v in &variables {
            for &(c, _) in graph.var_neighbors(v as usize) {
                *degree.entry(c).or_insert(0) += 1;
            }
        }
        let induced_checks: Vec<u32> = degree.keys().copied().collect();
        let odd_checks: Vec<u32> =
            degree.iter().filter_map(|(&c, &d)| (d % 2 == 1).then_some(c)).collect();
        TrappingSetRecord {
            a: variables.len(),
            b: odd_checks.len(),
            variables,
            induced_checks,
            odd_checks,
            critical_number: None,
            halo: None,
            witness_patterns: Vec::new(),
        }
    }

    pub fn is_codeword_class(&self) -> bool {
        self.b == 0
    }

    pub fn contains_all(&self, variables: &[u32]) -> bool {
        variables.iter().all(|v| self.variables.binary_search(v).is_ok())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use trapcover_core::matrix::SparseBitMatrix;

    #[test]
    fn six_cycle_with_pendants_is_3_3() {
        // ring of three degree-2 checks plus one pendant check per variable
        let mut entries = Vec::new();
        for i in 0..3 {
            entries.push((i, i));
            entries.push((i, (i + 1) % 3));
            entries.push((3 + i, i));
        }
        let g = TannerGraph::from_matrix(&SparseBitMatrix::new(6, 3, entries).unwrap());
        let rec = TrappingSetRecord::from_variables(&g, [0, 1, 2]);
        assert_eq!((rec.a, rec.b), (3, 3));
        assert_eq!(rec.odd_checks, vec![3, 4, 5]);
        assert_eq!(rec.induced_checks.len(), 6);
        assert!(!rec.is_codeword_class());
    }

    #[test]
    fn parity_law_holds() {
        // b must have the parity of the number of induced edges
        let mut entries = Vec::new();
        for i in 0..4 {
            entries.push((i, i));
            entries.push((i, (i + 1) % 4));
        }
        let g = TannerGraph::from_matrix(&SparseBitMatrix::new(4, 4, entries).unwrap());
        for vars in [vec![0u32], vec![0, 1], vec![0, 1, 2], vec![0, 1, 2, 3]] {
            let rec = TrappingSetRecord::from_variables(&g, vars.clone());
            let edges: usize = vars.iter().map(|&v| g.var_degree(v as usize)).sum();
            assert_eq!(rec.b % 2, edges % 2);
        }
    }
}
