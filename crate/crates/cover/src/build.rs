//! Assembling the cover matrix from a swap plan, and the convolutional
//! unwrapping of a double cover.

use crate::plan::SwapPlan;
use crate::{CoverError, Result};
use trapcover_core::graph::{EdgeId, TannerGraph};
use trapcover_core::matrix::SparseBitMatrix;

/// A t-fold cover code. For t = 2 the matrix is exactly
/// `[[H', B], [B, H']]` with `H' + B = H`.
#[derive(Debug, Clone)]
pub struct CoverCode {
    pub matrix: SparseBitMatrix,
    pub plan: SwapPlan,
    pub copies: usize,
}

impl CoverCode {
    /// H' = H - B: the entries whose edges were not swapped.
    pub fn h_prime(&self) -> SparseBitMatrix {
        self.split(false)
    }

    /// B: the swapped entries.
    pub fn b_matrix(&self) -> SparseBitMatrix {
        self.split(true)
    }

    fn split(&self, swapped: bool) -> SparseBitMatrix {
        let base = &self.plan.base;
        let entries = base
            .entries()
            .enumerate()
            .filter(|&(id, _)| self.plan.swapped_edges.contains(&EdgeId(id as u32)) == swapped)
            .map(|(_, rc)| rc);
        SparseBitMatrix::new(base.rows_count(), base.cols_count(), entries).unwrap()
    }
}

/// Build the cover matrix: copy j keeps unswapped edges and sends each
/// swapped edge to copy (j + shift) mod t, shift defaulting to 1. For t = 2
/// this is the block form [[H', B], [B, H']].
pub fn build_cover(plan: &SwapPlan, copies: usize) -> Result<CoverCode> {
    if copies < 2 {
        return Err(CoverError::TooFewCopies(copies));
    }
    for (&edge, &shift) in &plan.shifts {
        if shift == 0 || shift >= copies {
            return Err(CoverError::InvalidShift { shift, copies });
        }
        debug_assert!(plan.swapped_edges.contains(&edge));
    }
    let base = &plan.base;
    let (m, n) = (base.rows_count(), base.cols_count());
    let mut entries = Vec::with_capacity(copies * base.entry_count());
    for (id, (r, c)) in base.entries().enumerate() {
        let shift = plan.shift_of(EdgeId(id as u32));
        for j in 0..copies {
            entries.push((j * m + r, ((j + shift) % copies) * n + c));
        }
    }
    let matrix = SparseBitMatrix::new(copies * m, copies * n, entries)?;
    Ok(CoverCode { matrix, plan: plan.clone(), copies })
}

/// Truncation of the convolutional unwrapping to `periods` windows:
/// block-bidiagonal with H' on the diagonal and B on the first subdiagonal.
pub fn unwrap_convolutional(plan: &SwapPlan, periods: usize) -> SparseBitMatrix {
    let base = &plan.base;
    let (m, n) = (base.rows_count(), base.cols_count());
    let mut entries = Vec::new();
    for (id, (r, c)) in base.entries().enumerate() {
        let swapped = plan.swapped_edges.contains(&EdgeId(id as u32));
        for p in 0..periods {
            if swapped {
                if p + 1 < periods {
                    entries.push(((p + 1) * m + r, p * n + c));
                }
            } else {
                entries.push((p * m + r, p * n + c));
            }
        }
    }
    SparseBitMatrix::new(periods * m, periods * n, entries).unwrap()
}

/// Check the defining property of a cover: every cover node's neighborhood
/// projects bijectively onto its base node's neighborhood.
pub fn is_graph_cover(base: &TannerGraph, cover: &TannerGraph, copies: usize) -> bool {
    let (n, m) = (base.var_count(), base.check_count());
    if cover.var_count() != copies * n || cover.check_count() != copies * m {
        return false;
    }
    for v in 0..cover.var_count() {
        let mut projected: Vec<u32> =
            cover.var_neighbors(v).iter().map(|&(c, _)| c % m as u32).collect();
        projected.sort_unstable();
        let mut expected: Vec<u32> =
            base.var_neighbors(v % n).iter().map(|&(c, _)| c).collect();
        expected.sort_unstable();
        if projected != expected {
            return false;
        }
    }
    for c in 0..cover.check_count() {
        let mut projected: Vec<u32> =
            cover.check_neighbors(c).iter().map(|&(v, _)| v % n as u32).collect();
        projected.sort_unstable();
        let mut expected: Vec<u32> =
            base.check_neighbors(c % m).iter().map(|&(v, _)| v).collect();
        expected.sort_unstable();
        if projected != expected {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plan::Schedule;
    use trapcover_core::gf2::gf2_rank;

    fn toy() -> SparseBitMatrix {
        SparseBitMatrix::new(2, 4, [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn trivial_cover_is_block_diagonal() {
        let base = toy();
        let plan = SwapPlan::new(base.clone(), Schedule::UniqueEdge);
        let cover = build_cover(&plan, 2).unwrap();
        assert_eq!(cover.matrix, base.block_diag(2));
        assert_eq!(gf2_rank(&cover.matrix), 2 * gf2_rank(&base));
    }

    #[test]
    fn all_edges_swapped_is_antidiagonal() {
        let base = toy();
        let edges: Vec<(usize, usize)> =
            base.entries().collect();
        let plan = SwapPlan::manual(base.clone(), &edges);
        let cover = build_cover(&plan, 2).unwrap();
        // [[0, H], [H, 0]]: same rank and degree profile as the block diagonal
        assert_eq!(gf2_rank(&cover.matrix), 2 * gf2_rank(&base));
        for (r, c) in base.entries() {
            assert!(cover.matrix.contains(r, 4 + c));
            assert!(cover.matrix.contains(2 + r, c));
        }
    }

    #[test]
    fn block_layout_matches_h_prime_and_b() {
        let base = toy();
        let plan = SwapPlan::manual(base, &[(0, 1), (1, 3)]);
        let cover = build_cover(&plan, 2).unwrap();
        let (hp, b) = (cover.h_prime(), cover.b_matrix());
        for (r, c) in hp.entries() {
            assert!(cover.matrix.contains(r, c) && cover.matrix.contains(2 + r, 4 + c));
        }
        for (r, c) in b.entries() {
            assert!(cover.matrix.contains(r, 4 + c) && cover.matrix.contains(2 + r, c));
        }
        assert_eq!(hp.entry_count() + b.entry_count(), cover.plan.base.entry_count());
    }

    #[test]
    fn regularity_preserved_for_all_t() {
        let base = toy();
        let plan = SwapPlan::manual(base.clone(), &[(0, 0), (1, 2)]);
        for t in 2..5 {
            let cover = build_cover(&plan, t).unwrap();
            let mut expected = base.col_weights().repeat(t);
            let mut cover_cols = cover.matrix.col_weights();
            expected.sort_unstable();
            cover_cols.sort_unstable();
            assert_eq!(cover_cols, expected);
            let base_graph = TannerGraph::from_matrix(&base);
            let cover_graph = TannerGraph::from_matrix(&cover.matrix);
            assert!(is_graph_cover(&base_graph, &cover_graph, t));
        }
    }

    #[test]
    fn too_few_copies_rejected() {
        let plan = SwapPlan::new(toy(), Schedule::UniqueEdge);
        assert!(matches!(build_cover(&plan, 1), Err(CoverError::TooFewCopies(1))));
    }

    #[test]
    fn bad_shift_rejected() {
        let base = toy();
        let mut plan = SwapPlan::manual(base, &[(0, 0)]);
        let &edge = plan.swapped_edges.iter().next().unwrap();
        plan.shifts.insert(edge, 3);
        assert!(matches!(build_cover(&plan, 3), Err(CoverError::InvalidShift { shift: 3, .. })));
        plan.shifts.insert(edge, 2);
        assert!(build_cover(&plan, 3).is_ok());
    }

    #[test]
    fn unwrap_structure() {
        let base = toy();
        let plan = SwapPlan::manual(base, &[(0, 1)]);
        let single = unwrap_convolutional(&plan, 1);
        let cover = build_cover(&plan, 2).unwrap();
        assert_eq!(single, cover.h_prime());

        let two = unwrap_convolutional(&plan, 2);
        let (hp, b) = (cover.h_prime(), cover.b_matrix());
        for (r, c) in hp.entries() {
            assert!(two.contains(r, c) && two.contains(2 + r, 4 + c));
        }
        for (r, c) in b.entries() {
            assert!(two.contains(2 + r, c));
            assert!(!two.contains(r, 4 + c));
        }

        // every consecutive 2x2 block window of the 4-period matrix looks
        // like [[H', 0], [B, H']]
        let four = unwrap_convolutional(&plan, 4);
        for p in 0..3 {
            for (r, c) in hp.entries() {
                assert!(four.contains(p * 2 + r, p * 4 + c));
            }
            for (r, c) in b.entries() {
                assert!(four.contains((p + 1) * 2 + r, p * 4 + c));
            }
        }
    }
}
