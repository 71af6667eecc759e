//! Structural profile of a code: dimensions, GF(2) rank, rate, girth and
//! degree histograms.

use crate::gf2::gf2_rank;
use crate::graph::TannerGraph;
use crate::matrix::SparseBitMatrix;
use std::collections::BTreeMap;

/// Girth of the Tanner graph; bipartite, so always even when finite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Girth {
    Cycle(usize),
    Acyclic,
}

#[derive(Debug, Clone)]
pub struct CodeProfile {
    pub n: usize,
    pub m: usize,
    pub rank: usize,
    pub rate: f64,
    pub girth: Girth,
    /// degree -> count, over columns / rows.
    pub column_weights: BTreeMap<usize, usize>,
    pub row_weights: BTreeMap<usize, usize>,
}

fn histogram(weights: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &w in weights {
        *h.entry(w).or_insert(0) += 1;
    }
    h
}

/// Girth by BFS from every variable node with parent-edge exclusion.
/// Every cycle passes through a variable node, so variable roots suffice.
pub fn girth(graph: &TannerGraph) -> Girth {
    let n = graph.var_count();
    let m = graph.check_count();
    let total = n + m; // vars are 0..n, checks n..n+m
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; total];
    let mut parent_edge = vec![u32::MAX; total];
    for root in 0..n {
        dist.fill(usize::MAX);
        dist[root] = 0;
        parent_edge[root] = u32::MAX;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                // no shorter cycle can close beyond half the best length
                if 2 * dist[u] + 2 > b {
                    break;
                }
            }
            let neighbors: Vec<(usize, u32)> = if u < n {
                graph.var_neighbors(u).iter().map(|&(c, e)| (n + c as usize, e.0)).collect()
            } else {
                graph.check_neighbors(u - n).iter().map(|&(v, e)| (v as usize, e.0)).collect()
            };
            for (w, e) in neighbors {
                if e == parent_edge[u] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent_edge[w] = e;
                    queue.push_back(w);
                } else {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    match best {
        Some(g) => Girth::Cycle(g),
        None => Girth::Acyclic,
    }
}

pub fn code_profile(h: &SparseBitMatrix) -> CodeProfile {
    let n = h.cols_count();
    let m = h.rows_count();
    let rank = gf2_rank(h);
    let graph = TannerGraph::from_matrix(h);
    CodeProfile {
        n,
        m,
        rank,
        rate: (n - rank) as f64 / n as f64,
        girth: girth(&graph),
        column_weights: histogram(&h.col_weights()),
        row_weights: histogram(&h.row_weights()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_ones_2x2_has_girth_4() {
        let h = SparseBitMatrix::new(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        let p = code_profile(&h);
        assert_eq!(p.girth, Girth::Cycle(4));
        assert_eq!(p.rank, 1);
        assert_eq!(p.rate, 0.5);
    }

    #[test]
    fn identity_is_acyclic() {
        let p = code_profile(&SparseBitMatrix::identity(4));
        assert_eq!(p.girth, Girth::Acyclic);
        assert_eq!(p.rank, 4);
    }

    #[test]
    fn six_cycle() {
        // 3 vars, 3 checks in a ring
        let h =
            SparseBitMatrix::new(3, 3, [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0)]).unwrap();
        assert_eq!(code_profile(&h).girth, Girth::Cycle(6));
    }

    #[test]
    fn rate_identity_holds() {
        let h = SparseBitMatrix::new(2, 3, [(0, 0), (0, 1), (1, 1), (1, 2)]).unwrap();
        let p = code_profile(&h);
        assert_eq!((p.rate * p.n as f64).round() as usize + p.rank, p.n);
    }
}
