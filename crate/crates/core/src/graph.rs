//! Bipartite Tanner-graph view of a parity-check matrix with stable per-edge
//! identities.

use crate::matrix::SparseBitMatrix;

/// Identity of an edge: its position in row-major entry order of the source
/// matrix. Stable across rebuilds of the same matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

/// Bipartite adjacency of checks (rows) and variables (columns).
#[derive(Debug, Clone)]
pub struct TannerGraph {
    n: usize,
    m: usize,
    /// (check, variable) per edge, in row-major order of the matrix.
    edges: Vec<(u32, u32)>,
    /// Per check: (variable, edge) pairs, ascending by variable.
    check_adj: Vec<Vec<(u32, EdgeId)>>,
    /// Per variable: (check, edge) pairs, ascending by check.
    var_adj: Vec<Vec<(u32, EdgeId)>>,
}

impl TannerGraph {
    pub fn from_matrix(h: &SparseBitMatrix) -> Self {
        let m = h.rows_count();
        let n = h.cols_count();
        let mut edges = Vec::with_capacity(h.entry_count());
        let mut check_adj = vec![Vec::new(); m];
        let mut var_adj = vec![Vec::new(); n];
        for (r, c) in h.entries() {
            let id = EdgeId(edges.len() as u32);
            edges.push((r as u32, c as u32));
            check_adj[r].push((c as u32, id));
            var_adj[c].push((r as u32, id));
        }
        Self { n, m, edges, check_adj, var_adj }
    }

    pub fn var_count(&self) -> usize {
        self.n
    }

    pub fn check_count(&self) -> usize {
        self.m
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, id: EdgeId) -> (usize, usize) {
        let (r, c) = self.edges[id.0 as usize];
        (r as usize, c as usize)
    }

    /// Edge id for a (check, variable) pair, if the edge exists.
    pub fn find_edge(&self, check: usize, var: usize) -> Option<EdgeId> {
        self.check_adj[check]
            .binary_search_by_key(&(var as u32), |&(v, _)| v)
            .ok()
            .map(|i| self.check_adj[check][i].1)
    }

    pub fn check_neighbors(&self, check: usize) -> &[(u32, EdgeId)] {
        &self.check_adj[check]
    }

    pub fn var_neighbors(&self, var: usize) -> &[(u32, EdgeId)] {
        &self.var_adj[var]
    }

    pub fn var_degree(&self, var: usize) -> usize {
        self.var_adj[var].len()
    }

    pub fn check_degree(&self, check: usize) -> usize {
        self.check_adj[check].len()
    }

    /// All edges of the induced subgraph on a set of variables.
    pub fn edges_of_vars(&self, vars: &[usize]) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = vars
            .iter()
            .flat_map(|&v| self.var_adj[v].iter().map(|&(_, e)| e))
            .collect();
        out.sort_unstable();
        out
    }

    /// Variables within graph distance `2 * radius` of the given variables
    /// (variable-to-variable hops through shared checks), including the seeds.
    pub fn variable_ball(&self, seeds: &[usize], radius: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut frontier: Vec<usize> = Vec::new();
        for &v in seeds {
            if !seen[v] {
                seen[v] = true;
                frontier.push(v);
            }
        }
        for _ in 0..radius {
            let mut next = Vec::new();
            for &v in &frontier {
                for &(c, _) in &self.var_adj[v] {
                    for &(w, _) in &self.check_adj[c as usize] {
                        let w = w as usize;
                        if !seen[w] {
                            seen[w] = true;
                            next.push(w);
                        }
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<usize> = seen
            .iter()
            .enumerate()
            .filter_map(|(v, &s)| s.then_some(v))
            .collect();
        out.sort_unstable();
        out
    }
}
