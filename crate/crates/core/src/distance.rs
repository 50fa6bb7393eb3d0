//! All-pairs hop counts, by per-source BFS and by Floyd–Warshall.
//!
//! `None` marks an unreachable pair. The two methods share no code beyond the
//! graph accessors and are expected to agree entrywise on every graph.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hop count; `None` when no path exists.
pub type Hops = Option<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Hops>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Hops {
        self.d[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Hops] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    /// Largest finite entry; 0 for graphs without edges.
    pub fn max_finite(&self) -> u32 {
        self.d.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn is_fully_reachable(&self) -> bool {
        self.d.iter().all(Option::is_some)
    }

    /// Largest distance from `v`, or `None` if some vertex is unreachable.
    pub fn eccentricity(&self, v: usize) -> Option<u32> {
        self.row(v)
            .iter()
            .try_fold(0, |acc, h| h.map(|x| acc.max(x)))
    }

    pub fn eccentricities(&self) -> Option<Vec<u32>> {
        (0..self.n).map(|v| self.eccentricity(v)).collect()
    }

    /// `None` on empty or disconnected graphs.
    pub fn diameter(&self) -> Option<u32> {
        self.eccentricities()?.into_iter().max()
    }

    /// `None` on empty or disconnected graphs.
    pub fn radius(&self) -> Option<u32> {
        self.eccentricities()?.into_iter().min()
    }

    /// Checks zero diagonal, symmetry, the triangle inequality, and that
    /// distance 1 coincides with adjacency in `g`.
    pub fn check_invariants(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = self.n;
        if g.n() != n {
            return Err(format!("matrix is {n}x{n}, graph has {} vertices", g.n()));
        }
        for i in 0..n {
            if self.get(i, i) != Some(0) {
                return Err(format!("d[{i}][{i}] = {:?}", self.get(i, i)));
            }
            for j in 0..n {
                let dij = self.get(i, j);
                if dij != self.get(j, i) {
                    return Err(format!("asymmetric at ({i},{j})"));
                }
                if (dij == Some(1)) != g.has_edge(i, j) {
                    return Err(format!("d[{i}][{j}] = {dij:?} disagrees with adjacency"));
                }
                for k in 0..n {
                    if let (Some(a), Some(b), Some(c)) = (dij, self.get(j, k), self.get(i, k)) {
                        if c > a + b {
                            return Err(format!("triangle inequality fails at ({i},{j},{k})"));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Hop distances from `s`.
pub fn bfs_from(g: &Graph, s: usize) -> Result<Vec<Hops>> {
    let n = g.n();
    if s >= n {
        return Err(Error::IndexOutOfRange { index: s, n });
    }
    Ok(bfs_row(g, s))
}

fn bfs_row(g: &Graph, s: usize) -> Vec<Hops> {
    let mut dist: Vec<Hops> = vec![None; g.n()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        let next = dist[v].map(|d| d + 1);
        for &u in g.neighbors(v) {
            if dist[u].is_none() {
                dist[u] = next;
                queue.push_back(u);
            }
        }
    }
    dist
}

/// One BFS per source; rows are computed in parallel.
pub fn all_pairs_bfs(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let rows: Vec<Vec<Hops>> = (0..n).into_par_iter().map(|s| bfs_row(g, s)).collect();
    DistanceMatrix {
        n,
        d: rows.into_iter().flatten().collect(),
    }
}

/// Sequential BFS, for callers already running inside a parallel loop.
pub fn all_pairs_bfs_seq(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    DistanceMatrix {
        n,
        d: (0..n).flat_map(|s| bfs_row(g, s)).collect(),
    }
}

/// Floyd–Warshall relaxation over unit edge weights.
pub fn floyd_warshall(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d: Vec<Hops> = vec![None; n * n];
    for i in 0..n {
        d[i * n + i] = Some(0);
        for &j in g.neighbors(i) {
            d[i * n + j] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            let Some(dik) = d[i * n + k] else { continue };
            for j in 0..n {
                if let Some(dkj) = d[k * n + j] {
                    let via = dik + dkj;
                    let cell = &mut d[i * n + j];
                    if cell.is_none_or(|cur| via < cur) {
                        *cell = Some(via);
                    }
                }
            }
        }
    }
    DistanceMatrix { n, d }
}
