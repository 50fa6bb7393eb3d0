//! Simple undirected graphs with sorted adjacency lists.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Provenance of a vertex produced by a graph transformation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VertexKind {
    /// A vertex carried over from the base graph.
    Original { index: usize },
    /// A vertex standing for the base-graph edge `a-b`, `a < b`.
    EdgeVertex { a: usize, b: usize },
}

impl VertexKind {
    pub fn is_edge_vertex(&self) -> bool {
        matches!(self, VertexKind::EdgeVertex { .. })
    }
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexKind::Original { index } => write!(f, "v{index}"),
            VertexKind::EdgeVertex { a, b } => write!(f, "e{a}-{b}"),
        }
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted and symmetric; there are no loops or
/// parallel edges. All mutation-like operations return a new graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    kinds: Option<Vec<VertexKind>>,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            kinds: None,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::IndexOutOfRange { index: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (v.min(w[0]), v.max(w[0]));
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(Graph { adj, kinds: None })
    }

    /// Builds from adjacency lists already known to be simple and symmetric.
    /// Lists are sorted here; the remaining invariants are checked in debug builds.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>, kinds: Option<Vec<VertexKind>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Graph { adj, kinds };
        debug_assert!(g.validate().is_ok(), "{:?}", g.validate());
        g
    }

    pub fn with_kinds(mut self, kinds: Vec<VertexKind>) -> Self {
        assert_eq!(kinds.len(), self.n(), "one kind tag per vertex");
        self.kinds = Some(kinds);
        self
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for (a, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&b| b > a).map(|&b| (a, b)));
        }
        out
    }

    pub fn kinds(&self) -> Option<&[VertexKind]> {
        self.kinds.as_deref()
    }

    pub fn kind(&self, v: usize) -> Option<VertexKind> {
        self.kinds.as_ref().map(|k| k[v])
    }

    /// Indices tagged as [`VertexKind::EdgeVertex`]; empty for untagged graphs.
    pub fn edge_vertex_indices(&self) -> Vec<usize> {
        match &self.kinds {
            Some(k) => (0..self.n()).filter(|&v| k[v].is_edge_vertex()).collect(),
            None => Vec::new(),
        }
    }

    /// Checks every structural invariant.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        for (v, list) in self.adj.iter().enumerate() {
            for w in list.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::DuplicateEdge(v.min(w[0]), v.max(w[0])));
                }
                if w[0] > w[1] {
                    return Err(Error::Parse {
                        line: 0,
                        reason: format!("adjacency of {v} not sorted"),
                    });
                }
            }
            for &u in list {
                if u >= n {
                    return Err(Error::IndexOutOfRange { index: u, n });
                }
                if u == v {
                    return Err(Error::SelfLoop(v));
                }
                if self.adj[u].binary_search(&v).is_err() {
                    return Err(Error::Parse {
                        line: 0,
                        reason: format!("edge {v}-{u} not symmetric"),
                    });
                }
            }
        }
        if let Some(k) = &self.kinds {
            if k.len() != n {
                return Err(Error::Parse {
                    line: 0,
                    reason: format!("{} kind tags for {n} vertices", k.len()),
                });
            }
        }
        Ok(())
    }

    /// True iff a traversal from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> Result<bool> {
        let n = self.n();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        Ok(count == n)
    }

    pub fn is_regular(&self, r: usize) -> bool {
        self.adj.iter().all(|l| l.len() == r)
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m() + 1 == self.n() && self.is_connected().unwrap_or(false)
    }

    /// Copy with the extra edge `a-b`.
    pub fn with_edge(&self, a: usize, b: usize) -> Result<Self> {
        let mut edges = self.edges();
        edges.push((a, b));
        let mut g = Graph::from_edges(self.n(), edges)?;
        g.kinds = self.kinds.clone();
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&u| u + shift).collect::<Vec<_>>()),
        );
        Graph::from_adjacency(adj, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(2, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::IndexOutOfRange { index: 2, n: 2 })
        );
    }

    #[test]
    fn edges_sorted_and_counted() {
        let g = Graph::from_edges(4, [(2, 3), (1, 0), (0, 2)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.m(), 3);
        assert_eq!(g.neighbors(0), &[1, 2]);
        assert!(g.validate().is_ok());
    }

    #[test]
    fn connectivity() {
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.is_connected(), Ok(false));
        assert_eq!(Graph::empty(1).is_connected(), Ok(true));
        assert_eq!(Graph::empty(0).is_connected(), Err(Error::EmptyGraph));
    }

    #[test]
    fn union_and_edge_addition() {
        let e = Graph::from_edges(2, [(0, 1)]).unwrap();
        let u = e.disjoint_union(&e);
        assert_eq!(u.edges(), vec![(0, 1), (2, 3)]);
        let joined = u.with_edge(1, 2).unwrap();
        assert!(joined.is_tree());
        assert!(u.with_edge(0, 1).is_err());
    }
}
