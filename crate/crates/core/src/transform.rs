//! Middle graph, line graph, vertex and edge deletion.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexKind};

/// Middle graph `M(G)`.
///
/// Vertices `0..n` are the original vertices, `n..n+m` the edges of `g` in
/// lexicographic order. An edge-vertex is adjacent to both endpoints and to
/// every edge-vertex sharing an endpoint; original vertices stay independent.
pub fn middle_graph(g: &Graph) -> Graph {
    let n = g.n();
    let edges = g.edges();
    let mut adj = vec![Vec::new(); n + edges.len()];
    for (i, &(a, b)) in edges.iter().enumerate() {
        let ev = n + i;
        adj[ev].extend([a, b]);
        adj[a].push(ev);
        adj[b].push(ev);
    }
    for (i, j) in line_adjacency(g, &edges) {
        adj[n + i].push(n + j);
        adj[n + j].push(n + i);
    }
    let kinds = (0..n)
        .map(|index| VertexKind::Original { index })
        .chain(edges.iter().map(|&(a, b)| VertexKind::EdgeVertex { a, b }))
        .collect();
    Graph::from_adjacency(adj, Some(kinds))
}

/// Line graph `L(G)`: one vertex per edge of `g` in lexicographic order,
/// adjacent iff the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let mut adj = vec![Vec::new(); edges.len()];
    for (i, j) in line_adjacency(g, &edges) {
        adj[i].push(j);
        adj[j].push(i);
    }
    let kinds = edges
        .iter()
        .map(|&(a, b)| VertexKind::EdgeVertex { a, b })
        .collect();
    Graph::from_adjacency(adj, Some(kinds))
}

/// Pairs `(i, j)`, `i < j`, of edge positions sharing an endpoint.
fn line_adjacency(g: &Graph, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, &(a, b)) in edges.iter().enumerate() {
        incident[a].push(i);
        incident[b].push(i);
    }
    // Two distinct simple edges share at most one endpoint, so each pair
    // appears exactly once across the incidence lists.
    let mut pairs = Vec::new();
    for list in &incident {
        for (x, &i) in list.iter().enumerate() {
            for &j in &list[x + 1..] {
                pairs.push((i.min(j), i.max(j)));
            }
        }
    }
    pairs
}

/// `g` without vertex `k`; higher indices shift down by one.
pub fn remove_vertex(g: &Graph, k: usize) -> Result<Graph> {
    let n = g.n();
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, n });
    }
    let shift = |v: usize| if v > k { v - 1 } else { v };
    let adj = (0..n)
        .filter(|&v| v != k)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&&u| u != k)
                .map(|&u| shift(u))
                .collect()
        })
        .collect();
    let kinds = g.kinds().map(|ks| {
        ks.iter()
            .enumerate()
            .filter(|&(v, _)| v != k)
            .map(|(_, &t)| t)
            .collect()
    });
    Ok(Graph::from_adjacency(adj, kinds))
}

/// `g` with every edge at `k` deleted but the vertex kept (isolated).
pub fn isolate_vertex(g: &Graph, k: usize) -> Result<Graph> {
    let n = g.n();
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, n });
    }
    let adj = (0..n)
        .map(|v| {
            if v == k {
                Vec::new()
            } else {
                g.neighbors(v).iter().copied().filter(|&u| u != k).collect()
            }
        })
        .collect();
    Ok(Graph::from_adjacency(adj, g.kinds().map(<[_]>::to_vec)))
}

/// `g` without the edge `a-b`.
pub fn remove_edge(g: &Graph, a: usize, b: usize) -> Result<Graph> {
    let n = g.n();
    for v in [a, b] {
        if v >= n {
            return Err(Error::IndexOutOfRange { index: v, n });
        }
    }
    if !g.has_edge(a, b) {
        return Err(Error::NoSuchEdge(a, b));
    }
    let adj = (0..n)
        .map(|v| {
            let drop = if v == a {
                Some(b)
            } else if v == b {
                Some(a)
            } else {
                None
            };
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&u| Some(u) != drop)
                .collect()
        })
        .collect();
    Ok(Graph::from_adjacency(adj, g.kinds().map(<[_]>::to_vec)))
}
