//! Dangalchev closeness `C(v) = Σ_{u≠v} 2^-d(u,v)`, graph closeness, and
//! vertex residual closeness `R = min_k C_k`.
//!
//! Unreachable pairs contribute nothing, so every quantity is defined on
//! disconnected graphs. Sums run in ascending `j` within ascending `i`.

use rayon::prelude::*;
use serde::Serialize;

use crate::distance::{all_pairs_bfs, all_pairs_bfs_seq, floyd_warshall, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::{half_powers, ordered_sum, Scalar};
use crate::transform::{isolate_vertex, remove_vertex};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosenessProfile<T> {
    pub per_vertex: Vec<T>,
    /// Sum over ordered pairs; equals the sum of `per_vertex`.
    pub total: T,
}

/// How vertex `k` is taken out before recomputing closeness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RemovalMode {
    /// Delete the vertex and reindex; distances by BFS.
    #[default]
    Delete,
    /// Zero row and column `k` of the adjacency, leaving `k` isolated;
    /// distances by Floyd–Warshall.
    Isolate,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RemovalProfile<T> {
    /// `ck[k]` is the graph closeness after removing vertex `k`.
    pub ck: Vec<T>,
    pub r_value: T,
    /// Every `k` with `ck[k] == r_value`, ascending.
    pub argmin: Vec<usize>,
}

pub fn closeness_from_distances<T: Scalar>(d: &DistanceMatrix) -> ClosenessProfile<T> {
    let n = d.n();
    let weights: Vec<T> = half_powers(d.max_finite());
    let per_vertex: Vec<T> = (0..n)
        .map(|i| {
            d.row(i)
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .filter_map(|(_, h)| h.map(|h| weights[h as usize].clone()))
                .fold(T::zero(), |acc, w| acc + w)
        })
        .collect();
    let total = ordered_sum(&per_vertex);
    ClosenessProfile { per_vertex, total }
}

pub fn closeness_profile<T: Scalar>(g: &Graph) -> ClosenessProfile<T> {
    closeness_from_distances(&all_pairs_bfs(g))
}

/// Graph closeness `C(G)`; zero for fewer than two vertices.
pub fn total_closeness<T: Scalar>(g: &Graph) -> T {
    closeness_profile(g).total
}

fn check_index(g: &Graph, k: usize) -> Result<()> {
    if k >= g.n() {
        return Err(Error::IndexOutOfRange { index: k, n: g.n() });
    }
    Ok(())
}

fn removal_total<T: Scalar>(g: &Graph, k: usize, mode: RemovalMode) -> Result<T> {
    let d = match mode {
        RemovalMode::Delete => all_pairs_bfs_seq(&remove_vertex(g, k)?),
        RemovalMode::Isolate => floyd_warshall(&isolate_vertex(g, k)?),
    };
    Ok(closeness_from_distances::<T>(&d).total)
}

/// `C_k` computed by deleting vertex `k`.
pub fn closeness_after_removal<T: Scalar>(g: &Graph, k: usize) -> Result<T> {
    closeness_after_removal_with(g, k, RemovalMode::Delete)
}

pub fn closeness_after_removal_with<T: Scalar>(g: &Graph, k: usize, mode: RemovalMode) -> Result<T> {
    check_index(g, k)?;
    removal_total(g, k, mode)
}

/// Full removal sweep; each `C_k` recomputes all-pairs distances.
pub fn residual_closeness<T: Scalar>(g: &Graph) -> Result<RemovalProfile<T>> {
    residual_closeness_with(g, RemovalMode::Delete)
}

pub fn residual_closeness_with<T: Scalar>(g: &Graph, mode: RemovalMode) -> Result<RemovalProfile<T>> {
    let n = g.n();
    if n < 2 {
        return Err(Error::GraphTooSmall(n));
    }
    let ck = (0..n)
        .into_par_iter()
        .map(|k| removal_total::<T>(g, k, mode))
        .collect::<Result<Vec<T>>>()?;
    Ok(RemovalProfile::from_ck(ck))
}

impl<T: Scalar> RemovalProfile<T> {
    /// Builds the minimum and argmin set; `ck` must be non-empty.
    pub fn from_ck(ck: Vec<T>) -> Self {
        let r_value = ck
            .iter()
            .skip(1)
            .fold(ck[0].clone(), |m, c| if *c < m { c.clone() } else { m });
        let argmin = (0..ck.len()).filter(|&k| ck[k] == r_value).collect();
        RemovalProfile { ck, r_value, argmin }
    }
}
