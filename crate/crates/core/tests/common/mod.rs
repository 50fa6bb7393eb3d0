//! Test-only reference implementations, written without the library's
//! distance or closeness code.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use resiclose::Graph;

/// Dense boolean adjacency matrix.
pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Hop distances from successive boolean powers of `I + A`; `None` if
/// unreachable. Vertices in `removed` are treated as absent.
pub fn distances_masked(a: &[Vec<bool>], removed: Option<usize>) -> Vec<Vec<Option<u32>>> {
    let n = a.len();
    let alive = |v: usize| Some(v) != removed;
    let mut dist = vec![vec![None; n]; n];
    // reach[i][j]: j reachable from i in at most k steps
    let mut reach = vec![vec![false; n]; n];
    for i in (0..n).filter(|&i| alive(i)) {
        reach[i][i] = true;
        dist[i][i] = Some(0);
    }
    for k in 1..n as u32 {
        let mut next = reach.clone();
        for i in (0..n).filter(|&i| alive(i)) {
            for j in (0..n).filter(|&j| alive(j)) {
                if next[i][j] {
                    continue;
                }
                if (0..n).any(|l| alive(l) && reach[i][l] && a[l][j]) {
                    next[i][j] = true;
                    dist[i][j] = Some(k);
                }
            }
        }
        if next == reach {
            break;
        }
        reach = next;
    }
    dist
}

pub fn distances(g: &Graph) -> Vec<Vec<Option<u32>>> {
    distances_masked(&adjacency(g), None)
}

fn total_from(dist: &[Vec<Option<u32>>]) -> BigRational {
    let mut total = BigRational::zero();
    for (i, row) in dist.iter().enumerate() {
        for (j, d) in row.iter().enumerate() {
            if let (true, Some(d)) = (i != j, d) {
                total += BigRational::new(BigInt::one(), BigInt::one() << *d);
            }
        }
    }
    total
}

/// Exact total closeness.
pub fn closeness_exact(g: &Graph) -> BigRational {
    total_from(&distances(g))
}

pub fn closeness(g: &Graph) -> f64 {
    to_f64(&closeness_exact(g))
}

/// Exact closeness after each vertex is removed.
pub fn ck_exact(g: &Graph) -> Vec<BigRational> {
    let a = adjacency(g);
    (0..g.n())
        .map(|k| total_from(&distances_masked(&a, Some(k))))
        .collect()
}

/// Minimum of `ck_exact` and every index attaining it.
pub fn residual_exact(g: &Graph) -> (BigRational, Vec<usize>) {
    let ck = ck_exact(g);
    let min = ck.iter().min().expect("at least one vertex").clone();
    let argmin = (0..ck.len()).filter(|&k| ck[k] == min).collect();
    (min, argmin)
}

pub fn residual(g: &Graph) -> f64 {
    to_f64(&residual_exact(g).0)
}

pub fn to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap()
}

pub fn exact(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Middle graph straight from its definition: vertices `0..n` then one per
/// edge in lexicographic order.
pub fn middle_by_definition(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let edges = g.edges();
    let mut out = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        out.push((a, n + i));
        out.push((b, n + i));
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                out.push((n + i, n + j));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Line graph straight from its definition.
pub fn line_by_definition(g: &Graph) -> Vec<(usize, usize)> {
    middle_by_definition(g)
        .into_iter()
        .filter(|&(u, _)| u >= g.n())
        .map(|(u, v)| (u - g.n(), v - g.n()))
        .collect()
}
