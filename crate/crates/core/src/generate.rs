//! Canonically labelled graph families and seeded random corpora.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Attempts at a loop-free, multi-edge-free pairing before giving up.
const MAX_PAIRING_ATTEMPTS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `P_n`, labelled `0..n` along the path.
    Path { n: usize },
    /// `C_n`, labelled `0..n` around the cycle.
    Cycle { n: usize },
    /// `S_{1,n}`: centre 0 and leaves `1..=n`.
    Star { n: usize },
    Complete { n: usize },
    /// `W_{1,n}`: centre 0 joined to the rim cycle `1..=n`.
    Wheel { n: usize },
    /// `K_{n,m}` with the size-`n` part at `0..n`.
    CompleteBipartite { n: usize, m: usize },
    /// Uniform labelled tree from a Prüfer sequence.
    RandomTree { n: usize, seed: u64 },
    /// Configuration model with rejection of loops and parallel edges.
    RandomRegular { n: usize, r: usize, seed: u64 },
    /// `G(n, p)` with `p = num / den`.
    ErdosRenyi { n: usize, num: u64, den: u64, seed: u64 },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match *self {
            Path { n } => write!(f, "path({n})"),
            Cycle { n } => write!(f, "cycle({n})"),
            Star { n } => write!(f, "star({n})"),
            Complete { n } => write!(f, "complete({n})"),
            Wheel { n } => write!(f, "wheel({n})"),
            CompleteBipartite { n, m } => write!(f, "complete-bipartite({n},{m})"),
            RandomTree { n, seed } => write!(f, "random-tree({n};seed={seed})"),
            RandomRegular { n, r, seed } => write!(f, "random-regular({n},{r};seed={seed})"),
            ErdosRenyi { n, num, den, seed } => {
                write!(f, "erdos-renyi({n},{num}/{den};seed={seed})")
            }
        }
    }
}

fn invalid(spec: &FamilySpec, reason: impl Into<String>) -> Error {
    Error::InvalidFamilyParams {
        family: spec.to_string(),
        reason: reason.into(),
    }
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let bad = |reason: &str| Err(invalid(self, reason));
        match *self {
            Path { n } | Complete { n } | RandomTree { n, .. } if n < 1 => bad("n >= 1 required"),
            Star { n } if n < 1 => bad("at least one leaf required"),
            Cycle { n } if n < 3 => bad("n >= 3 required"),
            Wheel { n } if n < 3 => bad("at least 3 rim vertices required"),
            CompleteBipartite { n, m } if n < 1 || m < 1 => bad("both parts must be non-empty"),
            RandomRegular { n, r, .. } if r >= n => bad("degree must be below n"),
            RandomRegular { n, r, .. } if (n * r) % 2 == 1 => bad("n * r must be even"),
            ErdosRenyi { den: 0, .. } => bad("denominator must be positive"),
            ErdosRenyi { num, den, .. } if num > den => bad("probability above 1"),
            _ => Ok(()),
        }
    }
}

/// Builds the graph described by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    use FamilySpec::*;
    let g = match *spec {
        Path { n } => Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?,
        Cycle { n } => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?,
        Star { n } => Graph::from_edges(n + 1, (1..=n).map(|i| (0, i)))?,
        Complete { n } => {
            Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))?
        }
        Wheel { n } => {
            let spokes = (1..=n).map(|i| (0, i));
            let rim = (1..=n).map(|i| (i, i % n + 1));
            Graph::from_edges(n + 1, spokes.chain(rim))?
        }
        CompleteBipartite { n, m } => {
            Graph::from_edges(n + m, (0..n).flat_map(|a| (n..n + m).map(move |b| (a, b))))?
        }
        RandomTree { n, seed } => random_tree(n, seed)?,
        RandomRegular { n, r, seed } => random_regular(n, r, seed)?,
        ErdosRenyi { n, num, den, seed } => erdos_renyi(n, num, den, seed)?,
    };
    Ok(g)
}

fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n <= 2 {
        return Graph::from_edges(n, (1..n).map(|i| (0, i)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Graph::from_edges(n, prufer_edges(n, &prufer))
}

/// Decodes a Prüfer sequence of length `n - 2` into `n - 1` tree edges.
fn prufer_edges(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = leaves.pop_first().expect("prufer decoding always has a leaf");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let mut rest = leaves.into_iter();
    let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((a, b));
    edges
}

fn random_regular(n: usize, r: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    'attempt: for _ in 0..MAX_PAIRING_ATTEMPTS {
        stubs.shuffle(&mut rng);
        let mut seen = std::collections::HashSet::with_capacity(stubs.len() / 2);
        for pair in stubs.chunks_exact(2) {
            let (a, b) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if a == b || !seen.insert((a, b)) {
                continue 'attempt;
            }
        }
        return Graph::from_edges(n, seen);
    }
    Err(Error::GenerationFailed(MAX_PAIRING_ATTEMPTS))
}

fn erdos_renyi(n: usize, num: u64, den: u64, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_range(0..den) < num {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// `count` connected `G(n, num/den)` graphs, drawn from seeds
/// `base_seed, base_seed + 1, ...` and skipping disconnected draws.
pub fn connected_erdos_renyi_corpus(
    count: usize,
    n: usize,
    num: u64,
    den: u64,
    base_seed: u64,
) -> Result<Vec<(FamilySpec, Graph)>> {
    let mut out = Vec::with_capacity(count);
    let mut seed = base_seed;
    let limit = base_seed + (count as u64 + 1) * 1000;
    while out.len() < count {
        if seed >= limit {
            return Err(Error::GenerationFailed((seed - base_seed) as usize));
        }
        let spec = FamilySpec::ErdosRenyi { n, num, den, seed };
        let g = generate(&spec)?;
        if g.is_connected()? {
            out.push((spec, g));
        }
        seed += 1;
    }
    Ok(out)
}

/// `count` random trees with sizes cycling through `min_n..=max_n`.
pub fn random_tree_corpus(
    count: usize,
    min_n: usize,
    max_n: usize,
    base_seed: u64,
) -> Result<Vec<(FamilySpec, Graph)>> {
    let span = max_n - min_n + 1;
    (0..count)
        .map(|i| {
            let spec = FamilySpec::RandomTree {
                n: min_n + i % span,
                seed: base_seed + i as u64,
            };
            generate(&spec).map(|g| (spec, g))
        })
        .collect()
}

/// Every deterministic family graph whose `n + m` is at most `limit`.
pub fn family_corpus(limit: usize) -> Vec<(FamilySpec, Graph)> {
    let mut specs = Vec::new();
    for n in 1..=limit {
        specs.push(FamilySpec::Path { n });
        specs.push(FamilySpec::Cycle { n });
        specs.push(FamilySpec::Star { n });
        specs.push(FamilySpec::Complete { n });
        specs.push(FamilySpec::Wheel { n });
        for m in n..=limit {
            specs.push(FamilySpec::CompleteBipartite { n, m });
        }
    }
    specs
        .into_iter()
        .filter_map(|s| generate(&s).ok().map(|g| (s, g)))
        .filter(|(_, g)| g.n() + g.m() <= limit)
        .collect()
}
