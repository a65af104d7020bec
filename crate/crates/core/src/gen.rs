//! Seeded graph generators and the small-graph corpus.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::stream;
use rand::seq::index::sample;
use rand::Rng as _;
use std::collections::BTreeSet;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Model {
    Gnp { n: usize, p: f64 },
    Bipartite { a: usize, b: usize, p: f64 },
    Degenerate { n: usize, d: usize },
    Complete { n: usize },
    Cycle { n: usize },
    Star { n: usize },
    Path { n: usize },
    Empty { n: usize },
}

fn prob(p: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&p) {
        Ok(p)
    } else {
        Err(Error::InvalidParameter(format!("probability {p} outside [0, 1]")))
    }
}

impl Model {
    pub fn name(&self) -> &'static str {
        match self {
            Model::Gnp { .. } => "gnp",
            Model::Bipartite { .. } => "bipartite",
            Model::Degenerate { .. } => "degenerate",
            Model::Complete { .. } => "complete",
            Model::Cycle { .. } => "cycle",
            Model::Star { .. } => "star",
            Model::Path { .. } => "path",
            Model::Empty { .. } => "empty",
        }
    }

    /// Vertex count of the generated graph.
    pub fn n(&self) -> usize {
        match *self {
            Model::Gnp { n, .. } | Model::Degenerate { n, .. } => n,
            Model::Bipartite { a, b, .. } => a + b,
            Model::Complete { n } | Model::Cycle { n } | Model::Path { n } | Model::Empty { n } => n,
            Model::Star { n } => n + 1,
        }
    }

    pub fn generate(&self, seed: u64) -> Result<Graph> {
        let mut rng = stream(seed, "gen", 0);
        Ok(match *self {
            Model::Gnp { n, p } => {
                let p = prob(p)?;
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.random_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::from_edges(n, &edges)?
            }
            Model::Bipartite { a, b, p } => {
                let p = prob(p)?;
                let mut edges = Vec::new();
                for u in 0..a {
                    for v in a..a + b {
                        if rng.random_bool(p) {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::from_edges(a + b, &edges)?
            }
            Model::Degenerate { n, d } => {
                // Each vertex picks at most d earlier neighbors, so the reverse
                // insertion order witnesses degeneracy ≤ d.
                let mut edges = Vec::new();
                for v in 1..n {
                    let cnt = rng.random_range(0..=d.min(v));
                    for u in sample(&mut rng, v, cnt) {
                        edges.push((u, v));
                    }
                }
                Graph::from_edges(n, &edges)?
            }
            Model::Complete { n } => Graph::complete(n),
            Model::Cycle { n } => {
                if n < 3 {
                    return Err(Error::InvalidParameter("a cycle needs n >= 3".into()));
                }
                Graph::cycle(n)
            }
            Model::Star { n } => Graph::star(n),
            Model::Path { n } => Graph::path(n),
            Model::Empty { n } => Graph::empty(n),
        })
    }
}

/// Parses `name:arg,arg`, e.g. `gnp:10,0.3`, `degenerate:20,2`, `star:5`.
impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot parse model '{s}'"));
        let (name, args) = s.split_once(':').ok_or_else(bad)?;
        let args: Vec<&str> = args.split(',').map(str::trim).collect();
        let int = |i: usize| args.get(i).and_then(|a| a.parse::<usize>().ok()).ok_or_else(bad);
        let float = |i: usize| args.get(i).and_then(|a| a.parse::<f64>().ok()).ok_or_else(bad);
        let arity = |k: usize| if args.len() == k { Ok(()) } else { Err(bad()) };
        let m = match name {
            "gnp" => {
                arity(2)?;
                Model::Gnp { n: int(0)?, p: float(1)? }
            }
            "bipartite" => {
                arity(3)?;
                Model::Bipartite { a: int(0)?, b: int(1)?, p: float(2)? }
            }
            "degenerate" => {
                arity(2)?;
                Model::Degenerate { n: int(0)?, d: int(1)? }
            }
            _ => {
                arity(1)?;
                let n = int(0)?;
                match name {
                    "complete" => Model::Complete { n },
                    "cycle" => Model::Cycle { n },
                    "star" => Model::Star { n },
                    "path" => Model::Path { n },
                    "empty" => Model::Empty { n },
                    _ => return Err(bad()),
                }
            }
        };
        Ok(m)
    }
}

/// Random graph for corpus sweeps: G(n, p) with p drawn per graph.
pub fn random_graph(n: usize, seed: u64, index: u64) -> Graph {
    let mut rng = stream(seed, "corpus", index);
    let p = rng.random_range(0.1..0.9);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}

/// One representative per isomorphism class on n ≤ 6 vertices.
pub fn all_nonisomorphic(n: usize) -> Result<Vec<Graph>> {
    if n > 6 {
        return Err(Error::SizeGuard(format!("isomorphism enumeration needs n <= 6, got {n}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index = |u: usize, v: usize| pairs.iter().position(|&e| e == (u.min(v), u.max(v))).unwrap();
    let perms = permutations(n);
    // pmap[p][e] = image of edge e under permutation p.
    let pmap: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect())
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let canon = pmap
            .iter()
            .map(|pm| (0..pairs.len()).filter(|&e| mask >> e & 1 == 1).fold(0u32, |m, e| m | 1 << pm[e]))
            .min()
            .unwrap_or(0);
        if seen.insert(canon) {
            let edges: Vec<_> = (0..pairs.len()).filter(|&e| canon >> e & 1 == 1).map(|e| pairs[e]).collect();
            out.push(Graph::from_edges(n, &edges)?);
        }
    }
    Ok(out)
}

/// Every non-isomorphic graph on 1..=max_n vertices.
pub fn small_corpus(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(all_nonisomorphic(n)?);
    }
    Ok(out)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}
