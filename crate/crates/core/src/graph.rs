//! Simple undirected graphs on dense 0-based vertex ids.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            m: 0,
            adj: vec![VertexSet::new(n); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range ids are errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.adj[u].contains(v) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.m += 1;
        }
        Ok(())
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_edges(n, &edges).expect("valid edges")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges).expect("valid edges")
    }

    /// C_n for n ≥ 3; smaller n degrade to a path.
    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Self::from_edges(n, &edges).expect("valid edges")
    }

    /// K_{1,leaves} with center 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_edges(leaves + 1, &edges).expect("valid edges")
    }

    /// K_{a,b} with sides 0..a and a..a+b.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges: Vec<_> = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        Self::from_edges(a + b, &edges).expect("valid edges")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges as (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|&v| v >= self.n) {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            None if s.universe() != self.n => Err(Error::InvalidParameter(format!(
                "vertex set of width {} used with a graph on {} vertices",
                s.universe(),
                self.n
            ))),
            None => Ok(()),
        }
    }

    pub fn set<I: IntoIterator<Item = usize>>(&self, it: I) -> Result<VertexSet> {
        let mut s = VertexSet::new(self.n);
        for v in it {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            s.insert(v);
        }
        Ok(s)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Biclique {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl Biclique {
    pub fn new(left: VertexSet, right: VertexSet) -> Self {
        Self { left, right }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        g.check_set(&self.left)?;
        g.check_set(&self.right)?;
        if self.left.is_empty() || self.right.is_empty() {
            return Err(Error::InvalidBiclique("empty side".into()));
        }
        if self.left.intersects(&self.right) {
            return Err(Error::InvalidBiclique("sides overlap".into()));
        }
        for u in &self.left {
            if !self.right.is_subset(g.neighbors(u)) {
                let v = self.right.difference(g.neighbors(u)).first().unwrap();
                return Err(Error::InvalidBiclique(format!("missing edge {u}-{v}")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BicliqueJson {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl From<&Biclique> for BicliqueJson {
    fn from(b: &Biclique) -> Self {
        Self {
            left: b.left.to_vec(),
            right: b.right.to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    pub order: Vec<usize>,
    /// position[v] = index of v in `order`.
    pub position: Vec<usize>,
    pub d: usize,
}

impl DegeneracyOrdering {
    pub fn forward_neighbors(&self, g: &Graph, v: usize) -> Vec<usize> {
        let p = self.position[v];
        g.neighbors(v).iter().filter(|&u| self.position[u] > p).collect()
    }
}

/// Min-degree peeling with a bucket queue; ties go to the smallest id.
pub fn degeneracy_ordering(g: &Graph) -> DegeneracyOrdering {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let maxd = deg.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); maxd + 1];
    for v in 0..n {
        buckets[deg[v]].insert(v);
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    let mut lo = 0;
    for _ in 0..n {
        while buckets[lo].is_empty() {
            lo += 1;
        }
        let v = buckets[lo].pop_first().unwrap();
        d = d.max(lo);
        removed[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !removed[u] {
                buckets[deg[u]].remove(&u);
                deg[u] -= 1;
                buckets[deg[u]].insert(u);
            }
        }
        lo = lo.saturating_sub(1);
    }
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    DegeneracyOrdering { order, position, d }
}

/// Returns g[s] together with the map from new ids to old ids (ascending).
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
    g.check_set(s)?;
    let map = s.to_vec();
    let mut inv = vec![usize::MAX; g.n()];
    for (i, &v) in map.iter().enumerate() {
        inv[v] = i;
    }
    let mut h = Graph::empty(map.len());
    for (i, &v) in map.iter().enumerate() {
        for u in g.neighbors(v).intersection(s).iter() {
            if inv[u] > i {
                h.add_edge(i, inv[u])?;
            }
        }
    }
    Ok((h, map))
}

/// G − F where F is the union of the bicliques' edge sets.
pub fn remove_edges(g: &Graph, bicliques: &[Biclique]) -> Result<Graph> {
    let mut h = g.clone();
    for b in bicliques {
        b.validate(g)?;
        for u in &b.left {
            for v in &b.right {
                if h.adj[u].contains(v) {
                    h.adj[u].remove(v);
                    h.adj[v].remove(u);
                    h.m -= 1;
                }
            }
        }
    }
    Ok(h)
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| !g.neighbors(v).intersects(s))
}

pub fn max_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0)
}
