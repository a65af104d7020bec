//! Structural degree reduction: either a partial Grundy certificate or a
//! small set of bicliques whose removal bounds every degree.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Biclique, BicliqueJson, Graph};
use crate::greedy::{first_fit, Coloring};
use crate::witness::{pgw_to_coloring, PartialGrundyWitness};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicliqueDecomposition {
    pub k: usize,
    pub bicliques: Vec<Biclique>,
}

#[derive(Serialize)]
struct DecompositionJson {
    k: usize,
    bicliques: Vec<BicliqueJson>,
}

impl BicliqueDecomposition {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&DecompositionJson {
            k: self.k,
            bicliques: self.bicliques.iter().map(BicliqueJson::from).collect(),
        })
        .expect("serializable")
    }
}

/// Internal state of a one-sided run that did not reach k classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneSidedBicliques {
    /// A_j = (B_j, N(x_j) \ P) for non-empty sides.
    pub a: Vec<Biclique>,
    /// S_j = ({x_j}, N(x_j)) for non-isolated x_j.
    pub s: Vec<Biclique>,
    pub q_classes: Vec<VertexSet>,
    pub x: Vec<usize>,
    pub b: Vec<VertexSet>,
}

impl OneSidedBicliques {
    pub fn all(&self) -> Vec<Biclique> {
        self.a.iter().chain(self.s.iter()).cloned().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OneSidedOutcome {
    Yes(PartialGrundyWitness),
    Bicliques(OneSidedBicliques),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoSidedOutcome {
    Yes(PartialGrundyWitness),
    Bicliques(BicliqueDecomposition),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionOutcome {
    Yes(Coloring),
    Bicliques(BicliqueDecomposition),
}

fn check_bipartition(g: &Graph, left: &VertexSet, right: &VertexSet) -> Result<()> {
    g.check_set(left)?;
    g.check_set(right)?;
    if left.intersects(right) {
        return Err(Error::InvalidBipartition("sides overlap".into()));
    }
    for (u, v) in g.edges() {
        let across = (left.contains(u) && right.contains(v)) || (left.contains(v) && right.contains(u));
        if !across {
            return Err(Error::InvalidBipartition(format!("edge {u}-{v} does not cross the sides")));
        }
    }
    Ok(())
}

/// Scans `left` by decreasing degree, growing a partial Grundy chain. Stops
/// with a witness once the chain reaches k, otherwise returns the bicliques
/// that cover the remaining high-degree edges.
pub fn one_sided_reduce(g: &Graph, left: &VertexSet, right: &VertexSet, k: usize) -> Result<OneSidedOutcome> {
    check_bipartition(g, left, right)?;
    let n = g.n();
    let mut sigma = left.to_vec();
    sigma.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let mut x: Vec<usize> = Vec::new();
    let mut qs: Vec<VertexSet> = Vec::new();
    let mut bs: Vec<VertexSet> = Vec::new();
    let mut p = VertexSet::new(n);
    let mut covered = VertexSet::new(n);
    if let Some(&v1) = sigma.first() {
        x.push(v1);
        qs.push(VertexSet::singleton(n, v1));
        bs.push(VertexSet::new(n));
        p.insert(v1);
        covered.insert(v1);
    }
    for &vr in &sigma {
        if covered.contains(vr) {
            continue;
        }
        let reach = p.union(g.neighbors(vr));
        match (0..x.len()).find(|&j| g.neighbors(x[j]).is_subset(&reach)) {
            Some(j) => bs[j].insert(vr),
            None => {
                let mut q = VertexSet::singleton(n, vr);
                for &xj in &x {
                    let w = g.neighbors(xj).difference(&reach).first().expect("not a subset");
                    q.insert(w);
                }
                x.push(vr);
                p.union_with(&q);
                qs.push(q);
                bs.push(VertexSet::new(n));
            }
        }
        covered.insert(vr);
    }

    if x.len() >= k {
        let classes = qs.into_iter().rev().collect();
        return Ok(OneSidedOutcome::Yes(PartialGrundyWitness::new(classes)));
    }
    let mut a = Vec::new();
    let mut s = Vec::new();
    for (j, &xj) in x.iter().enumerate() {
        let r = g.neighbors(xj).difference(&p);
        if !bs[j].is_empty() && !r.is_empty() {
            a.push(Biclique::new(bs[j].clone(), r));
        }
    }
    for &xj in &x {
        if g.degree(xj) > 0 {
            s.push(Biclique::new(VertexSet::singleton(n, xj), g.neighbors(xj).clone()));
        }
    }
    Ok(OneSidedOutcome::Bicliques(OneSidedBicliques {
        a,
        s,
        q_classes: qs,
        x,
        b: bs,
    }))
}

/// One-sided reduction from the left side and then, if needed, from the right.
pub fn two_sided_reduce(g: &Graph, left: &VertexSet, right: &VertexSet, k: usize) -> Result<TwoSidedOutcome> {
    let first = match one_sided_reduce(g, left, right, k)? {
        OneSidedOutcome::Yes(w) => return Ok(TwoSidedOutcome::Yes(w)),
        OneSidedOutcome::Bicliques(b) => b,
    };
    let second = match one_sided_reduce(g, right, left, k)? {
        OneSidedOutcome::Yes(w) => return Ok(TwoSidedOutcome::Yes(w)),
        OneSidedOutcome::Bicliques(b) => b,
    };
    let mut bicliques = first.all();
    bicliques.extend(second.all());
    Ok(TwoSidedOutcome::Bicliques(BicliqueDecomposition { k, bicliques }))
}

/// First-fit in id order; if it uses fewer than k colors, reduce every pair
/// of its color classes with the two-sided bipartite procedure.
pub fn degree_reduce(g: &Graph, k: usize) -> Result<ReductionOutcome> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let order: Vec<usize> = (0..g.n()).collect();
    let c = first_fit(g, &order);
    if c.num_colors() >= k {
        return Ok(ReductionOutcome::Yes(c));
    }
    let classes = c.classes();
    let mut bicliques = Vec::new();
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            let h = between(g, &classes[i], &classes[j]);
            match two_sided_reduce(&h, &classes[i], &classes[j], k)? {
                TwoSidedOutcome::Yes(w) => return Ok(ReductionOutcome::Yes(pgw_to_coloring(g, &w)?)),
                TwoSidedOutcome::Bicliques(d) => bicliques.extend(d.bicliques),
            }
        }
    }
    Ok(ReductionOutcome::Bicliques(BicliqueDecomposition { k, bicliques }))
}

/// The graph on V(g) keeping only edges between `a` and `b`.
fn between(g: &Graph, a: &VertexSet, b: &VertexSet) -> Graph {
    let edges: Vec<(usize, usize)> = a
        .iter()
        .flat_map(|u| g.neighbors(u).intersection(b).iter().map(move |v| (u, v)).collect::<Vec<_>>())
        .collect();
    Graph::from_edges(g.n(), &edges).expect("edges of g")
}
