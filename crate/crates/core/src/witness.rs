//! Certificates: partial Grundy witnesses, Grundy trees and Grundy witnesses.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{is_independent, Graph};
use crate::greedy::{dominators, extend_partial, is_grundy_coloring, is_partial_grundy_coloring, Coloring};
use serde::{Deserialize, Serialize};

/// Pairwise disjoint independent classes (Q_1, .., Q_k), each with a dominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialGrundyWitness {
    pub classes: Vec<VertexSet>,
}

impl PartialGrundyWitness {
    pub fn new(classes: Vec<VertexSet>) -> Self {
        Self { classes }
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn to_json(&self) -> Certificate {
        Certificate::Pgw {
            k: self.k(),
            classes: self.classes.iter().map(VertexSet::to_vec).collect(),
        }
    }
}

/// Serialized form of either certificate kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Certificate {
    Pgw {
        k: usize,
        classes: Vec<Vec<usize>>,
    },
    Gw {
        k: usize,
        tree_labels: Vec<usize>,
        omega: Vec<usize>,
    },
}

impl Certificate {
    /// Re-checks the certificate against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Certificate::Pgw { k, classes } => {
                if classes.len() != *k {
                    return false;
                }
                let mut sets = Vec::new();
                for c in classes {
                    match g.set(c.iter().copied()) {
                        Ok(s) if s.len() == c.len() => sets.push(s),
                        _ => return false,
                    }
                }
                verify_pgw(g, &PartialGrundyWitness::new(sets)).is_some()
            }
            Certificate::Gw { k, tree_labels, omega } => {
                if *k == 0 || *k > 24 {
                    return false;
                }
                let tree = build_grundy_tree(*k).expect("k >= 1");
                if tree.labels() != tree_labels.as_slice() || omega.len() != tree.len() {
                    return false;
                }
                verify_gw(
                    g,
                    &GrundyWitness {
                        tree,
                        omega: omega.clone(),
                    },
                )
            }
        }
    }
}

/// Checks the witness and returns the smallest-id dominator of each class.
pub fn verify_pgw(g: &Graph, w: &PartialGrundyWitness) -> Option<Vec<usize>> {
    let mut seen = VertexSet::new(g.n());
    for q in &w.classes {
        if g.check_set(q).is_err() || q.is_empty() || q.intersects(&seen) {
            return None;
        }
        if !is_independent(g, q) {
            return None;
        }
        seen.union_with(q);
    }
    let mut doms = Vec::with_capacity(w.k());
    for (i, q) in w.classes.iter().enumerate() {
        let d = q
            .iter()
            .find(|&v| w.classes[..i].iter().all(|qj| g.neighbors(v).intersects(qj)))?;
        doms.push(d);
    }
    Some(doms)
}

/// Marks one dominator per class plus one neighbor of it in every lower
/// class, and keeps only marked vertices.
pub fn shrink_pgw(g: &Graph, w: &PartialGrundyWitness) -> Result<PartialGrundyWitness> {
    let doms = verify_pgw(g, w).ok_or_else(|| Error::InvalidWitness("not a partial Grundy witness".into()))?;
    let mut marked = VertexSet::new(g.n());
    for (i, &u) in doms.iter().enumerate() {
        marked.insert(u);
        for qj in &w.classes[..i] {
            marked.insert(g.neighbors(u).intersection(qj).first().expect("dominator"));
        }
    }
    Ok(PartialGrundyWitness::new(
        w.classes.iter().map(|q| q.intersection(&marked)).collect(),
    ))
}

/// Colors Q_i with i and extends greedily to all of V(g).
pub fn pgw_to_coloring(g: &Graph, w: &PartialGrundyWitness) -> Result<Coloring> {
    verify_pgw(g, w).ok_or_else(|| Error::InvalidWitness("not a partial Grundy witness".into()))?;
    let mut partial = vec![0; g.n()];
    for (i, q) in w.classes.iter().enumerate() {
        for v in q {
            partial[v] = i + 1;
        }
    }
    extend_partial(g, &partial)
}

/// The first k classes of a partial Grundy coloring.
pub fn coloring_to_pgw(g: &Graph, c: &Coloring, k: usize) -> Result<PartialGrundyWitness> {
    if !is_partial_grundy_coloring(g, c) || c.num_colors() < k {
        return Err(Error::InvalidWitness(format!(
            "not a partial Grundy coloring with at least {k} colors"
        )));
    }
    Ok(PartialGrundyWitness::new(c.classes().into_iter().take(k).collect()))
}

/// The labeled tree T_k, nodes in preorder with children by decreasing label.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GrundyTree {
    k: usize,
    label: Vec<usize>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

/// γ_{k,z}: number of nodes labeled z in T_k.
pub fn gamma(k: usize, z: usize) -> usize {
    assert!(1 <= z && z <= k);
    if z == k {
        1
    } else {
        1 << (k - z - 1)
    }
}

pub fn build_grundy_tree(k: usize) -> Result<GrundyTree> {
    if k == 0 {
        return Err(Error::InvalidParameter("Grundy tree needs k >= 1".into()));
    }
    let mut t = GrundyTree {
        k,
        label: Vec::new(),
        parent: Vec::new(),
        children: Vec::new(),
    };
    fn grow(t: &mut GrundyTree, z: usize, parent: Option<usize>) {
        let id = t.label.len();
        t.label.push(z);
        t.parent.push(parent);
        t.children.push(Vec::new());
        if let Some(p) = parent {
            t.children[p].push(id);
        }
        for c in (1..z).rev() {
            grow(t, c, Some(id));
        }
    }
    grow(&mut t, k, None);
    Ok(t)
}

impl GrundyTree {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.label.len()
    }

    pub fn is_empty(&self) -> bool {
        self.label.is_empty()
    }

    pub fn label(&self, t: usize) -> usize {
        self.label[t]
    }

    pub fn labels(&self) -> &[usize] {
        &self.label
    }

    pub fn parent(&self, t: usize) -> Option<usize> {
        self.parent[t]
    }

    pub fn children(&self, t: usize) -> &[usize] {
        &self.children[t]
    }

    /// Number of nodes per label; index z-1 holds label z.
    pub fn label_counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.k];
        for &z in &self.label {
            c[z - 1] += 1;
        }
        c
    }

    /// Path-of-labels name, e.g. `r_{4,3,1}`.
    pub fn node_name(&self, t: usize) -> String {
        let mut path = vec![self.label[t]];
        let mut cur = t;
        while let Some(p) = self.parent[cur] {
            path.push(self.label[p]);
            cur = p;
        }
        path.reverse();
        let parts: Vec<String> = path.iter().map(usize::to_string).collect();
        format!("r_{{{}}}", parts.join(","))
    }
}

/// A map ω from the nodes of T_k into V(G).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GrundyWitness {
    pub tree: GrundyTree,
    pub omega: Vec<usize>,
}

impl GrundyWitness {
    pub fn k(&self) -> usize {
        self.tree.k()
    }

    pub fn to_json(&self) -> Certificate {
        Certificate::Gw {
            k: self.k(),
            tree_labels: self.tree.labels().to_vec(),
            omega: self.omega.clone(),
        }
    }

    /// ω restricted to the subtree rooted at `t`, as a witness on T_{ℓ(t)}.
    /// In preorder that subtree is the contiguous block starting at `t`.
    pub fn restrict(&self, t: usize) -> GrundyWitness {
        let z = self.tree.label(t);
        let tree = build_grundy_tree(z).expect("labels are positive");
        let omega = self.omega[t..t + tree.len()].to_vec();
        GrundyWitness { tree, omega }
    }

    /// The image of ω.
    pub fn image(&self, n: usize) -> VertexSet {
        VertexSet::from_iter(n, self.omega.iter().copied())
    }
}

pub fn verify_gw(g: &Graph, w: &GrundyWitness) -> bool {
    let t = &w.tree;
    if w.omega.len() != t.len() || w.omega.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut vlabel = vec![0usize; g.n()];
    let mut img = vec![VertexSet::new(g.n()); t.k() + 1];
    for (node, &v) in w.omega.iter().enumerate() {
        let z = t.label(node);
        if vlabel[v] != 0 && vlabel[v] != z {
            return false;
        }
        vlabel[v] = z;
        img[z].insert(v);
    }
    if img.iter().any(|s| !is_independent(g, s)) {
        return false;
    }
    (0..t.len()).all(|node| match t.parent(node) {
        Some(p) => g.has_edge(w.omega[p], w.omega[node]),
        None => true,
    })
}

/// Sweeps down T_k from a class-k vertex, sending each child to the
/// smallest-id neighbor in the child's class.
pub fn coloring_to_gw(g: &Graph, c: &Coloring, k: usize) -> Result<GrundyWitness> {
    if k == 0 || c.num_colors() < k || !is_grundy_coloring(g, c) {
        return Err(Error::InvalidWitness(format!(
            "not a Grundy coloring with at least {k} colors"
        )));
    }
    let classes = c.classes();
    let tree = build_grundy_tree(k)?;
    let mut omega = vec![0; tree.len()];
    omega[0] = classes[k - 1].first().expect("class is non-empty");
    for node in 1..tree.len() {
        let p = tree.parent(node).unwrap();
        let z = tree.label(node);
        omega[node] = g
            .neighbors(omega[p])
            .intersection(&classes[z - 1])
            .first()
            .expect("Grundy property gives a neighbor");
    }
    Ok(GrundyWitness { tree, omega })
}

/// c_ω on the image of ω, extended greedily to V(g).
pub fn gw_to_coloring(g: &Graph, w: &GrundyWitness) -> Result<Coloring> {
    if !verify_gw(g, w) {
        return Err(Error::InvalidWitness("not a Grundy witness".into()));
    }
    let mut partial = vec![0; g.n()];
    for (node, &v) in w.omega.iter().enumerate() {
        partial[v] = w.tree.label(node);
    }
    extend_partial(g, &partial)
}

/// Searches for a z-Grundy witness with image inside `wset`. When `label_of`
/// is given, a node labeled y may only map to vertices v with label_of[v] = y.
pub fn find_grundy_witness(
    g: &Graph,
    wset: &VertexSet,
    z: usize,
    label_of: Option<&[usize]>,
) -> Option<GrundyWitness> {
    if z == 0 {
        return None;
    }
    let tree = build_grundy_tree(z).ok()?;
    let mut s = Search {
        g,
        tree: &tree,
        wset,
        label_of,
        omega: vec![usize::MAX; tree.len()],
        count: vec![0; g.n()],
        vlabel: vec![0; g.n()],
        img: vec![VertexSet::new(g.n()); z + 1],
    };
    if s.go(0) {
        let omega = s.omega;
        Some(GrundyWitness { tree, omega })
    } else {
        None
    }
}

pub fn is_grundy_set(g: &Graph, wset: &VertexSet, z: usize, label_of: Option<&[usize]>) -> bool {
    find_grundy_witness(g, wset, z, label_of).is_some()
}

struct Search<'a> {
    g: &'a Graph,
    tree: &'a GrundyTree,
    wset: &'a VertexSet,
    label_of: Option<&'a [usize]>,
    omega: Vec<usize>,
    count: Vec<usize>,
    vlabel: Vec<usize>,
    img: Vec<VertexSet>,
}

impl Search<'_> {
    fn go(&mut self, node: usize) -> bool {
        if node == self.tree.len() {
            return true;
        }
        let z = self.tree.label(node);
        let cands = match self.tree.parent(node) {
            Some(p) => self.g.neighbors(self.omega[p]).intersection(self.wset),
            None => self.wset.clone(),
        };
        for u in &cands {
            if let Some(lab) = self.label_of {
                if lab[u] != z {
                    continue;
                }
            }
            if self.count[u] > 0 {
                if self.vlabel[u] != z {
                    continue;
                }
            } else if self.g.neighbors(u).intersects(&self.img[z]) {
                continue;
            }
            self.omega[node] = u;
            self.count[u] += 1;
            self.vlabel[u] = z;
            self.img[z].insert(u);
            if self.go(node + 1) {
                return true;
            }
            self.count[u] -= 1;
            if self.count[u] == 0 {
                self.vlabel[u] = 0;
                self.img[z].remove(u);
            }
        }
        false
    }
}

/// Dominators of a coloring, failing if some class has none.
pub fn require_dominators(g: &Graph, c: &Coloring) -> Result<Vec<usize>> {
    dominators(g, c)
        .into_iter()
        .enumerate()
        .map(|(i, d)| d.ok_or_else(|| Error::InvalidWitness(format!("class {} has no dominator", i + 1))))
        .collect()
}
