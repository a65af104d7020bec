//! First-fit and last-fit greedy colorings, and coloring extension.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A proper, gap-free coloring with 1-based colors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    colors: Vec<usize>,
    num_colors: usize,
}

impl Coloring {
    /// Wraps a color vector, checking that colors are positive and gap-free.
    /// Properness is a property relative to a graph; see [`is_proper`].
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        let num_colors = colors.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; num_colors + 1];
        for &c in &colors {
            if c == 0 {
                return Err(Error::ImproperColoring("color 0 is not allowed".into()));
            }
            used[c] = true;
        }
        if let Some(z) = (1..=num_colors).find(|&z| !used[z]) {
            return Err(Error::ImproperColoring(format!("color {z} is unused")));
        }
        Ok(Self { colors, num_colors })
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Color classes C_1..C_{num_colors}; index 0 is C_1.
    pub fn classes(&self) -> Vec<VertexSet> {
        let n = self.colors.len();
        let mut cls = vec![VertexSet::new(n); self.num_colors];
        for (v, &c) in self.colors.iter().enumerate() {
            cls[c - 1].insert(v);
        }
        cls
    }
}

pub fn is_proper(g: &Graph, c: &Coloring) -> bool {
    c.len() == g.n() && g.edges().iter().all(|&(u, v)| c.color(u) != c.color(v))
}

/// Mask of colors (1-based bit positions) appearing on the neighbors of v.
fn neighbor_colors(g: &Graph, colors: &[usize], v: usize) -> Vec<bool> {
    let top = colors.iter().copied().max().unwrap_or(0);
    let mut seen = vec![false; top + 2];
    for u in g.neighbors(v) {
        if colors[u] > 0 {
            seen[colors[u]] = true;
        }
    }
    seen
}

/// Every vertex of color z has a neighbor in every class below z.
pub fn is_grundy_coloring(g: &Graph, c: &Coloring) -> bool {
    is_proper(g, c)
        && (0..g.n()).all(|v| {
            let seen = neighbor_colors(g, c.colors(), v);
            (1..c.color(v)).all(|z| seen[z])
        })
}

/// Every class z has a dominator: a vertex with neighbors in all classes below z.
pub fn is_partial_grundy_coloring(g: &Graph, c: &Coloring) -> bool {
    is_proper(g, c) && dominators(g, c).iter().all(Option::is_some)
}

/// Smallest-id dominator per class, if any.
pub fn dominators(g: &Graph, c: &Coloring) -> Vec<Option<usize>> {
    let mut dom = vec![None; c.num_colors()];
    for v in 0..g.n() {
        let z = c.color(v);
        if dom[z - 1].is_none() {
            let seen = neighbor_colors(g, c.colors(), v);
            if (1..z).all(|y| seen[y]) {
                dom[z - 1] = Some(v);
            }
        }
    }
    dom
}

fn check_order(g: &Graph, order: &[usize]) {
    let mut seen = vec![false; g.n()];
    for &v in order {
        assert!(v < g.n() && !seen[v], "order is not a permutation of V(g)");
        seen[v] = true;
    }
    assert_eq!(order.len(), g.n(), "order is not a permutation of V(g)");
}

/// Each vertex takes the smallest color missing from its colored neighbors.
pub fn first_fit(g: &Graph, order: &[usize]) -> Coloring {
    check_order(g, order);
    let mut colors = vec![0; g.n()];
    for &v in order {
        let seen = neighbor_colors(g, &colors, v);
        colors[v] = (1..).find(|&z| z >= seen.len() || !seen[z]).unwrap();
    }
    Coloring::new(colors).expect("greedy colorings are gap-free")
}

/// Each vertex takes the largest used color missing from its colored
/// neighbors, or opens a new color when every used color is blocked.
pub fn last_fit(g: &Graph, order: &[usize]) -> Coloring {
    check_order(g, order);
    let mut colors = vec![0; g.n()];
    let mut used = 0;
    for &v in order {
        let seen = neighbor_colors(g, &colors, v);
        colors[v] = match (1..=used).rev().find(|&z| !seen[z]) {
            Some(z) => z,
            None => {
                used += 1;
                used
            }
        };
    }
    Coloring::new(colors).expect("greedy colorings are gap-free")
}

/// Extends a partial assignment (0 = uncolored) to all of V(g), visiting
/// uncolored vertices by increasing id. A vertex joins the smallest class it
/// has no neighbor in, or opens a new top class if it sees every class.
pub fn extend_partial(g: &Graph, partial: &[usize]) -> Result<Coloring> {
    if partial.len() != g.n() {
        return Err(Error::InvalidParameter(format!(
            "partial coloring has {} entries for {} vertices",
            partial.len(),
            g.n()
        )));
    }
    for (u, v) in g.edges() {
        if partial[u] != 0 && partial[u] == partial[v] {
            return Err(Error::ImproperColoring(format!(
                "edge {u}-{v} has both ends colored {}",
                partial[u]
            )));
        }
    }
    let mut colors = partial.to_vec();
    let mut top = colors.iter().copied().max().unwrap_or(0);
    for v in 0..g.n() {
        if colors[v] != 0 {
            continue;
        }
        let seen = neighbor_colors(g, &colors, v);
        colors[v] = match (1..=top).find(|&z| !seen[z]) {
            Some(z) => z,
            None => {
                top += 1;
                top
            }
        };
    }
    Coloring::new(colors)
}

/// Extends a coloring of g[sub] (indexed by the ascending order of `sub`)
/// to a coloring of g.
pub fn extend_coloring(g: &Graph, sub: &VertexSet, sub_coloring: &Coloring) -> Result<Coloring> {
    g.check_set(sub)?;
    if sub.len() != sub_coloring.len() {
        return Err(Error::InvalidParameter(format!(
            "coloring has {} entries for a subset of size {}",
            sub_coloring.len(),
            sub.len()
        )));
    }
    let mut partial = vec![0; g.n()];
    for (i, v) in sub.iter().enumerate() {
        partial[v] = sub_coloring.color(i);
    }
    extend_partial(g, &partial)
}
