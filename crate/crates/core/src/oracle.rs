//! Brute-force ground truth for small graphs. Everything here works on raw
//! adjacency bitmasks and shares no code with the solvers.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::witness::PartialGrundyWitness;

pub const ORACLE_MAX_N: usize = 10;
const ORDERINGS_MAX_N: usize = 9;
const KIJ_SUBSET_CAP: u128 = 10_000_000;

fn masks(g: &Graph, limit: usize) -> Result<Vec<u32>> {
    if g.n() > limit {
        return Err(Error::SizeGuard(format!("oracle needs n <= {limit}, got {}", g.n())));
    }
    Ok((0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect())
}

/// Enumerates proper partitions into independent classes. With `optional`,
/// vertices may also stay unassigned. Calls `leaf(classes)` per partition.
fn partitions(adj: &[u32], optional: bool, leaf: &mut dyn FnMut(&[u32])) {
    fn rec(adj: &[u32], v: usize, optional: bool, classes: &mut Vec<u32>, leaf: &mut dyn FnMut(&[u32])) {
        if v == adj.len() {
            leaf(classes);
            return;
        }
        if optional {
            rec(adj, v + 1, optional, classes, leaf);
        }
        for c in 0..classes.len() {
            if classes[c] & adj[v] == 0 {
                classes[c] |= 1 << v;
                rec(adj, v + 1, optional, classes, leaf);
                classes[c] &= !(1 << v);
            }
        }
        classes.push(1 << v);
        rec(adj, v + 1, optional, classes, leaf);
        classes.pop();
    }
    rec(adj, 0, optional, &mut Vec::new(), leaf);
}

/// Class-neighborhood mask of each member: bit c set iff v has a neighbor in class c.
fn class_masks(adj: &[u32], classes: &[u32]) -> Vec<Vec<u32>> {
    classes
        .iter()
        .map(|&cm| {
            (0..adj.len())
                .filter(|&v| cm >> v & 1 == 1)
                .map(|v| {
                    classes
                        .iter()
                        .enumerate()
                        .fold(0u32, |m, (c, &other)| if adj[v] & other != 0 { m | 1 << c } else { m })
                })
                .collect()
        })
        .collect()
}

/// Whether the classes can be ordered so that class placed after the set S
/// of earlier classes satisfies `ok(class, S)`.
fn orderable(m: usize, ok: &dyn Fn(usize, u32) -> bool) -> bool {
    let full = (1u32 << m) - 1;
    let mut reach = vec![false; 1 << m];
    reach[0] = true;
    for s in 0..=full {
        if !reach[s as usize] {
            continue;
        }
        for c in 0..m {
            if s >> c & 1 == 0 && ok(c, s) {
                reach[(s | 1 << c) as usize] = true;
            }
        }
    }
    reach[full as usize]
}

/// Γ(g): the largest k such that V(g) splits into independent classes
/// C_1..C_k where every vertex of C_z has neighbors in all of C_1..C_{z-1}.
pub fn oracle_grundy(g: &Graph) -> Result<usize> {
    let adj = masks(g, ORACLE_MAX_N)?;
    let mut best = 0;
    partitions(&adj, false, &mut |classes| {
        let m = classes.len();
        if m <= best {
            return;
        }
        let nm = class_masks(&adj, classes);
        let all: Vec<u32> = nm.iter().map(|vs| vs.iter().fold(u32::MAX, |a, &b| a & b)).collect();
        if orderable(m, &|c, s| all[c] & s == s) {
            best = m;
        }
    });
    Ok(best)
}

/// Γ(g) as the maximum number of first-fit colors over all vertex orders.
pub fn oracle_grundy_orderings(g: &Graph) -> Result<usize> {
    let adj = masks(g, ORDERINGS_MAX_N)?;
    let n = adj.len();
    let cap = adj.iter().map(|m| m.count_ones() as usize + 1).max().unwrap_or(0);
    let ff = |order: &[usize]| {
        let mut color = [0u32; 32];
        let mut top = 0;
        for &v in order {
            let mut used = 0u64;
            let mut nb = adj[v];
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                used |= 1 << color[u];
            }
            let c = (!(used | 1)).trailing_zeros();
            color[v] = c;
            top = top.max(c as usize);
        }
        top
    };
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = ff(&order);
    // Heap's algorithm.
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n && best < cap {
        if c[i] < i {
            if i % 2 == 0 {
                order.swap(0, i);
            } else {
                order.swap(c[i], i);
            }
            best = best.max(ff(&order));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

/// ∂Γ(g): the largest k such that some vertices can be split into
/// independent classes Q_1..Q_k, the rest left out, where each Q_z has a
/// vertex with neighbors in all of Q_1..Q_{z-1}.
pub fn oracle_partial_grundy(g: &Graph) -> Result<usize> {
    let adj = masks(g, ORACLE_MAX_N)?;
    let mut best = 0;
    partitions(&adj, true, &mut |classes| {
        let m = classes.len();
        if m <= best {
            return;
        }
        let nm = class_masks(&adj, classes);
        if orderable(m, &|c, s| nm[c].iter().any(|&x| x & s == s)) {
            best = m;
        }
    });
    Ok(best)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Whether g contains K_{i,j} as a (not necessarily induced) subgraph.
pub fn oracle_has_kij(g: &Graph, i: usize, j: usize) -> Result<bool> {
    if i == 0 || j == 0 {
        return Err(Error::InvalidParameter("K_{i,j} needs i, j >= 1".into()));
    }
    let (a, b) = (i.min(j), i.max(j));
    if binomial(g.n(), a) > KIJ_SUBSET_CAP {
        return Err(Error::SizeGuard(format!("C({}, {a}) subsets exceed the cap", g.n())));
    }
    fn rec(g: &Graph, start: usize, left: usize, common: &VertexSet, need: usize) -> bool {
        if common.len() < need {
            return false;
        }
        if left == 0 {
            return true;
        }
        (start..g.n()).any(|v| rec(g, v + 1, left - 1, &common.intersection(g.neighbors(v)), need))
    }
    // The common neighborhood of the smaller side never contains that side.
    Ok(rec(g, 0, a, &g.vertices(), b))
}

/// Exhaustive search for (X_1, .., X_k) with |X_i| ≤ k-i+1.
pub fn brute_force_small_pgw(g: &Graph, k: usize) -> Result<Option<PartialGrundyWitness>> {
    let adj = masks(g, ORACLE_MAX_N)?;
    let n = adj.len();
    fn rec(adj: &[u32], k: usize, used: u32, chosen: &mut Vec<u32>) -> bool {
        let t = chosen.len();
        if t == k {
            return true;
        }
        let n = adj.len() as u32;
        let free = ((1u64 << n) - 1) as u32 & !used;
        let cap = k - t;
        // Enumerate non-empty subsets of `free`.
        let mut x = free;
        while x != 0 {
            let ok = x.count_ones() as usize <= cap
                && independent(adj, x)
                && has_dominator(adj, x, chosen);
            if ok {
                chosen.push(x);
                if rec(adj, k, used | x, chosen) {
                    return true;
                }
                chosen.pop();
            }
            x = (x - 1) & free;
        }
        false
    }
    fn independent(adj: &[u32], x: u32) -> bool {
        bits(x).all(|v| adj[v] & x == 0)
    }
    fn has_dominator(adj: &[u32], x: u32, chosen: &[u32]) -> bool {
        bits(x).any(|v| chosen.iter().all(|&c| adj[v] & c != 0))
    }
    fn bits(x: u32) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&v| x >> v & 1 == 1)
    }
    let mut chosen = Vec::new();
    if !rec(&adj, k, 0, &mut chosen) {
        return Ok(None);
    }
    let classes = chosen
        .iter()
        .map(|&x| VertexSet::from_iter(n, bits(x)))
        .collect();
    Ok(Some(PartialGrundyWitness::new(classes)))
}
