//! Independence covering: a randomized sampler, certified covering families
//! and (n, p, q)-universal function families.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{degeneracy_ordering, is_independent, DegeneracyOrdering, Graph};
use crate::rng::{stream, Rng};
use rand::Rng as _;
use rayon::prelude::*;
use std::collections::HashSet;

/// Marks each vertex with probability 1/(d+1) and keeps the marked vertices
/// that have no marked forward neighbor.
pub fn sample_independent_cover(g: &Graph, ordering: &DegeneracyOrdering, rng: &mut Rng) -> VertexSet {
    let n = g.n();
    let prob = 1.0 / (ordering.d as f64 + 1.0);
    let mut marked = VertexSet::new(n);
    for v in 0..n {
        if ordering.d == 0 || rng.random_bool(prob) {
            marked.insert(v);
        }
    }
    let mut y = VertexSet::new(n);
    for v in &marked {
        let p = ordering.position[v];
        let blocked = g
            .neighbors(v)
            .intersection(&marked)
            .iter()
            .any(|u| ordering.position[u] > p);
        if !blocked {
            y.insert(v);
        }
    }
    debug_assert!(is_independent(g, &y));
    y
}

/// (C(k(d+1), k) · k(d+1))^{-1}, the guaranteed per-sample coverage probability.
pub fn sampler_bound(k: usize, d: usize) -> f64 {
    let m = k * (d + 1);
    let mut binom = 1.0f64;
    for i in 0..k {
        binom = binom * (m - i) as f64 / (i + 1) as f64;
    }
    1.0 / (binom * m as f64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoveringMode {
    /// Sample, then add every uncovered independent set of size ≤ k.
    Certified { samples: usize, max_n: usize },
    MonteCarlo { trials: usize },
}

impl CoveringMode {
    pub const DEFAULT_CERTIFIED: CoveringMode = CoveringMode::Certified { samples: 16, max_n: 24 };
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringFamily {
    pub k: usize,
    pub sets: Vec<VertexSet>,
}

pub fn build_covering_family(g: &Graph, k: usize, mode: CoveringMode, rng: &mut Rng) -> Result<CoveringFamily> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let ordering = degeneracy_ordering(g);
    let mut seen = HashSet::new();
    let mut sets = Vec::new();
    let mut push = |s: VertexSet, sets: &mut Vec<VertexSet>| {
        if seen.insert(s.clone()) {
            sets.push(s);
        }
    };
    match mode {
        CoveringMode::MonteCarlo { trials } => {
            for _ in 0..trials {
                push(sample_independent_cover(g, &ordering, rng), &mut sets);
            }
        }
        CoveringMode::Certified { samples, max_n } => {
            if g.n() > max_n {
                return Err(Error::SizeGuard(format!(
                    "certified covering family needs n <= {max_n}, got {}",
                    g.n()
                )));
            }
            for _ in 0..samples {
                push(sample_independent_cover(g, &ordering, rng), &mut sets);
            }
            // Largest sets first, so smaller ones are usually already covered.
            for size in (0..=k.min(g.n())).rev() {
                for x in independent_sets_of_size(g, size) {
                    if !sets.iter().any(|s| x.is_subset(s)) {
                        push(x, &mut sets);
                    }
                }
            }
            sets = drop_dominated(sets);
        }
    }
    Ok(CoveringFamily { k, sets })
}

/// Removes members contained in another member, keeping first occurrences.
pub fn drop_dominated(sets: Vec<VertexSet>) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for (i, s) in sets.iter().enumerate() {
        let dominated = sets
            .iter()
            .enumerate()
            .any(|(j, t)| j != i && s.is_subset(t) && (s != t || j < i));
        if !dominated {
            out.push(s.clone());
        }
    }
    out
}

/// All independent sets of exactly `size` vertices, in lexicographic order.
pub fn independent_sets_of_size(g: &Graph, size: usize) -> Vec<VertexSet> {
    fn rec(g: &Graph, start: usize, left: usize, cur: &mut VertexSet, avail: &VertexSet, out: &mut Vec<VertexSet>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in avail.iter().filter(|&v| v >= start) {
            let next = avail.difference(g.neighbors(v));
            cur.insert(v);
            rec(g, v + 1, left - 1, cur, &next, out);
            cur.remove(v);
        }
    }
    let mut out = Vec::new();
    rec(g, 0, size, &mut VertexSet::new(g.n()), &g.vertices(), &mut out);
    out
}

/// A family of maps [n] → [q], values 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionFamily {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    repr: Repr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    Explicit(Vec<Vec<u8>>),
    /// All q^n functions in mixed-radix order, vertex 0 most significant.
    All,
}

/// Largest q^n enumerated as an explicit all-functions family.
pub const ALL_FUNCTIONS_CAP: u128 = 50_000_000;
const SUBSET_CAP: u128 = 2_000_000;

impl FunctionFamily {
    pub fn len(&self) -> usize {
        match &self.repr {
            Repr::Explicit(fs) => fs.len(),
            Repr::All => (self.q as u128).pow(self.n as u32) as usize,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_exhaustive(&self) -> bool {
        matches!(self.repr, Repr::All)
    }

    /// The idx-th function as a value vector.
    pub fn get(&self, idx: usize) -> Vec<u8> {
        match &self.repr {
            Repr::Explicit(fs) => fs[idx].clone(),
            Repr::All => {
                let mut f = vec![0u8; self.n];
                let mut r = idx;
                for v in (0..self.n).rev() {
                    f[v] = (r % self.q) as u8;
                    r /= self.q;
                }
                f
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Vec<u8>> + '_ {
        (0..self.len()).map(|i| self.get(i))
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Builds a family realizing every assignment [q]^S on every S ⊆ [n] with
/// |S| ≤ p. Uses all q^n functions when that is no larger than composing the
/// q^p patterns with a greedy (n, p)-perfect hash family.
pub fn build_universal_set(n: usize, p: usize, q: usize) -> Result<FunctionFamily> {
    if q == 0 || q > 255 {
        return Err(Error::InvalidParameter(format!("q must be in 1..=255, got {q}")));
    }
    let p = p.min(n);
    let all = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    let all_family = || FunctionFamily { n, p, q, repr: Repr::All };
    if p == n {
        if all > ALL_FUNCTIONS_CAP {
            return Err(Error::SizeGuard(format!("{q}^{n} functions exceed the cap")));
        }
        return Ok(all_family());
    }
    if p > 6 || n > 64 || binomial(n, p) > SUBSET_CAP {
        if all <= ALL_FUNCTIONS_CAP {
            return Ok(all_family());
        }
        return Err(Error::SizeGuard(format!(
            "universal set for n={n}, p={p} is beyond the desk-scale guard (n <= 64, p <= 6)"
        )));
    }
    let hashes = perfect_hash_family(n, p);
    let patterns = (q as u128).pow(p as u32);
    if all <= ALL_FUNCTIONS_CAP && all <= hashes.len() as u128 * patterns {
        return Ok(all_family());
    }
    let mut seen = HashSet::new();
    let mut fs = Vec::new();
    for h in &hashes {
        for idx in 0..patterns as usize {
            let mut pat = vec![0u8; p.max(1)];
            let mut r = idx;
            for slot in (0..p).rev() {
                pat[slot] = (r % q) as u8;
                r /= q;
            }
            let f: Vec<u8> = h.iter().map(|&b| pat[b as usize]).collect();
            if seen.insert(f.clone()) {
                fs.push(f);
            }
        }
    }
    Ok(FunctionFamily { n, p, q, repr: Repr::Explicit(fs) })
}

/// Greedy set cover of all p-subsets of [n] by functions [n] → [p] that are
/// injective on them. Candidates come from a fixed internal stream.
fn perfect_hash_family(n: usize, p: usize) -> Vec<Vec<u8>> {
    if p <= 1 {
        return vec![vec![0; n]];
    }
    let mut uncovered: Vec<u64> = Vec::new();
    let mut cur = (1u64 << p) - 1;
    let limit = if n == 64 { u64::MAX } else { 1u64 << n };
    while cur < limit && cur != 0 {
        uncovered.push(cur);
        // Gosper's hack: next integer with the same popcount.
        let c = cur & cur.wrapping_neg();
        let r = cur.wrapping_add(c);
        if r == 0 {
            break;
        }
        cur = (((r ^ cur) >> 2) / c) | r;
    }
    let injective = |h: &[u8], s: u64| {
        let mut used = 0u32;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let b = 1u32 << h[v];
            if used & b != 0 {
                return false;
            }
            used |= b;
        }
        true
    };
    let mut rng = stream(0x5E_ED0F_4A54, "perfect-hash", (n * 64 + p) as u64);
    let mut family = Vec::new();
    while !uncovered.is_empty() {
        let mut best: Option<(usize, Vec<u8>)> = None;
        for _ in 0..32 {
            let h: Vec<u8> = (0..n).map(|_| rng.random_range(0..p) as u8).collect();
            let hits = uncovered.par_iter().filter(|&&s| injective(&h, s)).count();
            if best.as_ref().is_none_or(|(b, _)| hits > *b) {
                best = Some((hits, h));
            }
        }
        let (hits, h) = best.unwrap();
        if hits == 0 {
            continue;
        }
        uncovered.retain(|&s| !injective(&h, s));
        family.push(h);
    }
    family
}
