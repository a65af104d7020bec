//! χ-independent set families and recursive Grundy-representative families.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{is_independent, Graph};
use std::collections::{HashMap, HashSet};

/// A labeling χ: V → [k] with classes X_1..X_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelColoring {
    labels: Vec<usize>,
    classes: Vec<VertexSet>,
}

impl LabelColoring {
    /// `labels[v]` is in 1..=k.
    pub fn new(labels: Vec<usize>, k: usize) -> Result<Self> {
        let n = labels.len();
        let mut classes = vec![VertexSet::new(n); k];
        for (v, &z) in labels.iter().enumerate() {
            if z == 0 || z > k {
                return Err(Error::InvalidParameter(format!("label {z} of vertex {v} not in 1..={k}")));
            }
            classes[z - 1].insert(v);
        }
        Ok(Self { labels, classes })
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// X_z for z in 1..=k.
    pub fn class(&self, z: usize) -> &VertexSet {
        &self.classes[z - 1]
    }
}

/// (q_1, .., q_k); index z-1 holds q_z.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SizeVector(pub Vec<usize>);

impl SizeVector {
    pub fn zero(k: usize) -> Self {
        Self(vec![0; k])
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn get(&self, z: usize) -> usize {
        self.0[z - 1]
    }

    pub fn le(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn incremented(&self, z: usize) -> Self {
        let mut v = self.clone();
        v.0[z - 1] += 1;
        v
    }

    pub fn decremented(&self, z: usize) -> Self {
        let mut v = self.clone();
        v.0[z - 1] -= 1;
        v
    }

    /// All vectors componentwise ≤ self, in lexicographic order.
    pub fn box_below(&self) -> Vec<SizeVector> {
        let mut out = vec![Vec::new()];
        for &b in &self.0 {
            out = out
                .into_iter()
                .flat_map(|pre| {
                    (0..=b).map(move |x| {
                        let mut p = pre.clone();
                        p.push(x);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(SizeVector).collect()
    }
}

/// A p-family: χ-independent sets of at most p vertices, no duplicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    pub sets: Vec<VertexSet>,
    pub p: usize,
}

impl SetFamily {
    pub fn new(sets: Vec<VertexSet>, p: usize, chi: &LabelColoring, g: &Graph) -> Result<Self> {
        let mut seen = HashSet::new();
        for s in &sets {
            g.check_set(s)?;
            if s.len() > p {
                return Err(Error::InvalidParameter(format!("set of size {} in a {p}-family", s.len())));
            }
            if !is_chi_independent(s, chi, g) {
                return Err(Error::InvalidParameter("set is not χ-independent".into()));
            }
            if !seen.insert(s.clone()) {
                return Err(Error::InvalidParameter("duplicate set".into()));
            }
        }
        Ok(Self { sets, p })
    }
}

/// Biclique-freeness parameters and the derived budget constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RepParams {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// Upper bound on p + |q| for every call.
    pub f_k: usize,
    pub eta: usize,
}

impl RepParams {
    /// f_k = 2^k.
    pub fn new(i: usize, j: usize, k: usize) -> Result<Self> {
        Self::with_budget(i, j, k, 1 << k)
    }

    pub fn with_budget(i: usize, j: usize, k: usize, f_k: usize) -> Result<Self> {
        if j == 0 || i < j || k == 0 || f_k == 0 {
            return Err(Error::InvalidParameter(format!(
                "need i >= j >= 1, k >= 1, f_k >= 1 (got i={i}, j={j}, k={k}, f_k={f_k})"
            )));
        }
        Ok(Self { i, j, k, f_k, eta: i * f_k * k })
    }

    /// ln α_p with α_p = 3k(pη)^{i+1}; p is taken as at least 1.
    pub fn ln_alpha(&self, p: usize) -> f64 {
        let p = p.max(1) as f64;
        (3.0 * self.k as f64).ln() + (self.i as f64 + 1.0) * (p * self.eta as f64).ln()
    }

    /// The per-call bound (pη)^{i+1} on heavy vertices outside U, saturating.
    pub fn heavy_bound(&self, p: usize) -> u128 {
        let base = (p as u128).saturating_mul(self.eta as u128);
        (0..=self.i).fold(1u128, |acc, _| acc.saturating_mul(base))
    }
}

pub fn is_chi_independent(s: &VertexSet, chi: &LabelColoring, g: &Graph) -> bool {
    s.iter()
        .all(|v| !g.neighbors(v).intersection(s).intersects(chi.class(chi.label(v))))
}

/// A fits B iff A ∪ B is χ-independent.
pub fn fits(a: &VertexSet, b: &VertexSet, chi: &LabelColoring, g: &Graph) -> bool {
    is_chi_independent(&a.union(b), chi, g)
}

/// All χ-independent unions A ∪ B (A ∈ f1, B ∈ f2) with at most `cap` vertices.
pub fn star(f1: &[VertexSet], f2: &[VertexSet], cap: usize, chi: &LabelColoring, g: &Graph) -> Vec<VertexSet> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for a in f1 {
        for b in f2 {
            let u = a.union(b);
            if u.len() <= cap && is_chi_independent(&u, chi, g) && seen.insert(u.clone()) {
                out.push(u);
            }
        }
    }
    out
}

/// Greedy in family order.
pub fn maximal_disjoint_subfamily(f: &[VertexSet]) -> Vec<VertexSet> {
    let mut used: Option<VertexSet> = None;
    let mut out = Vec::new();
    for s in f {
        let free = used.as_ref().is_none_or(|u| !u.intersects(s));
        if free {
            match &mut used {
                Some(u) => u.union_with(s),
                None => used = Some(s.clone()),
            }
            out.push(s.clone());
        }
    }
    out
}

/// S_z = {v ∈ X_z : |N(v) ∩ U ∩ X_z| ≥ i}.
pub fn heavy_vertices(g: &Graph, u: &VertexSet, chi: &LabelColoring, z: usize, i: usize) -> VertexSet {
    let uz = u.intersection(chi.class(z));
    let mut s = VertexSet::new(g.n());
    for v in chi.class(z) {
        if g.neighbors(v).intersection_len(&uz) >= i {
            s.insert(v);
        }
    }
    s
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RepStats {
    pub calls: u64,
    pub case1: u64,
    pub case2: u64,
}

type MemoKey = (Vec<VertexSet>, usize, SizeVector);

/// Recursive representative computation with a memo table. One instance
/// serves many calls on the same graph and labeling.
pub struct Representer<'a> {
    g: &'a Graph,
    chi: &'a LabelColoring,
    params: RepParams,
    memo: HashMap<MemoKey, Vec<VertexSet>>,
    pub stats: RepStats,
}

fn push_unique(out: &mut Vec<VertexSet>, seen: &mut HashSet<VertexSet>, s: VertexSet) {
    if seen.insert(s.clone()) {
        out.push(s);
    }
}

impl<'a> Representer<'a> {
    pub fn new(g: &'a Graph, chi: &'a LabelColoring, params: RepParams) -> Self {
        Self { g, chi, params, memo: HashMap::new(), stats: RepStats::default() }
    }

    /// A subfamily of `f` that q-Grundy-represents it.
    pub fn represent(&mut self, f: &[VertexSet], p: usize, q: &SizeVector) -> Result<Vec<VertexSet>> {
        if p + q.sum() > self.params.f_k {
            return Err(Error::InvalidParameter(format!(
                "p + |q| = {} exceeds the budget {}",
                p + q.sum(),
                self.params.f_k
            )));
        }
        if q.0.len() != self.chi.k() {
            return Err(Error::InvalidParameter("size vector length differs from k".into()));
        }
        self.rec(f, p, q)
    }

    fn rec(&mut self, f: &[VertexSet], p: usize, q: &SizeVector) -> Result<Vec<VertexSet>> {
        self.stats.calls += 1;
        // Families of at most one set represent themselves; the general
        // procedure returns the same output here.
        if f.len() <= 1 || p == 0 {
            return Ok(f.to_vec());
        }
        if q.sum() == 0 {
            return Ok(vec![f[0].clone()]);
        }
        // ∅ fits every B that anything fits, and it hits no U_D in Case 1.
        if let Some(e) = f.iter().find(|s| s.is_empty()) {
            return Ok(vec![e.clone()]);
        }
        let key = (f.to_vec(), p, q.clone());
        if let Some(r) = self.memo.get(&key) {
            return Ok(r.clone());
        }
        let d = maximal_disjoint_subfamily(f);
        let out = if d.len() < self.params.eta {
            self.case1(f, &d, p, q)?
        } else {
            self.case2(f, &d, p, q)?
        };
        self.memo.insert(key, out.clone());
        Ok(out)
    }

    /// Few disjoint sets: U_D hits every member, so branch on which vertex
    /// of U_D a member contains.
    fn case1(&mut self, f: &[VertexSet], d: &[VertexSet], p: usize, q: &SizeVector) -> Result<Vec<VertexSet>> {
        self.stats.case1 += 1;
        let mut ud = VertexSet::new(self.g.n());
        for s in d {
            ud.union_with(s);
        }
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for u in &ud {
            let fu: Vec<VertexSet> = f
                .iter()
                .filter(|s| s.contains(u))
                .map(|s| {
                    let mut t = s.clone();
                    t.remove(u);
                    t
                })
                .collect();
            if fu.is_empty() {
                continue;
            }
            let qu = q.incremented(self.chi.label(u));
            for sub in [self.rec(&fu, p - 1, &qu)?, self.rec(&fu, p - 1, q)?] {
                for mut s in sub {
                    s.insert(u);
                    push_unique(&mut out, &mut seen, s);
                }
            }
        }
        Ok(out)
    }

    /// Many disjoint sets: keep η of them, and for every heavy vertex s
    /// recurse on the members compatible with s.
    fn case2(&mut self, f: &[VertexSet], d: &[VertexSet], p: usize, q: &SizeVector) -> Result<Vec<VertexSet>> {
        self.stats.case2 += 1;
        let (g, chi, params) = (self.g, self.chi, self.params);
        let dstar = &d[..params.eta];
        let mut u = VertexSet::new(g.n());
        for s in dstar {
            u.union_with(s);
        }
        let mut heavy = VertexSet::new(g.n());
        for z in 1..=chi.k() {
            let sz = heavy_vertices(g, &u, chi, z, params.i);
            let beyond = sz.difference(&u.intersection(chi.class(z))).len() as u128;
            if beyond >= params.heavy_bound(p) {
                return Err(Error::Precondition(format!(
                    "{beyond} heavy vertices of label {z} outside U reach the bound {}; input is not K_{{{},{}}}-free",
                    params.heavy_bound(p),
                    params.i,
                    params.i
                )));
            }
            heavy.union_with(&sz);
        }
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for s in dstar {
            push_unique(&mut out, &mut seen, s.clone());
        }
        for s in &heavy {
            let z = chi.label(s);
            if q.get(z) == 0 {
                continue;
            }
            let fs: Vec<VertexSet> = f
                .iter()
                .filter(|a| {
                    let mut t = (*a).clone();
                    t.insert(s);
                    is_chi_independent(&t, chi, g)
                })
                .cloned()
                .collect();
            for a in self.rec(&fs, p, &q.decremented(z))? {
                push_unique(&mut out, &mut seen, a);
            }
        }
        Ok(out)
    }
}

/// One-shot wrapper around [`Representer::represent`].
pub fn grundy_representative(
    f: &SetFamily,
    q: &SizeVector,
    params: RepParams,
    chi: &LabelColoring,
    g: &Graph,
) -> Result<SetFamily> {
    let sets = Representer::new(g, chi, params).represent(&f.sets, f.p, q)?;
    Ok(SetFamily { sets, p: f.p })
}

const REP_CHECK_CAP: u128 = 5_000_000;

/// Brute-force check of q-Grundy representation. Only χ-independent B are
/// enumerated: nothing fits a B that is not χ-independent.
pub fn is_representative(
    f_sub: &[VertexSet],
    f: &[VertexSet],
    q: &SizeVector,
    chi: &LabelColoring,
    g: &Graph,
) -> Result<bool> {
    let mut per_label = Vec::new();
    let mut total = 1u128;
    for z in 1..=chi.k() {
        let sets = independent_subsets(g, chi.class(z), q.get(z));
        total = total.saturating_mul(sets.len() as u128);
        if total > REP_CHECK_CAP {
            return Err(Error::SizeGuard(format!("more than {REP_CHECK_CAP} sets B of size q")));
        }
        per_label.push(sets);
    }
    let mut bs = vec![VertexSet::new(g.n())];
    for sets in &per_label {
        bs = bs.iter().flat_map(|b| sets.iter().map(move |s| b.union(s))).collect();
    }
    Ok(bs.iter().all(|b| {
        !f.iter().any(|a| fits(a, b, chi, g)) || f_sub.iter().any(|a| fits(a, b, chi, g))
    }))
}

fn independent_subsets(g: &Graph, pool: &VertexSet, size: usize) -> Vec<VertexSet> {
    fn rec(g: &Graph, cand: &[usize], start: usize, left: usize, cur: &mut VertexSet, out: &mut Vec<VertexSet>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for idx in start..cand.len() {
            let v = cand[idx];
            if !g.neighbors(v).intersects(cur) {
                cur.insert(v);
                rec(g, cand, idx + 1, left - 1, cur, out);
                cur.remove(v);
            }
        }
    }
    let cand = pool.to_vec();
    let mut out = Vec::new();
    rec(g, &cand, 0, size, &mut VertexSet::new(g.n()), &mut out);
    debug_assert!(out.iter().all(|s| is_independent(g, s)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, vs.iter().copied())
    }

    #[test]
    fn fits_examples() {
        let k2 = Graph::complete(2);
        let same = LabelColoring::new(vec![1, 1], 1).unwrap();
        let diff = LabelColoring::new(vec![1, 2], 2).unwrap();
        assert!(fits(&VertexSet::new(2), &s(2, &[0]), &same, &k2));
        assert!(!fits(&s(2, &[0]), &s(2, &[1]), &same, &k2));
        assert!(fits(&s(2, &[0]), &s(2, &[1]), &diff, &k2));
    }

    #[test]
    fn star_examples() {
        let g = Graph::empty(3);
        let chi = LabelColoring::new(vec![1, 2, 1], 2).unwrap();
        let f2 = vec![s(3, &[0]), s(3, &[1, 2])];
        assert_eq!(star(&[VertexSet::new(3)], &f2, 1, &chi, &g), vec![s(3, &[0])]);
        let a = vec![s(3, &[0]), s(3, &[2])];
        let b = vec![s(3, &[1])];
        assert_eq!(star(&a, &b, 2, &chi, &g), vec![s(3, &[0, 1]), s(3, &[1, 2])]);
        // C_4 = 0-1-2-3-0 with alternating labels.
        let c4 = Graph::cycle(4);
        let chi = LabelColoring::new(vec![1, 2, 1, 2], 2).unwrap();
        assert_eq!(star(&[s(4, &[0])], &[s(4, &[1])], 2, &chi, &c4), vec![s(4, &[0, 1])]);
    }

    #[test]
    fn disjoint_subfamily_examples() {
        let f = vec![s(4, &[0]), s(4, &[1, 2])];
        assert_eq!(maximal_disjoint_subfamily(&f), f);
        let f = vec![s(4, &[0, 1]), s(4, &[1, 2])];
        assert_eq!(maximal_disjoint_subfamily(&f), vec![s(4, &[0, 1])]);
        let f = vec![s(4, &[1]), s(4, &[1, 2]), s(4, &[3])];
        assert_eq!(maximal_disjoint_subfamily(&f), vec![s(4, &[1]), s(4, &[3])]);
    }

    #[test]
    fn heavy_examples() {
        let star4 = Graph::star(4);
        let chi = LabelColoring::new(vec![1; 5], 1).unwrap();
        assert!(heavy_vertices(&star4, &VertexSet::new(5), &chi, 1, 1).is_empty());
        let leaves = s(5, &[1, 2, 3, 4]);
        assert!(heavy_vertices(&star4, &leaves, &chi, 1, 1).contains(0));
        let c5 = Graph::cycle(5);
        let chi = LabelColoring::new(vec![1; 5], 1).unwrap();
        assert!(heavy_vertices(&c5, &s(5, &[0, 2]), &chi, 1, 2).contains(1));
        // Every independent pair of C_5 has a common neighbor, so the pair's
        // label must differ from that neighbor's for S_z to be empty.
        let chi = LabelColoring::new(vec![1, 2, 1, 2, 2], 2).unwrap();
        assert!(heavy_vertices(&c5, &s(5, &[0, 2]), &chi, 1, 2).is_empty());
    }

    #[test]
    fn base_cases() {
        let g = Graph::path(4);
        let chi = LabelColoring::new(vec![1, 2, 1, 2], 2).unwrap();
        let params = RepParams::new(2, 2, 2).unwrap();
        let f = SetFamily::new(vec![s(4, &[0]), s(4, &[2]), s(4, &[0, 3])], 2, &chi, &g).unwrap();
        let r = grundy_representative(&f, &SizeVector::zero(2), params, &chi, &g).unwrap();
        assert_eq!(r.sets, vec![s(4, &[0])]);
        let empty = SetFamily::new(vec![VertexSet::new(4)], 0, &chi, &g).unwrap();
        let r = grundy_representative(&empty, &SizeVector(vec![1, 1]), params, &chi, &g).unwrap();
        assert_eq!(r.sets, vec![VertexSet::new(4)]);
    }

    #[test]
    fn budget_is_enforced() {
        let g = Graph::path(3);
        let chi = LabelColoring::new(vec![1, 2, 1], 2).unwrap();
        let params = RepParams::new(2, 2, 2).unwrap();
        let f = SetFamily::new(vec![s(3, &[0])], 1, &chi, &g).unwrap();
        assert!(grundy_representative(&f, &SizeVector(vec![2, 2]), params, &chi, &g).is_err());
    }

    #[test]
    fn representative_check_examples() {
        let g = Graph::path(4);
        let chi = LabelColoring::new(vec![1, 2, 1, 2], 2).unwrap();
        let f = vec![s(4, &[0]), s(4, &[2])];
        let q = SizeVector(vec![1, 0]);
        assert!(is_representative(&f, &f, &q, &chi, &g).unwrap());
        assert!(!is_representative(&[], &f, &q, &chi, &g).unwrap());
    }

    #[test]
    fn case_two_with_small_budget() {
        // A hub with eight leaves. With i = 2, f_k = 2, k = 1 we get η = 4,
        // so the nine disjoint singletons trigger Case 2 and the hub is heavy.
        let n = 9;
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        let chi = LabelColoring::new(vec![1; n], 1).unwrap();
        let params = RepParams::with_budget(2, 1, 1, 2).unwrap();
        assert_eq!(params.eta, 4);
        let f: Vec<VertexSet> = (0..n).map(|v| VertexSet::singleton(n, v)).collect();
        let q = SizeVector(vec![1]);
        let mut r = Representer::new(&g, &chi, params);
        let out = r.represent(&f, 1, &q).unwrap();
        assert_eq!(r.stats.case2, 1);
        assert!(out.iter().all(|s| f.contains(s)));
        assert!(is_representative(&out, &f, &q, &chi, &g).unwrap());
    }
}
