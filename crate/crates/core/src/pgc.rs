//! Partial Grundy Coloring: the structured problem with bicliques (SPGC),
//! its randomized and deterministic solvers, and the full pipeline.

use crate::bitset::VertexSet;
use crate::covering::{
    build_covering_family, build_universal_set, drop_dominated, sample_independent_cover, CoveringMode,
};
use crate::error::{Error, Result};
use crate::graph::{degeneracy_ordering, induced_subgraph, remove_edges, Biclique, Graph};
use crate::greedy::Coloring;
use crate::reduction::{degree_reduce, ReductionOutcome};
use crate::rng::{stream, Rng};
use crate::witness::{coloring_to_pgw, pgw_to_coloring, shrink_pgw, verify_pgw, Certificate, PartialGrundyWitness};
use rand::Rng as _;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

/// Default cap on |functions| × |side selections| in deterministic mode.
pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

#[derive(Clone, Debug)]
pub struct SpgcInstance {
    pub g: Graph,
    pub k: usize,
    pub bicliques: Vec<Biclique>,
    /// Degeneracy of g minus all biclique edges.
    pub d: usize,
}

impl SpgcInstance {
    pub fn new(g: Graph, k: usize, bicliques: Vec<Biclique>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1".into()));
        }
        let residual = remove_edges(&g, &bicliques)?;
        let d = degeneracy_ordering(&residual).d;
        Ok(Self { g, k, bicliques, d })
    }

    pub fn ell(&self) -> usize {
        self.bicliques.len()
    }
}

/// φ and its classes Z_1..Z_k (0-based colors).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorCodingAssignment {
    pub phi: Vec<u8>,
    pub classes: Vec<VertexSet>,
}

impl ColorCodingAssignment {
    pub fn new(phi: Vec<u8>, k: usize) -> Self {
        let n = phi.len();
        let mut classes = vec![VertexSet::new(n); k];
        for (v, &c) in phi.iter().enumerate() {
            classes[c as usize].insert(v);
        }
        Self { phi, classes }
    }
}

/// Per color j and biclique i, `right[j][i]` picks R_i (true) or L_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SideSelection {
    pub right: Vec<Vec<bool>>,
}

impl SideSelection {
    /// D_j = union of the chosen sides.
    pub fn d_sets(&self, inst: &SpgcInstance) -> Vec<VertexSet> {
        self.right
            .iter()
            .map(|bits| {
                let mut d = VertexSet::new(inst.g.n());
                for (b, &r) in inst.bicliques.iter().zip(bits) {
                    d.union_with(if r { &b.right } else { &b.left });
                }
                d
            })
            .collect()
    }
}

/// Returns the first tuple (Y_1, .., Y_k), Y_j ∈ F_j in family order, that
/// forms a partial Grundy witness.
pub fn find_witness_in_families(g: &Graph, families: &[Vec<VertexSet>]) -> Result<Option<PartialGrundyWitness>> {
    let mut zs = VertexSet::new(g.n());
    for f in families {
        let mut z = VertexSet::new(g.n());
        for y in f {
            g.check_set(y)?;
            z.union_with(y);
        }
        if z.intersects(&zs) {
            return Err(Error::InvalidParameter("families are not over disjoint classes".into()));
        }
        zs.union_with(&z);
    }
    fn rec(g: &Graph, families: &[Vec<VertexSet>], chosen: &mut Vec<VertexSet>) -> Option<PartialGrundyWitness> {
        let t = chosen.len();
        if t == families.len() {
            let w = PartialGrundyWitness::new(chosen.clone());
            return verify_pgw(g, &w).map(|_| w);
        }
        for y in &families[t] {
            let ok = y.iter().any(|v| chosen.iter().all(|c| g.neighbors(v).intersects(c)));
            if !ok {
                continue;
            }
            chosen.push(y.clone());
            if let Some(w) = rec(g, families, chosen) {
                return Some(w);
            }
            chosen.pop();
        }
        None
    }
    Ok(rec(g, families, &mut Vec::new()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Answer {
    Yes,
    No,
    NoWitnessFound,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub trials: u64,
    pub phi_enumerated: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpgcResult {
    pub witness: Option<PartialGrundyWitness>,
    pub answer: Answer,
    pub stats: Stats,
}

fn restrict_to(g: &Graph, w: &VertexSet, f: impl FnOnce(&Graph) -> Vec<VertexSet>) -> Result<Vec<VertexSet>> {
    let (h, map) = induced_subgraph(g, w)?;
    Ok(f(&h)
        .into_iter()
        .map(|s| VertexSet::from_iter(g.n(), s.iter().map(|v| map[v])))
        .collect())
}

fn run_trial(inst: &SpgcInstance, rng: &mut Rng) -> Result<Option<PartialGrundyWitness>> {
    let (g, k) = (&inst.g, inst.k);
    let phi: Vec<u8> = (0..g.n()).map(|_| rng.random_range(0..k) as u8).collect();
    let cc = ColorCodingAssignment::new(phi, k);
    let sel = SideSelection {
        right: (0..k).map(|_| (0..inst.ell()).map(|_| rng.random_bool(0.5)).collect()).collect(),
    };
    let ds = sel.d_sets(inst);
    let mut singletons = Vec::with_capacity(k);
    for j in 0..k {
        let w = cc.classes[j].difference(&ds[j]);
        let y = restrict_to(g, &w, |h| {
            let ord = degeneracy_ordering(h);
            vec![sample_independent_cover(h, &ord, rng)]
        })?;
        singletons.push(y);
    }
    find_witness_in_families(g, &singletons)
}

/// Runs `trials` independent rounds of color coding plus independence
/// sampling. Trial t draws from stream (seed, t); the reported witness is
/// the one from the smallest successful trial index.
pub fn solve_spgc_randomized(inst: &SpgcInstance, trials: usize, seed: u64) -> Result<SpgcResult> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let found = (0..trials).into_par_iter().find_map_first(|t| {
        let mut rng = stream(seed, "spgc", t as u64);
        run_trial(inst, &mut rng).transpose().map(|r| (t, r))
    });
    match found {
        Some((t, r)) => {
            let w = shrink_pgw(&inst.g, &r?)?;
            let n = t as u64 + 1;
            Ok(SpgcResult {
                witness: Some(w),
                answer: Answer::Yes,
                stats: Stats { trials: n, phi_enumerated: n },
            })
        }
        None => Ok(SpgcResult {
            witness: None,
            answer: Answer::NoWitnessFound,
            stats: Stats { trials: trials as u64, phi_enumerated: trials as u64 },
        }),
    }
}

const COVER_MAX_N: usize = 24;

/// Certified covering families of G[W], cached by W.
struct CoverCache<'a> {
    g: &'a Graph,
    k: usize,
    map: Mutex<HashMap<VertexSet, Arc<Vec<VertexSet>>>>,
}

impl CoverCache<'_> {
    fn get(&self, w: &VertexSet) -> Result<Arc<Vec<VertexSet>>> {
        if let Some(f) = self.map.lock().unwrap().get(w) {
            return Ok(f.clone());
        }
        if w.len() > COVER_MAX_N {
            return Err(Error::SizeGuard(format!(
                "certified covering family over {} > {COVER_MAX_N} vertices",
                w.len()
            )));
        }
        let key = w.iter().fold(0x9E37_79B9_7F4A_7C15u64, |h, v| (h ^ v as u64).wrapping_mul(0x100_0000_01b3));
        let mut rng = stream(key, "covering", 0);
        let mode = CoveringMode::Certified { samples: 16, max_n: COVER_MAX_N };
        let sets = restrict_to(self.g, w, |h| {
            build_covering_family(h, self.k, mode, &mut rng)
                .expect("k >= 1 and size checked")
                .sets
        })?;
        let f = Arc::new(sets);
        self.map.lock().unwrap().insert(w.clone(), f.clone());
        Ok(f)
    }
}

/// The sets Z ∩ D over all 2^ℓ side selections, deduplicated.
fn restricted_sides(inst: &SpgcInstance, z: &VertexSet) -> BTreeSet<VertexSet> {
    let mut acc = BTreeSet::from([VertexSet::new(inst.g.n())]);
    for b in &inst.bicliques {
        let (l, r) = (b.left.intersection(z), b.right.intersection(z));
        acc = acc.iter().flat_map(|s| [s.union(&l), s.union(&r)]).collect();
    }
    acc
}

/// Sound filter: each Z_t must hold a vertex seeing all of Z_1..Z_{t-1}.
fn chain_possible(g: &Graph, zs: &[VertexSet]) -> bool {
    zs.iter().enumerate().all(|(t, z)| {
        !z.is_empty() && z.iter().any(|v| zs[..t].iter().all(|zj| g.neighbors(v).intersects(zj)))
    })
}

/// Exhaustive version: every φ of a (n, k², k)-universal family, every side
/// selection and certified covering families. Complete within the budget.
///
/// Choosing D_j independently per color means the tuple search can run over
/// F_j = union over D of F(G[Z_j \ D]); the set of candidate tuples is the
/// same as searching each (D_1, .., D_k) separately.
pub fn solve_spgc_deterministic(inst: &SpgcInstance, budget: u128) -> Result<SpgcResult> {
    let (g, k) = (&inst.g, inst.k);
    let n = g.n();
    if k > n {
        return Ok(SpgcResult { witness: None, answer: Answer::No, stats: Stats::default() });
    }
    let q = build_universal_set(n, k * k, k)?;
    let sides = 1u128.checked_shl(inst.ell().min(n) as u32).unwrap_or(u128::MAX);
    let needed = (q.len() as u128).saturating_mul(sides);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let cache = CoverCache { g, k, map: Mutex::new(HashMap::new()) };
    let eval = |idx: usize| -> Result<Option<PartialGrundyWitness>> {
        let cc = ColorCodingAssignment::new(q.get(idx), k);
        if !chain_possible(g, &cc.classes) {
            return Ok(None);
        }
        let mut families = Vec::with_capacity(k);
        for z in &cc.classes {
            let mut union = Vec::new();
            for d in restricted_sides(inst, z) {
                union.extend(cache.get(&z.difference(&d))?.iter().cloned());
            }
            let mut seen = std::collections::HashSet::new();
            union.retain(|s| seen.insert(s.clone()));
            families.push(drop_dominated(union));
        }
        find_witness_in_families(g, &families)
    };
    let found = (0..q.len())
        .into_par_iter()
        .find_map_first(|idx| eval(idx).transpose().map(|r| (idx, r)));
    match found {
        Some((idx, r)) => Ok(SpgcResult {
            witness: Some(shrink_pgw(g, &r?)?),
            answer: Answer::Yes,
            stats: Stats { trials: 0, phi_enumerated: idx as u64 + 1 },
        }),
        None => Ok(SpgcResult {
            witness: None,
            answer: Answer::No,
            stats: Stats { trials: 0, phi_enumerated: q.len() as u64 },
        }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Randomized { trials: usize, seed: u64 },
    Deterministic { budget: u128 },
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Randomized { .. } => "rand",
            Mode::Deterministic { .. } => "det",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PgcResult {
    pub k: usize,
    pub answer: Answer,
    pub witness: Option<PartialGrundyWitness>,
    pub coloring: Option<Coloring>,
    pub stats: Stats,
    /// Number of bicliques handed to the SPGC solver.
    pub bicliques: usize,
    /// Degeneracy after biclique removal, when the SPGC solver ran.
    pub degeneracy: Option<usize>,
}

#[derive(Serialize)]
struct PgcJson<'a> {
    problem: &'static str,
    k: usize,
    answer: Answer,
    certificate: Option<Certificate>,
    coloring: Option<&'a [usize]>,
    stats: PgcStatsJson,
}

#[derive(Serialize)]
struct PgcStatsJson {
    trials: u64,
    phi_enumerated: u64,
    bicliques: usize,
    degeneracy: Option<usize>,
}

impl PgcResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PgcJson {
            problem: "pgc",
            k: self.k,
            answer: self.answer,
            certificate: self.witness.as_ref().map(PartialGrundyWitness::to_json),
            coloring: self.coloring.as_ref().map(Coloring::colors),
            stats: PgcStatsJson {
                trials: self.stats.trials,
                phi_enumerated: self.stats.phi_enumerated,
                bicliques: self.bicliques,
                degeneracy: self.degeneracy,
            },
        })
        .expect("serializable")
    }
}

fn dispatch(inst: &SpgcInstance, mode: Mode) -> Result<PgcResult> {
    let r = match mode {
        Mode::Randomized { trials, seed } => solve_spgc_randomized(inst, trials, seed)?,
        Mode::Deterministic { budget } => solve_spgc_deterministic(inst, budget)?,
    };
    let coloring = r.witness.as_ref().map(|w| pgw_to_coloring(&inst.g, w)).transpose()?;
    Ok(PgcResult {
        k: inst.k,
        answer: r.answer,
        witness: r.witness,
        coloring,
        stats: r.stats,
        bicliques: inst.ell(),
        degeneracy: Some(inst.d),
    })
}

/// Degree reduction, then SPGC on the resulting bicliques.
pub fn solve_pgc(g: &Graph, k: usize, mode: Mode) -> Result<PgcResult> {
    match degree_reduce(g, k)? {
        ReductionOutcome::Yes(c) => {
            let w = shrink_pgw(g, &coloring_to_pgw(g, &c, k)?)?;
            Ok(PgcResult {
                k,
                answer: Answer::Yes,
                witness: Some(w),
                coloring: Some(c),
                stats: Stats::default(),
                bicliques: 0,
                degeneracy: None,
            })
        }
        ReductionOutcome::Bicliques(d) => dispatch(&SpgcInstance::new(g.clone(), k, d.bicliques)?, mode),
    }
}

/// SPGC with no bicliques; suited to graphs of small degeneracy.
pub fn solve_pgc_degenerate(g: &Graph, k: usize, mode: Mode) -> Result<PgcResult> {
    dispatch(&SpgcInstance::new(g.clone(), k, Vec::new())?, mode)
}
