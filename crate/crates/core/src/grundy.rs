//! Grundy Coloring on K_{i,j}-free graphs: color coding plus a dynamic
//! program over Grundy-tree shapes with representative families.

use crate::bitset::VertexSet;
use crate::covering::build_universal_set;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::greedy::{is_grundy_coloring, Coloring};
use crate::oracle::oracle_has_kij;
use crate::pgc::{Answer, Mode, Stats};
use crate::rep::{is_chi_independent, star, LabelColoring, RepParams, Representer, SizeVector};
use crate::rng::stream;
use crate::witness::{find_grundy_witness, gamma, gw_to_coloring, verify_gw, Certificate, GrundyWitness};
use rand::Rng as _;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashSet;

/// Default guard on k.
pub const MAX_K: usize = 4;

/// q*_z: label counts of T_k after removing one subtree rooted at a z-node.
pub fn qstar_vector(k: usize, z: usize) -> Result<SizeVector> {
    if z == 0 || z > k {
        return Err(Error::InvalidParameter(format!("need 1 <= z <= k, got z={z}, k={k}")));
    }
    Ok(SizeVector(
        (1..=k)
            .map(|y| if y > z { gamma(k, y) } else { gamma(k, y) - gamma(z, y) })
            .collect(),
    ))
}

/// For each z and v ∈ X_z, the reduced family F'_{z,v}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyTable {
    pub k: usize,
    /// fams[z-1][v]; empty for v ∉ X_z.
    pub fams: Vec<Vec<Vec<VertexSet>>>,
}

impl FamilyTable {
    pub fn get(&self, z: usize, v: usize) -> &[VertexSet] {
        &self.fams[z - 1][v]
    }
}

fn union_into(out: &mut Vec<VertexSet>, seen: &mut HashSet<VertexSet>, sets: Vec<VertexSet>) {
    for s in sets {
        if seen.insert(s.clone()) {
            out.push(s);
        }
    }
}

/// Union over every q in the box below `upper` of the q-representatives.
fn reduce_box(rep: &mut Representer, f: &[VertexSet], p: usize, upper: &SizeVector) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for q in upper.box_below() {
        union_into(&mut out, &mut seen, rep.represent(f, p, &q)?);
    }
    Ok(out)
}

fn floor_sub(a: &SizeVector, b: &SizeVector) -> SizeVector {
    SizeVector(a.0.iter().zip(&b.0).map(|(x, y)| x.saturating_sub(*y)).collect())
}

/// Fills the table level by level. With `stop_at_top`, level k stops at
/// the first vertex whose family is non-empty.
fn fill(g: &Graph, chi: &LabelColoring, k: usize, params: RepParams, stop_at_top: bool) -> Result<FamilyTable> {
    let n = g.n();
    let mut rep = Representer::new(g, chi, params);
    let mut fams = vec![vec![Vec::new(); n]; k];
    for v in chi.class(1) {
        fams[0][v] = vec![VertexSet::singleton(n, v)];
    }
    let gamma_k = SizeVector((1..=k).map(|y| gamma(k, y)).collect());
    let qstars: Vec<SizeVector> = (1..=k).map(|z| qstar_vector(k, z)).collect::<Result<_>>()?;
    let size_limit = params.ln_alpha(1 << (k - 1)) * ((1usize << k) + 1) as f64;
    for z in 2..=k {
        let cap = 1usize << (z - 1);
        let mut e_z = SizeVector::zero(k);
        e_z.0[z - 1] = 1;
        for v in chi.class(z) {
            let mut fhat: Vec<VertexSet> = Vec::new();
            let mut removed = SizeVector::zero(k);
            for zp in 1..z {
                // F_{z,v,z'}: a z'-subtree below a neighbor u, plus v.
                let mut fz = Vec::new();
                let mut seen = HashSet::new();
                for u in g.neighbors(v).intersection(chi.class(zp)).iter() {
                    for w in &fams[zp - 1][u] {
                        let mut s = w.clone();
                        s.insert(v);
                        if s.len() <= cap && is_chi_independent(&s, chi, g) && seen.insert(s.clone()) {
                            fz.push(s);
                        }
                    }
                }
                let p = cap.min((1 << (zp - 1)) + 1);
                let reduced = reduce_box(&mut rep, &fz, p, &qstars[zp - 1])?;
                removed = SizeVector(
                    removed.0.iter().zip(&floor_sub(&gamma_k, &qstars[zp - 1]).0).map(|(a, b)| a + b).collect(),
                );
                let upper = floor_sub(&floor_sub(&gamma_k, &removed), &e_z);
                fhat = if zp == 1 {
                    reduced
                } else {
                    let combined = star(&fhat, &reduced, cap, chi, g);
                    reduce_box(&mut rep, &combined, cap, &upper)?
                };
                if fhat.is_empty() {
                    break;
                }
            }
            fhat.retain(|s| s.len() >= z && find_grundy_witness(g, s, z, Some(chi.labels())).is_some());
            if (fhat.len() as f64).ln() > size_limit {
                return Err(Error::Precondition(format!(
                    "family for (z={z}, v={v}) has {} sets, above the size bound",
                    fhat.len()
                )));
            }
            let found = !fhat.is_empty();
            fams[z - 1][v] = fhat;
            if stop_at_top && z == k && found {
                break;
            }
        }
    }
    Ok(FamilyTable { k, fams })
}

pub fn compute_families(g: &Graph, chi: &LabelColoring, k: usize, params: RepParams) -> Result<FamilyTable> {
    if chi.k() != k || chi.labels().len() != g.n() {
        return Err(Error::InvalidParameter("labeling does not match the graph and k".into()));
    }
    fill(g, chi, k, params, false)
}

/// Runs the DP for one labeling and returns a verified k-Grundy witness if
/// some v ∈ X_k has a non-empty family.
fn decide(g: &Graph, chi: &LabelColoring, k: usize, params: RepParams) -> Result<Option<GrundyWitness>> {
    let table = fill(g, chi, k, params, true)?;
    for v in chi.class(k) {
        if let Some(s) = table.get(k, v).first() {
            let w = find_grundy_witness(g, s, k, Some(chi.labels()))
                .ok_or_else(|| Error::Precondition("stored set lost its Grundy witness".into()))?;
            debug_assert!(verify_gw(g, &w));
            return Ok(Some(w));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrundyResult {
    pub k: usize,
    pub i: usize,
    pub j: usize,
    pub answer: Answer,
    pub witness: Option<GrundyWitness>,
    pub coloring: Option<Coloring>,
    pub stats: Stats,
}

#[derive(Serialize)]
struct GrundyJson<'a> {
    problem: &'static str,
    k: usize,
    i: usize,
    j: usize,
    answer: Answer,
    certificate: Option<Certificate>,
    coloring: Option<&'a [usize]>,
    stats: Stats,
}

impl GrundyResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GrundyJson {
            problem: "grundy",
            k: self.k,
            i: self.i,
            j: self.j,
            answer: self.answer,
            certificate: self.witness.as_ref().map(GrundyWitness::to_json),
            coloring: self.coloring.as_ref().map(Coloring::colors),
            stats: self.stats,
        })
        .expect("serializable")
    }
}

/// Decides Γ(g) ≥ k on a K_{i,j}-free graph. Freeness is checked by
/// subset enumeration when that is affordable and trusted otherwise.
pub fn solve_grundy_kij(g: &Graph, k: usize, i: usize, j: usize, mode: Mode) -> Result<GrundyResult> {
    solve_grundy_kij_with_limit(g, k, i, j, mode, MAX_K)
}

pub fn solve_grundy_kij_with_limit(
    g: &Graph,
    k: usize,
    i: usize,
    j: usize,
    mode: Mode,
    max_k: usize,
) -> Result<GrundyResult> {
    let params = RepParams::new(i, j, k)?;
    if k > max_k {
        return Err(Error::SizeGuard(format!("k = {k} exceeds the limit {max_k}")));
    }
    match oracle_has_kij(g, i, j) {
        Ok(true) => return Err(Error::NotKijFree { i, j }),
        Ok(false) | Err(Error::SizeGuard(_)) => {}
        Err(e) => return Err(e),
    }
    let n = g.n();
    let labeling = |f: Vec<u8>| LabelColoring::new(f.into_iter().map(|x| x as usize + 1).collect(), k);
    let (found, stats) = match mode {
        Mode::Randomized { trials, seed } => {
            if trials == 0 {
                return Err(Error::InvalidParameter("trials must be at least 1".into()));
            }
            let found = (0..trials).into_par_iter().find_map_first(|t| {
                let mut rng = stream(seed, "grundy", t as u64);
                let f: Vec<u8> = (0..n).map(|_| rng.random_range(0..k) as u8).collect();
                let chi = labeling(f).expect("labels in range");
                decide(g, &chi, k, params).transpose().map(|r| (t, r))
            });
            let count = found.as_ref().map_or(trials, |(t, _)| t + 1) as u64;
            (found, Stats { trials: count, phi_enumerated: count })
        }
        Mode::Deterministic { budget } => {
            if k > n {
                (None, Stats::default())
            } else {
                let fam = build_universal_set(n, 1 << (k - 1), k)?;
                if fam.len() as u128 > budget {
                    return Err(Error::BudgetExceeded { needed: fam.len() as u128, budget });
                }
                let found = (0..fam.len()).into_par_iter().find_map_first(|idx| {
                    let chi = labeling(fam.get(idx)).expect("labels in range");
                    if (1..=k).any(|z| chi.class(z).is_empty()) {
                        return None;
                    }
                    decide(g, &chi, k, params).transpose().map(|r| (idx, r))
                });
                let count = found.as_ref().map_or(fam.len(), |(idx, _)| idx + 1) as u64;
                (found, Stats { trials: 0, phi_enumerated: count })
            }
        }
    };
    let (answer, witness, coloring) = match found {
        Some((_, r)) => {
            let w = r?;
            let c = gw_to_coloring(g, &w)?;
            if c.num_colors() < k || !is_grundy_coloring(g, &c) {
                return Err(Error::Precondition("witness did not yield a Grundy coloring".into()));
            }
            (Answer::Yes, Some(w), Some(c))
        }
        None => {
            let a = if matches!(mode, Mode::Deterministic { .. }) { Answer::No } else { Answer::NoWitnessFound };
            (a, None, None)
        }
    };
    Ok(GrundyResult { k, i, j, answer, witness, coloring, stats })
}
