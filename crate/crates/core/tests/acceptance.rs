//! Acceptance run: one PASS/FAIL line per criterion. Pass criterion numbers
//! as arguments to run a subset.

mod common;

use common::*;
use grundy_core::covering::{build_covering_family, build_universal_set, sample_independent_cover, sampler_bound, CoveringMode};
use grundy_core::gen::{small_corpus, Model};
use grundy_core::graph::{degeneracy_ordering, Biclique};
use grundy_core::greedy::{first_fit, is_grundy_coloring, is_partial_grundy_coloring, last_fit};
use grundy_core::grundy::solve_grundy_kij;
use grundy_core::oracle::{oracle_grundy, oracle_grundy_orderings, oracle_partial_grundy};
use grundy_core::pgc::{solve_pgc, Answer, Mode, DEFAULT_BUDGET};
use grundy_core::reduction::{degree_reduce, one_sided_reduce, OneSidedOutcome, ReductionOutcome};
use grundy_core::rep::{grundy_representative, is_chi_independent, is_representative, LabelColoring, RepParams, Representer, SetFamily, SizeVector};
use grundy_core::rng::stream;
use grundy_core::witness::{
    build_grundy_tree, coloring_to_gw, coloring_to_pgw, gamma, gw_to_coloring, pgw_to_coloring, shrink_pgw, verify_gw,
    verify_pgw,
};
use grundy_core::{Error, Graph, VertexSet};
use rand::Rng as _;
use rayon::prelude::*;
use std::collections::HashSet;
use std::process::Command;
use std::time::{Duration, Instant};

const SEED: u64 = 2024;
const DET: Mode = Mode::Deterministic { budget: DEFAULT_BUDGET };

type Check = std::result::Result<String, String>;

struct Criterion {
    id: usize,
    name: &'static str,
    limit: Duration,
    run: fn() -> Check,
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

#[allow(clippy::redundant_closure)]
fn first_failure<T: Sync>(items: Vec<T>, f: impl Fn(&T) -> std::result::Result<(), String> + Sync) -> std::result::Result<(), String> {
    match items.par_iter().map(|x| f(x)).find_first(|r| r.is_err()) {
        Some(Err(e)) => Err(e),
        _ => Ok(()),
    }
}

fn c1_oracles() -> Check {
    let mut graphs = small_corpus(6).unwrap();
    graphs.extend(random_graphs(7, 150, SEED));
    graphs.extend(random_graphs(8, 150, SEED + 1));
    let count = graphs.len();
    first_failure(graphs, |g| {
        let a = oracle_grundy(g).unwrap();
        let b = oracle_grundy_orderings(g).unwrap();
        let p = oracle_partial_grundy(g).unwrap();
        ensure(a == b, || format!("Γ mismatch {a} vs {b} on {:?}", g.edges()))?;
        ensure(p >= a, || format!("∂Γ {p} < Γ {a} on {:?}", g.edges()))
    })?;
    Ok(format!("{count} graphs, both Γ formulations agree, ∂Γ ≥ Γ"))
}

fn c2_pgc() -> Check {
    let mut graphs = small_corpus(6).unwrap();
    graphs.extend(random_graphs(7, 300, SEED + 2));
    let count = graphs.len();
    first_failure(graphs, |g| {
        let truth = oracle_partial_grundy(g).unwrap();
        for k in 1..=g.n() {
            let r = solve_pgc(g, k, DET).map_err(|e| format!("k={k}: {e} on {:?}", g.edges()))?;
            let yes = r.answer == Answer::Yes;
            ensure(yes == (truth >= k), || format!("k={k}: answer {:?}, ∂Γ={truth}, edges {:?}", r.answer, g.edges()))?;
            if yes {
                let w = r.witness.as_ref().unwrap();
                let c = r.coloring.as_ref().unwrap();
                ensure(verify_pgw(g, w).is_some() && w.k() >= k, || "witness fails".into())?;
                ensure(is_partial_grundy_coloring(g, c) && c.num_colors() >= k, || "coloring fails".into())?;
            }
        }
        Ok(())
    })?;
    Ok(format!("{count} graphs, every k in [1, n], zero mismatches"))
}

fn biclique_ok(g: &Graph, b: &Biclique) -> bool {
    !b.left.is_empty()
        && !b.right.is_empty()
        && b.left.is_disjoint(&b.right)
        && b.left.iter().all(|u| b.right.iter().all(|v| g.has_edge(u, v)))
}

fn residual_masks(g: &Graph, bicliques: &[Biclique]) -> Vec<u64> {
    let mut adj = masks(g);
    for b in bicliques {
        for u in &b.left {
            for v in &b.right {
                adj[u] &= !(1 << v);
                adj[v] &= !(1 << u);
            }
        }
    }
    adj
}

fn c3_degree_reduction() -> Check {
    let cases: Vec<(Graph, usize)> = (0..1000u64)
        .map(|i| {
            let mut rng = stream(SEED, "c3", i);
            let n = rng.random_range(1..=60);
            let p = if i % 4 == 0 { rng.random_range(0.02..0.6) } else { rng.random_range(0.0..(3.0 / n as f64).min(1.0)) };
            let k = rng.random_range(1..=4);
            (Model::Gnp { n, p }.generate(SEED + i).unwrap(), k)
        })
        .collect();
    let (mut yes, mut bic) = (0, 0);
    for (g, k) in &cases {
        match degree_reduce(g, *k).map_err(|e| e.to_string())? {
            ReductionOutcome::Yes(c) => {
                yes += 1;
                ensure(is_partial_grundy_coloring(g, &c) && c.num_colors() >= *k, || "bad Yes coloring".into())?;
            }
            ReductionOutcome::Bicliques(d) => {
                bic += 1;
                let k3 = k * k * k;
                ensure(d.bicliques.len() <= 2 * k3, || format!("{} bicliques for k={k}", d.bicliques.len()))?;
                ensure(d.bicliques.iter().all(|b| biclique_ok(g, b)), || "invalid biclique".into())?;
                let maxdeg = residual_masks(g, &d.bicliques).iter().map(|m| m.count_ones() as usize).max().unwrap_or(0);
                ensure(maxdeg <= k3, || format!("residual degree {maxdeg} > {k3}"))?;
            }
        }
    }
    Ok(format!("1000 graphs ({yes} yes, {bic} biclique outcomes), all bounds hold"))
}

fn c4_one_sided() -> Check {
    let mut runs = 0;
    for i in 0..1000u64 {
        let mut rng = stream(SEED, "c4", i);
        let a = rng.random_range(1..=30);
        let b = rng.random_range(1..=30);
        let p = rng.random_range(0.05..0.9);
        let k = rng.random_range(1..=4);
        let g = Model::Bipartite { a, b, p }.generate(SEED + i).unwrap();
        let left = VertexSet::from_iter(a + b, 0..a);
        let right = VertexSet::from_iter(a + b, a..a + b);
        for (l, r) in [(&left, &right), (&right, &left)] {
            runs += 1;
            match one_sided_reduce(&g, l, r, k).map_err(|e| e.to_string())? {
                OneSidedOutcome::Yes(w) => ensure(verify_pgw(&g, &w).is_some() && w.k() >= k, || "bad witness".into())?,
                OneSidedOutcome::Bicliques(o) => {
                    let adj = masks(&g);
                    let p_all = o.q_classes.iter().fold(0u64, |m, q| m | mask_of(q));
                    for (idx, q) in o.q_classes.iter().enumerate() {
                        ensure(!q.is_empty() && independent(&adj, mask_of(q)), || format!("Q_{} not independent", idx + 1))?;
                        for (jdx, &xj) in o.x.iter().enumerate().take(idx) {
                            ensure(adj[xj] & mask_of(q) != 0, || format!("N(x_{}) misses Q_{}", jdx + 1, idx + 1))?;
                        }
                    }
                    for (jdx, bset) in o.b.iter().enumerate() {
                        let xj = o.x[jdx];
                        for v in bset {
                            ensure(adj[xj] & !p_all & !adj[v] == 0, || format!("B_{} vertex {v} misses N(x) \\ P", jdx + 1))?;
                            ensure(g.degree(v) <= g.degree(xj), || "degree order".into())?;
                        }
                    }
                    let all = o.all();
                    ensure(all.iter().all(|b| biclique_ok(&g, b)), || "invalid biclique".into())?;
                    let res = residual_masks(&g, &all);
                    ensure(l.iter().all(|v| res[v].count_ones() as usize <= k * k), || "residual degree > k²".into())?;
                }
            }
        }
    }
    Ok(format!("{runs} one-sided runs, processed-side invariants and residual bound hold"))
}

fn c5_sampler() -> Check {
    const TRIALS: u64 = 100_000;
    let mut pairs = Vec::new();
    let mut i = 0u64;
    while pairs.len() < 24 {
        let mut rng = stream(SEED, "c5", i);
        i += 1;
        let n = rng.random_range(6..=14);
        let d = rng.random_range(1..=2);
        let g = Model::Degenerate { n, d }.generate(SEED + i).unwrap();
        let k = rng.random_range(1..=3);
        let adj = masks(&g);
        let cands: Vec<u64> = subsets_of_size(n, k).into_iter().filter(|&x| independent(&adj, x)).collect();
        if cands.is_empty() {
            continue;
        }
        let x = cands[rng.random_range(0..cands.len())];
        pairs.push((g, x, k));
    }
    let results: Vec<std::result::Result<f64, String>> = pairs
        .par_iter()
        .enumerate()
        .map(|(idx, (g, x, k))| {
            let ord = degeneracy_ordering(g);
            let mut rng = stream(SEED, "c5-trials", idx as u64);
            let hits = (0..TRIALS).filter(|_| x & !mask_of(&sample_independent_cover(g, &ord, &mut rng)) == 0).count();
            let phat = hits as f64 / TRIALS as f64;
            let se = (phat * (1.0 - phat) / TRIALS as f64).sqrt();
            let bound = sampler_bound(*k, ord.d);
            ensure(phat >= bound - 3.0 * se, || format!("pair {idx}: {phat:.5} < bound {bound:.5} - 3·{se:.5}"))?;
            Ok(phat / bound)
        })
        .collect();
    let mut worst = f64::INFINITY;
    for r in results {
        worst = worst.min(r?);
    }
    Ok(format!("{} pairs × {TRIALS} trials, min empirical/bound = {worst:.2}", pairs.len()))
}

fn c6_covering() -> Check {
    let mut graphs = small_corpus(6).unwrap();
    for n in 7..=12 {
        graphs.extend(random_graphs(n, 20, SEED + n as u64));
        for s in 0..5 {
            graphs.push(Model::Degenerate { n, d: 2 }.generate(SEED + 100 * n as u64 + s).unwrap());
        }
    }
    let count = graphs.len();
    first_failure(graphs.into_iter().enumerate().collect(), |(idx, g)| {
        let adj = masks(g);
        for k in 1..=3 {
            let mut rng = stream(SEED, "c6", *idx as u64 * 4 + k as u64);
            let fam = build_covering_family(g, k, CoveringMode::DEFAULT_CERTIFIED, &mut rng).map_err(|e| e.to_string())?;
            let members: Vec<u64> = fam.sets.iter().map(mask_of).collect();
            ensure(members.iter().all(|&m| independent(&adj, m)), || "member not independent".into())?;
            for size in 0..=k.min(g.n()) {
                for x in subsets_of_size(g.n(), size) {
                    if independent(&adj, x) {
                        ensure(members.iter().any(|&m| x & !m == 0), || format!("set {x:b} uncovered, k={k}"))?;
                    }
                }
            }
        }
        Ok(())
    })?;
    Ok(format!("{count} graphs, k ≤ 3, coverage re-verified"))
}

fn c7_universal() -> Check {
    let mut combos = Vec::new();
    for n in 1..=12 {
        for p in 1..=3.min(n) {
            for q in 1..=3 {
                combos.push((n, p, q));
            }
        }
    }
    let count = combos.len();
    first_failure(combos, |&(n, p, q)| {
        let fam = build_universal_set(n, p, q).map_err(|e| format!("({n},{p},{q}): {e}"))?;
        let fs: Vec<Vec<u8>> = fam.iter().collect();
        ensure(fs.iter().all(|f| f.len() == n && f.iter().all(|&x| (x as usize) < q)), || "bad function".into())?;
        let want = q.pow(p as u32);
        for s in subsets_of_size(n, p) {
            let pos: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
            let seen: HashSet<usize> = fs.iter().map(|f| pos.iter().fold(0, |acc, &v| acc * q + f[v] as usize)).collect();
            ensure(seen.len() == want, || format!("({n},{p},{q}): subset {s:b} sees {} of {want}", seen.len()))?;
        }
        Ok(())
    })?;
    Ok(format!("{count} (n, p, q) triples exhaustively covered"))
}

/// Independent representation check: B ranges over all per-label subsets of size q_z.
fn represents_brute(sub: &[VertexSet], f: &[VertexSet], q: &SizeVector, labels: &[usize], adj: &[u64]) -> bool {
    let k = q.0.len();
    let class: Vec<u64> = (1..=k).map(|z| (0..labels.len()).filter(|&v| labels[v] == z).fold(0u64, |m, v| m | 1 << v)).collect();
    let chi_indep = |x: u64| (0..adj.len()).all(|v| x >> v & 1 == 0 || adj[v] & x & class[labels[v] - 1] == 0);
    let mut bs = vec![0u64];
    for z in 0..k {
        let opts: Vec<u64> = subsets_of_size(adj.len(), q.0[z]).into_iter().filter(|&s| s & !class[z] == 0).collect();
        bs = bs.iter().flat_map(|&b| opts.iter().map(move |&s| b | s)).collect();
    }
    let fm: Vec<u64> = f.iter().map(mask_of).collect();
    let sm: Vec<u64> = sub.iter().map(mask_of).collect();
    bs.iter().all(|&b| !fm.iter().any(|&a| chi_indep(a | b)) || sm.iter().any(|&a| chi_indep(a | b)))
}

fn c8_representatives() -> Check {
    let mut case2 = 0;
    let mut checked = 0;
    let mut i = 0u64;
    while checked < 1000 {
        let mut rng = stream(SEED, "c8", i);
        i += 1;
        let n = rng.random_range(4..=10);
        let g = random_c4_free(n, SEED, i);
        let k = rng.random_range(1..=3);
        let labels: Vec<usize> = (0..n).map(|_| rng.random_range(1..=k)).collect();
        let chi = LabelColoring::new(labels.clone(), k).unwrap();
        let p = rng.random_range(1..=3);
        let mut q = SizeVector::zero(k);
        for _ in 0..rng.random_range(0..=3) {
            let z = rng.random_range(0..k);
            q.0[z] += 1;
        }
        let mut sets = Vec::new();
        let mut seen = HashSet::new();
        for _ in 0..400 {
            if sets.len() >= 40 {
                break;
            }
            let size = rng.random_range(1..=p.min(n));
            let s = VertexSet::from_iter(n, rand::seq::index::sample(&mut rng, n, size));
            if is_chi_independent(&s, &chi, &g) && seen.insert(s.clone()) {
                sets.push(s);
            }
        }
        let f = SetFamily::new(sets, p, &chi, &g).map_err(|e| e.to_string())?;
        // Odd instances use the tightest budget, which makes η small enough for heavy-vertex splitting.
        let params = if i.is_multiple_of(2) {
            RepParams::with_budget(2, 2, k, (1 << k).max(p + q.sum())).unwrap()
        } else {
            RepParams::with_budget(2, 2, k, p + q.sum()).unwrap()
        };
        let mut rep = Representer::new(&g, &chi, params);
        let out = match rep.represent(&f.sets, f.p, &q) {
            Ok(sets) => SetFamily { sets, p },
            Err(Error::Precondition(m)) => return Err(format!("heavy-set bound violated: {m}")),
            Err(e) => return Err(e.to_string()),
        };
        if rep.stats.case2 > 0 {
            case2 += 1;
        }
        let oneshot = grundy_representative(&f, &q, params, &chi, &g).map_err(|e| e.to_string())?;
        ensure(oneshot == out, || "one-shot wrapper differs".into())?;
        ensure(out.sets.iter().all(|s| f.sets.contains(s)), || "not a subfamily".into())?;
        let bound = (2 * p + q.sum()) as f64 * params.ln_alpha(p);
        ensure((out.sets.len() as f64).ln() <= bound, || format!("size {} above α bound", out.sets.len()))?;
        let lib = is_representative(&out.sets, &f.sets, &q, &chi, &g).map_err(|e| e.to_string())?;
        let brute = represents_brute(&out.sets, &f.sets, &q, &labels, &masks(&g));
        ensure(lib && brute, || format!("not representative (lib {lib}, brute {brute}) on instance {i}"))?;
        checked += 1;
    }
    Ok(format!("{checked} instances ({case2} reaching the heavy-vertex case), all representative and within bounds"))
}

fn c9_grundy() -> Check {
    let mut graphs: Vec<Graph> = small_corpus(6).unwrap().into_iter().filter(|g| !has_c4(g)).collect();
    let small = graphs.len();
    for idx in 0..50 {
        graphs.push(random_c4_free(7, SEED + 7, idx));
        graphs.push(random_c4_free(8, SEED + 8, idx));
    }
    let count = graphs.len();
    first_failure(graphs, |g| {
        let truth = oracle_grundy(g).unwrap();
        for k in 1..=3 {
            let r = solve_grundy_kij(g, k, 2, 2, DET).map_err(|e| format!("k={k}: {e} on {:?}", g.edges()))?;
            let yes = r.answer == Answer::Yes;
            ensure(yes == (truth >= k), || format!("k={k}: answer {:?}, Γ={truth}, edges {:?}", r.answer, g.edges()))?;
            if yes {
                ensure(verify_gw(g, r.witness.as_ref().unwrap()), || "witness fails".into())?;
                let c = r.coloring.as_ref().unwrap();
                ensure(is_grundy_coloring(g, c) && c.num_colors() >= k, || "coloring fails".into())?;
            }
        }
        Ok(())
    })?;
    Ok(format!("{count} C_4-free graphs ({small} from the n ≤ 6 corpus), k ≤ 3, zero mismatches"))
}

fn c10_tree_counts() -> Check {
    for k in 1..=16 {
        let t = build_grundy_tree(k).map_err(|e| e.to_string())?;
        ensure(t.len() == 1 << (k - 1), || format!("|T_{k}| = {}", t.len()))?;
        let counts = t.label_counts();
        for z in 1..=k {
            let want = if z == k { 1 } else { 1 << (k - z - 1) };
            ensure(counts[z - 1] == want && gamma(k, z) == want, || format!("γ_{{{k},{z}}} = {}", counts[z - 1]))?;
        }
    }
    Ok("k ≤ 16, node and label counts exact".into())
}

fn c11_round_trips() -> Check {
    let graphs = small_corpus(6).unwrap();
    let count = graphs.len();
    first_failure(graphs.into_iter().enumerate().collect(), |(idx, g)| {
        let n = g.n();
        let mut rng = stream(SEED, "c11", *idx as u64);
        let mut orders = vec![(0..n).collect::<Vec<_>>(), (0..n).rev().collect()];
        for _ in 0..6 {
            let mut o: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                o.swap(i, rng.random_range(0..=i));
            }
            orders.push(o);
        }
        for o in &orders {
            let c = first_fit(g, o);
            let k = c.num_colors();
            let w = coloring_to_gw(g, &c, k).map_err(|e| e.to_string())?;
            ensure(verify_gw(g, &w), || "GW from coloring fails".into())?;
            let back = gw_to_coloring(g, &w).map_err(|e| e.to_string())?;
            ensure(is_grundy_coloring(g, &back) && back.num_colors() >= k, || "GW round trip lost colors".into())?;

            let lc = last_fit(g, o);
            let k = lc.num_colors();
            let pw = coloring_to_pgw(g, &lc, k).map_err(|e| e.to_string())?;
            let pc = pgw_to_coloring(g, &pw).map_err(|e| e.to_string())?;
            ensure(is_partial_grundy_coloring(g, &pc) && pc.num_colors() >= k, || "PGW round trip lost colors".into())?;
            let s = shrink_pgw(g, &pw).map_err(|e| e.to_string())?;
            ensure(verify_pgw(g, &s).is_some() && s.k() == k, || "shrunk witness fails".into())?;
            for (i, x) in s.classes.iter().enumerate() {
                ensure(x.len() <= k - i, || format!("|X_{}| = {} > {}", i + 1, x.len(), k - i))?;
            }
        }
        Ok(())
    })?;
    Ok(format!("{count} graphs, 8 orderings each"))
}

fn strip_millis(s: &str) -> String {
    let mut v: serde_json::Value = match serde_json::from_str(s) {
        Ok(v) => v,
        Err(_) => return s.to_string(),
    };
    if let Some(stats) = v.get_mut("stats").and_then(|x| x.as_object_mut()) {
        stats.remove("millis");
    }
    v.to_string()
}

fn c12_determinism() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let write = |name: &str, model: &str, seed: u64| {
        let g = model.parse::<Model>().unwrap().generate(seed).unwrap();
        let path = dir.path().join(name);
        std::fs::write(&path, grundy_core::io::to_dimacs(&g)).unwrap();
        path.to_string_lossy().into_owned()
    };
    let dense = write("dense.col", "gnp:9,0.5", 3);
    let sparse = write("sparse.col", "degenerate:14,2", 5);
    let c4free = dir.path().join("c4free.col");
    std::fs::write(&c4free, grundy_core::io::to_dimacs(&random_c4_free(8, SEED, 1))).unwrap();
    let c4free = c4free.to_string_lossy().into_owned();
    let invocations: Vec<Vec<String>> = [
        vec!["pgc", &dense, "--k", "4", "--mode", "det"],
        vec!["pgc", &dense, "--k", "4", "--mode", "rand", "--trials", "200"],
        vec!["pgc", &sparse, "--k", "3", "--mode", "rand", "--trials", "50", "--seed", "7", "--degenerate"],
        vec!["grundy", &c4free, "--k", "3", "--mode", "det"],
        vec!["grundy", &c4free, "--k", "3", "--mode", "rand", "--trials", "300"],
        vec!["oracle", &dense],
        vec!["gen", "gnp:12,0.3", "--seed", "11"],
    ]
    .iter()
    .map(|v| v.iter().map(|s| s.to_string()).collect())
    .collect();
    let bin = env!("CARGO_BIN_EXE_grundy");
    for args in &invocations {
        let mut outputs = Vec::new();
        for threads in ["1", "1", "2", "4"] {
            let out = Command::new(bin).args(args).args(["--threads", threads].iter().filter(|_| args[0] != "oracle" && args[0] != "gen")).output().map_err(|e| e.to_string())?;
            ensure(out.status.code().is_some_and(|c| c < 2), || format!("{args:?} failed: {}", String::from_utf8_lossy(&out.stderr)))?;
            outputs.push(strip_millis(&String::from_utf8_lossy(&out.stdout)));
        }
        ensure(outputs.windows(2).all(|w| w[0] == w[1]), || format!("{args:?} differs across runs/threads"))?;
    }
    Ok(format!("{} invocations × 4 runs (threads 1, 1, 2, 4) byte-identical", invocations.len()))
}

fn main() {
    let criteria = [
        Criterion { id: 1, name: "oracle cross-validation", limit: Duration::from_secs(120), run: c1_oracles },
        Criterion { id: 2, name: "partial Grundy completeness", limit: Duration::from_secs(600), run: c2_pgc },
        Criterion { id: 3, name: "degree reduction guarantees", limit: Duration::from_secs(120), run: c3_degree_reduction },
        Criterion { id: 4, name: "one-sided reduction invariants", limit: Duration::from_secs(60), run: c4_one_sided },
        Criterion { id: 5, name: "sampler bound", limit: Duration::from_secs(60), run: c5_sampler },
        Criterion { id: 6, name: "covering-family certification", limit: Duration::from_secs(60), run: c6_covering },
        Criterion { id: 7, name: "universal-set coverage", limit: Duration::from_secs(60), run: c7_universal },
        Criterion { id: 8, name: "Grundy-representative correctness", limit: Duration::from_secs(300), run: c8_representatives },
        Criterion { id: 9, name: "Grundy solver completeness", limit: Duration::from_secs(900), run: c9_grundy },
        Criterion { id: 10, name: "Grundy tree counts", limit: Duration::from_secs(1), run: c10_tree_counts },
        Criterion { id: 11, name: "witness round trips", limit: Duration::from_secs(60), run: c11_round_trips },
        Criterion { id: 12, name: "CLI determinism", limit: Duration::from_secs(300), run: c12_determinism },
    ];
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for c in criteria.iter().filter(|c| only.is_empty() || only.contains(&c.id)) {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if elapsed <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; over time limit")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} criterion {:>2} {}: {} [{:.2}s, limit {}s]",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            detail,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
