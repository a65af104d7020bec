//! Test-side helpers on raw adjacency masks, kept apart from the library.
#![allow(dead_code)]

use grundy_core::gen::random_graph;
use grundy_core::rng::stream;
use grundy_core::{Graph, VertexSet};
use rand::Rng as _;

pub fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u64, |m, u| m | 1 << u)).collect()
}

pub fn mask_of(s: &VertexSet) -> u64 {
    s.iter().fold(0u64, |m, v| m | 1 << v)
}

pub fn independent(adj: &[u64], x: u64) -> bool {
    (0..adj.len()).all(|v| x >> v & 1 == 0 || adj[v] & x == 0)
}

/// Two vertices with two common neighbors.
pub fn has_c4(g: &Graph) -> bool {
    let adj = masks(g);
    (0..adj.len()).any(|u| (u + 1..adj.len()).any(|v| (adj[u] & adj[v]).count_ones() >= 2))
}

/// Random C_4-free graph: random edges inserted while they keep the graph C_4-free.
pub fn random_c4_free(n: usize, seed: u64, index: u64) -> Graph {
    let mut rng = stream(seed, "c4free", index);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    for i in (1..pairs.len()).rev() {
        pairs.swap(i, rng.random_range(0..=i));
    }
    let target = rng.random_range(0..=pairs.len());
    let mut adj = vec![0u64; n];
    let mut edges = Vec::new();
    for &(u, v) in pairs.iter().take(target) {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        let bad = (0..n).any(|a| (a + 1..n).any(|b| (adj[a] & adj[b]).count_ones() >= 2));
        if bad {
            adj[u] &= !(1 << v);
            adj[v] &= !(1 << u);
        } else {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    (0..count as u64).map(|i| random_graph(n, seed, i)).collect()
}

/// Every subset of [n] with exactly `size` elements, as masks.
pub fn subsets_of_size(n: usize, size: usize) -> Vec<u64> {
    (0u64..1 << n).filter(|m| m.count_ones() as usize == size).collect()
}

/// Graphs on 0..=max_n vertices with each pair present independently.
pub fn arb_graph(max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// A graph together with a permutation of its vertices.
pub fn arb_graph_and_order(max_n: usize) -> impl proptest::strategy::Strategy<Value = (Graph, Vec<usize>)> {
    use proptest::prelude::*;
    arb_graph(max_n).prop_flat_map(|g| {
        let order: Vec<usize> = (0..g.n()).collect();
        (Just(g), Just(order).prop_shuffle())
    })
}
