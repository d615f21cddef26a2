//! Shared test support: an unpruned brute-force reference solver and small
//! instance generators. The brute force enumerates subsets of *all* edges,
//! so it stays independent of the candidate pruning it is used to check.

#![allow(dead_code)]

use irregulators::graph::{EdgeSet, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Is there a deletion set of size at most `k`? Enumerates every subset of
/// the full edge set in increasing size, lexicographic within a size.
pub fn brute_decide(g: &Graph, k: usize) -> bool {
    brute_witness(g, k).is_some()
}

/// Smallest (then lexicographically smallest) witnessing subset of size at
/// most `k`, over all edges, without any pruning.
pub fn brute_witness(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let m = g.edge_count();
    let mut chosen = Vec::new();
    for size in 0..=k.min(m) {
        if search(g, 0, size, &mut chosen) {
            return Some(chosen);
        }
    }
    None
}

/// Exact minimum with its witness, by exhausting sizes upward.
pub fn brute_solve(g: &Graph) -> (usize, Vec<usize>) {
    for size in 0..=g.edge_count() {
        let mut chosen = Vec::new();
        if search(g, 0, size, &mut chosen) {
            return (size, chosen);
        }
    }
    unreachable!("deleting every edge always works");
}

fn search(g: &Graph, from: usize, remaining: usize, chosen: &mut Vec<usize>) -> bool {
    if remaining == 0 {
        return deletion_is_irregular(g, chosen);
    }
    let m = g.edge_count();
    if m - from < remaining {
        return false;
    }
    for e in from..=m - remaining {
        chosen.push(e);
        if search(g, e + 1, remaining - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn deletion_is_irregular(g: &Graph, deleted: &[usize]) -> bool {
    let mut deg = g.degrees();
    for &e in deleted {
        let (u, v) = g.endpoints(e);
        deg[u] -= 1;
        deg[v] -= 1;
    }
    g.edges()
        .iter()
        .enumerate()
        .all(|(id, &(u, v))| deleted.contains(&id) || deg[u as usize] != deg[v as usize])
}

pub fn assert_valid_certificate(g: &Graph, set: &EdgeSet, expected_size: usize) {
    assert_eq!(set.len(), expected_size, "certificate size");
    let reduced = g.delete_edges(set).expect("valid ids");
    assert!(reduced.is_locally_irregular(), "certificate must verify");
}

/// All labelled graphs on `n` vertices whose edge mask makes them connected.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Seeded random connected graph via rejection on an edge-probability draw.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    irregulators::generators::random_connected(n, p, seed).expect("connected sample")
}

/// Random connected graph whose minimum vertex cover has size at most
/// `cover_size`: all edges stay incident to a fixed small set.
pub fn random_small_cover_graph(n: usize, cover_size: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        // Edges inside the would-be cover.
        for u in 0..cover_size {
            for v in u + 1..cover_size {
                if rng.gen_bool(0.4) {
                    edges.push((u, v));
                }
            }
        }
        // Edges from the cover to the rest.
        for u in 0..cover_size {
            for v in cover_size..n {
                if rng.gen_bool(0.45) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}
