//! The exhaustive solver on small named graphs, with certificates.
//!
//! Run with: cargo run -p irregulators --example exact_small

use irregulators::generators;
use irregulators::graph::Graph;
use irregulators::oracle::{self, SearchLimits};

fn solve_and_print(label: &str, g: &Graph) {
    let limits = SearchLimits {
        max_candidates: 36,
        ..SearchLimits::default()
    };
    let result = oracle::solve_exact_with(g, &limits).expect("within caps");
    let pairs = result.certificate.to_file_pairs(g);
    println!(
        "{label:<10} n={:<3} m={:<3} minimum deletions {} via {:?}",
        g.vertex_count(),
        g.edge_count(),
        result.value,
        pairs
    );
    let reduced = g.delete_edges(&result.certificate).unwrap();
    assert!(reduced.is_locally_irregular());
}

fn main() {
    solve_and_print("K2", &generators::path(2).unwrap());
    solve_and_print("P3", &generators::path(3).unwrap());
    solve_and_print("C4", &generators::cycle(4).unwrap());
    solve_and_print("K3", &generators::complete(3).unwrap());
    solve_and_print("C9", &generators::cycle(9).unwrap());
    solve_and_print("K6", &generators::complete(6).unwrap());
    solve_and_print("K{3,3}", &generators::complete_bipartite(3, 3).unwrap());

    // The 32-vertex witness where the conflict-count lower bound is tight:
    // one conflict, maximum degree 5, and indeed a single deletion fixes it.
    let fig = generators::figure1();
    solve_and_print("figure1", &fig);

    // Budgets can be decided without solving outright.
    let k6 = generators::complete(6).unwrap();
    println!(
        "K6 admits 3 deletions? {}   4 deletions? {}",
        oracle::decide(&k6, 3),
        oracle::decide(&k6, 4)
    );

    // The candidate pool keeps the search near the conflicts.
    let cands = oracle::candidate_edges(&fig, 1);
    println!(
        "figure1 candidate pool at budget 1: {} of {} edges",
        cands.len(),
        fig.edge_count()
    );
}
