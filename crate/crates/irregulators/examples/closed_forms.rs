//! Constant-time formulas cross-checked against the exhaustive solver.
//!
//! Run with: cargo run -p irregulators --example closed_forms

use irregulators::closed_forms::{
    self, build_t_k, ie_complete_bipartite, ie_complete_triangular, ie_cycle, ie_path,
    max_irregular_edges, path_certificate, triangular_index,
};
use irregulators::generators;
use irregulators::oracle;

fn main() {
    println!("paths and cycles (formula = exhaustive):");
    for n in 2..=12 {
        let formula = ie_path(n).unwrap();
        let exact = oracle::solve_exact(&generators::path(n).unwrap())
            .unwrap()
            .value;
        assert_eq!(formula, exact);
        let cycle = if n >= 3 {
            format!("{}", ie_cycle(n).unwrap())
        } else {
            "-".into()
        };
        println!("  n={n:<3} path {formula}  cycle {cycle}");
    }

    // The path certificate deletes every third edge, plus the last edge
    // when one trailing edge would remain.
    let cert = path_certificate(8);
    println!(
        "\nP8 certificate (edge ids from one end): {:?}",
        cert.as_slice()
    );

    println!("\ncomplete bipartite:");
    for (a, b) in [(2, 3), (3, 3), (4, 4), (1, 1)] {
        let (value, _) = ie_complete_bipartite(a, b).unwrap();
        println!("  K{{{a},{b}}} -> {value}");
    }

    println!("\nlayered dense locally irregular graphs:");
    for k in 1..=6 {
        let g = build_t_k(k).unwrap();
        assert!(g.is_locally_irregular());
        println!(
            "  k={k}: order {:<3} edges {:<4} (formula {})",
            g.vertex_count(),
            g.edge_count(),
            max_irregular_edges(k)
        );
    }

    println!("\ncomplete graphs of triangular order:");
    for n in [3, 6, 10] {
        let k = triangular_index(n).unwrap();
        let (value, cert) = ie_complete_triangular(n).unwrap();
        let g = generators::complete(n).unwrap();
        let reduced = g.delete_edges(&cert).unwrap();
        assert!(reduced.is_locally_irregular());
        println!("  K{n} (k={k}): delete {value} of {} edges", g.edge_count());
    }
    assert!(closed_forms::ie_complete_triangular(7).is_err());
    println!("  K7 has no closed form here (7 is not triangular); the solver falls back");
}
