//! Lower bounds and constructive upper bounds when exact search is off the
//! table.
//!
//! Run with: cargo run -p irregulators --example bounds

use irregulators::bounds::{
    bipartite_deg1_irregulator, bound_report, conflict_lower_bound, maxcut_irregulator,
};
use irregulators::generators;

fn main() {
    // The conflict-count bound, and the graph where it is tight.
    let fig = generators::figure1();
    println!(
        "figure1: {} conflicts, max degree {}, lower bound {} (tight: the true value is 1)",
        fig.conflict_report().count(),
        fig.max_degree(),
        conflict_lower_bound(&fig)
    );
    let k33 = generators::complete_bipartite(3, 3).unwrap();
    println!(
        "K{{3,3}}: lower bound {} against true value 3",
        conflict_lower_bound(&k33)
    );

    // Parity-driven deletions on a pendant bipartite graph.
    let p4 = generators::path(4).unwrap();
    let s = bipartite_deg1_irregulator(&p4).unwrap();
    println!(
        "\n4-vertex path: parity procedure deletes {:?} (bound n-1 = 3)",
        s.to_file_pairs(&p4)
    );

    // Cut-based deletions on an arbitrary connected graph.
    let g = generators::random_connected(20, 0.25, 11).unwrap();
    let s = maxcut_irregulator(&g).unwrap();
    let cap = g.edge_count() / 2 + g.vertex_count() + g.max_degree() - 2;
    println!(
        "random n=20: cut procedure deletes {} of {} edges (bound {cap}); verified",
        s.len(),
        g.edge_count()
    );
    assert!(g.delete_edges(&s).unwrap().is_locally_irregular());

    // The assembled report picks the best verified witness.
    for seed in [1, 2, 3] {
        let g = generators::random_connected(16, 0.3, seed).unwrap();
        let report = bound_report(&g).unwrap();
        println!(
            "random n=16 seed={seed}: [{}, {}] lower via {}, upper via {} (gap {})",
            report.lower,
            report.upper,
            report.lower_source,
            report.upper_source,
            report.gap()
        );
    }
}
