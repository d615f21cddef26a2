//! The exact tree solver: exhaustive agreement on small trees, certificate
//! reconstruction, and a large instance.
//!
//! Run with: cargo run -p irregulators --example trees

use std::time::Instant;

use irregulators::generators;
use irregulators::oracle;
use irregulators::tree_dp;

fn main() {
    // Every non-isomorphic tree up to 8 vertices against the exhaustive
    // solver.
    let mut checked = 0;
    for n in 1..=8 {
        for t in generators::all_free_trees(n) {
            let dp = tree_dp::ie_tree(&t).unwrap();
            let exact = oracle::solve_exact(&t).unwrap().value;
            assert_eq!(dp.value, exact);
            checked += 1;
        }
    }
    println!("checked all {checked} trees up to 8 vertices against the exhaustive solver");

    // A spider with three legs of three edges needs one deletion per leg.
    let spider = generators::star_subdivision(&[3, 3, 3]).unwrap();
    let result = tree_dp::ie_tree(&spider).unwrap();
    println!(
        "spider(3,3,3): {} deletions, certificate {:?}",
        result.value,
        result.certificate.to_file_pairs(&spider)
    );

    // Forests are solved per component.
    let forest = irregulators::graph::Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    println!(
        "two separate edges: {} deletions",
        tree_dp::ie_tree(&forest).unwrap().value
    );

    // The value never depends on the chosen root.
    let t = generators::random_tree(12, 3).unwrap();
    let reference = tree_dp::ie_tree(&t).unwrap().value;
    for root in 0..t.vertex_count() {
        assert_eq!(tree_dp::ie_tree_rooted(&t, root).unwrap().value, reference);
    }
    println!("re-rooting a 12-vertex tree at every vertex: always {reference}");

    // Scale: a random 100k-vertex tree.
    let big = generators::random_tree(100_000, 42).unwrap();
    let start = Instant::now();
    let result = tree_dp::ie_tree(&big).unwrap();
    println!(
        "random tree n=100000 (max degree {}): {} deletions in {:.2?}, certificate verified",
        big.max_degree(),
        result.value,
        start.elapsed()
    );
}
