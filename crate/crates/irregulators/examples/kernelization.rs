//! Shrinking an instance around its conflicts before searching.
//!
//! Run with: cargo run -p irregulators --example kernelization

use irregulators::generators;
use irregulators::graph::Graph;
use irregulators::kernel::{self, KernelStatus};
use irregulators::oracle;

/// Caterpillar with the requested spine degrees: wide, with conflicts only
/// where adjacent degrees coincide.
fn caterpillar(degrees: &[usize]) -> Graph {
    let l = degrees.len();
    let mut edges: Vec<(usize, usize)> = (0..l - 1).map(|i| (i, i + 1)).collect();
    let mut next = l;
    for (i, &d) in degrees.iter().enumerate() {
        let spine = if i == 0 || i == l - 1 { 1 } else { 2 };
        for _ in 0..d - spine {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::from_edges(next, edges).unwrap()
}

fn main() {
    // One planted conflict (the 4-4 spine pair) in a 44-vertex graph.
    let degrees = [3, 4, 3, 4, 3, 4, 3, 4, 4, 3, 4, 3, 4, 3, 4, 3];
    let g = caterpillar(&degrees);
    println!(
        "input: n={}, m={}, conflicts={}",
        g.vertex_count(),
        g.edge_count(),
        g.conflict_report().count()
    );

    let result = kernel::kernelize(&g, 1).unwrap();
    assert_eq!(result.status, KernelStatus::Kernel);
    let h = result.kernel.as_ref().unwrap();
    println!(
        "kernel at budget 1: n={} (kept {}, padding leaves {}), vertex ceiling {}",
        h.vertex_count(),
        result.stats.kept_vertices,
        result.added_leaves,
        result.stats.vertex_bound
    );

    // The kernel decides exactly like the input.
    for k in [1, 2] {
        let reduced = kernel::kernelize(&g, k).unwrap();
        let on_kernel = match reduced.status {
            KernelStatus::AlreadyIrregular => true,
            KernelStatus::NoInstance => false,
            KernelStatus::Kernel => oracle::decide(reduced.kernel.as_ref().unwrap(), k),
        };
        println!(
            "budget {k}: input decides {}, kernel decides {on_kernel}",
            oracle::decide(&g, k)
        );
        assert_eq!(oracle::decide(&g, k), on_kernel);
    }

    // Too many conflicts for the budget: rejected before any ball is built.
    let c6 = generators::cycle(6).unwrap();
    let res = kernel::kernelize(&c6, 1).unwrap();
    println!(
        "hexagon at budget 1: {:?} ({} conflicts, one deletion fixes at most {})",
        res.status,
        res.stats.conflict_edges,
        2 * c6.max_degree() - 1
    );

    // Already-irregular inputs short-circuit.
    let p3 = generators::path(3).unwrap();
    println!(
        "3-vertex path at budget 5: {:?}",
        kernel::kernelize(&p3, 5).unwrap().status
    );
}
