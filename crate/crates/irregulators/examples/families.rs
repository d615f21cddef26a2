//! A tour of the built-in graph families.
//!
//! Run with: cargo run -p irregulators --example families

use irregulators::generators::{self, FamilySpec};

fn main() {
    let specs = vec![
        FamilySpec::Path { n: 10 },
        FamilySpec::Cycle { n: 9 },
        FamilySpec::Complete { n: 6 },
        FamilySpec::CompleteBipartite { a: 3, b: 4 },
        FamilySpec::StarSubdivision {
            legs: vec![3, 3, 3],
        },
        FamilySpec::BistarSubdivision {
            legs_a: vec![2, 2],
            legs_b: vec![1, 1, 1],
            bridge: 2,
        },
        FamilySpec::RandomTree { n: 14, seed: 7 },
        FamilySpec::RandomConnected {
            n: 12,
            p: 0.3,
            seed: 7,
        },
        FamilySpec::DoubleSubdivision {
            base: Box::new(FamilySpec::Complete { n: 4 }),
        },
        FamilySpec::Figure1,
        FamilySpec::TriangularLayered { k: 4 },
    ];

    println!(
        "{:<55} {:>4} {:>4} {:>3} {:>5} {:>10}",
        "family", "n", "m", "max", "conf", "irregular"
    );
    for spec in &specs {
        let g = generators::gen(spec).expect("valid parameters");
        println!(
            "{:<55} {:>4} {:>4} {:>3} {:>5} {:>10}",
            spec.to_string(),
            g.vertex_count(),
            g.edge_count(),
            g.max_degree(),
            g.conflict_report().count(),
            g.is_locally_irregular()
        );
    }

    // Tripling each edge of a triangle closes into a 9-cycle.
    let tripled = generators::double_subdivision(&generators::complete(3).unwrap());
    println!(
        "\ndouble subdivision of the triangle: n={}, every degree {:?}",
        tripled.vertex_count(),
        tripled.degrees().first().unwrap()
    );

    // Seeded generators are reproducible.
    let a = generators::random_tree(30, 5).unwrap();
    let b = generators::random_tree(30, 5).unwrap();
    assert_eq!(a, b);
    println!("random_tree(n=30, seed=5) is reproducible");
}
