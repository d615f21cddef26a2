//! The automatic dispatch: structural recognition first, then the cheapest
//! applicable exact solver, finally a verified bound range.
//!
//! Run with: cargo run -p irregulators --example auto_solve

use irregulators::generators::{self, FamilySpec};
use irregulators::harness::{self, AutoSolve, SolveConfig};

fn main() {
    let config = SolveConfig::standard_suite();
    let specs = vec![
        FamilySpec::Path { n: 100 },
        FamilySpec::Cycle { n: 31 },
        FamilySpec::CompleteBipartite { a: 4, b: 4 },
        FamilySpec::Complete { n: 10 },
        FamilySpec::RandomTree { n: 5000, seed: 11 },
        FamilySpec::Figure1,
        FamilySpec::DoubleSubdivision {
            base: Box::new(FamilySpec::Complete { n: 4 }),
        },
        FamilySpec::RandomConnected {
            n: 14,
            p: 0.3,
            seed: 4,
        },
    ];

    println!("{:<42} {:>6} {:<10} notes", "instance", "value", "method");
    for spec in &specs {
        let g = generators::gen(spec).unwrap();
        match harness::solve_auto_with(&g, &config).unwrap() {
            AutoSolve::Exact(r) => {
                assert!(g
                    .delete_edges(&r.certificate)
                    .unwrap()
                    .is_locally_irregular());
                println!(
                    "{:<42} {:>6} {:<10} certificate verified",
                    spec.to_string(),
                    r.value,
                    r.method.as_str()
                );
            }
            AutoSolve::Range { lower, upper, .. } => {
                println!(
                    "{:<42} {:>6} {:<10} bounds only",
                    spec.to_string(),
                    format!("{lower}..{upper}"),
                    "bounds"
                );
            }
        }
    }

    // A graph too entangled for the exact stages under tiny caps still
    // produces a verified range instead of failing.
    let dense = generators::random_connected(30, 0.5, 9).unwrap();
    let tight = SolveConfig {
        oracle: irregulators::oracle::SearchLimits {
            max_candidates: 8,
            max_subset: 4,
        },
        vc: irregulators::vc::VcLimits { core_edge_cap: 4 },
    };
    if let AutoSolve::Range {
        lower,
        upper,
        upper_source,
        ..
    } = harness::solve_auto_with(&dense, &tight).unwrap()
    {
        println!(
            "\ndense n=30 under tiny caps: verified range [{lower}, {upper}] via {upper_source}"
        );
    }
}
