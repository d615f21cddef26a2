//! End-to-end acceptance suite. Each test prints one PASS/FAIL line (visible
//! with `cargo test --test acceptance -- --nocapture`) and fails hard on any
//! violation.

mod common;

use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use irregulators::bounds;
use irregulators::closed_forms;
use irregulators::generators;
use irregulators::graph::Graph;
use irregulators::harness::{self, SolveConfig};
use irregulators::kernel::{self, KernelStatus};
use irregulators::oracle::{self, SearchLimits};
use irregulators::tree_dp;
use irregulators::vc;

fn criterion(id: usize, name: &str, violations: Vec<String>) {
    if violations.is_empty() {
        println!("[criterion {id:02}] {name}: PASS");
    } else {
        println!(
            "[criterion {id:02}] {name}: FAIL ({} violations)",
            violations.len()
        );
        for v in violations.iter().take(10) {
            println!("    {v}");
        }
        panic!("criterion {id} failed");
    }
}

/// Caps wide enough for the 31-edge conflict-bound witness.
fn wide_limits() -> SearchLimits {
    SearchLimits {
        max_candidates: 36,
        max_subset: 16,
    }
}

#[test]
fn criterion_01_formulas_agree_with_the_oracle() {
    let mut violations = Vec::new();
    for n in 2..=12 {
        let g = generators::path(n).unwrap();
        let exact = oracle::solve_exact(&g).unwrap().value;
        let formula = closed_forms::ie_path(n).unwrap();
        if formula != exact {
            violations.push(format!("path n={n}: formula {formula}, oracle {exact}"));
        }
    }
    for n in 3..=12 {
        let g = generators::cycle(n).unwrap();
        let exact = oracle::solve_exact(&g).unwrap().value;
        let formula = closed_forms::ie_cycle(n).unwrap();
        if formula != exact {
            violations.push(format!("cycle n={n}: formula {formula}, oracle {exact}"));
        }
    }
    criterion(
        1,
        "path and cycle formulas match exhaustive search",
        violations,
    );
}

fn check_named(violations: &mut Vec<String>, label: &str, g: &Graph, expected: usize) {
    match oracle::solve_exact_with(g, &wide_limits()) {
        Ok(result) => {
            if result.value != expected {
                violations.push(format!(
                    "{label}: expected {expected}, oracle found {}",
                    result.value
                ));
            }
            let reduced = g.delete_edges(&result.certificate).unwrap();
            if !reduced.is_locally_irregular() {
                violations.push(format!("{label}: certificate does not verify"));
            }
        }
        Err(e) => violations.push(format!("{label}: solver error {e}")),
    }
}

#[test]
fn criterion_02_named_values_reproduced() {
    let mut violations = Vec::new();

    check_named(&mut violations, "K2", &generators::path(2).unwrap(), 1);
    check_named(&mut violations, "C4", &generators::cycle(4).unwrap(), 2);
    check_named(&mut violations, "P3", &generators::path(3).unwrap(), 0);
    for n in 1..=4 {
        check_named(
            &mut violations,
            &format!("K{{{n},{n}}}"),
            &generators::complete_bipartite(n, n).unwrap(),
            n,
        );
    }
    check_named(
        &mut violations,
        "K{2,3}",
        &generators::complete_bipartite(2, 3).unwrap(),
        0,
    );
    check_named(&mut violations, "K3", &generators::complete(3).unwrap(), 1);
    check_named(&mut violations, "K6", &generators::complete(6).unwrap(), 4);

    let fig = generators::figure1();
    check_named(&mut violations, "figure1", &fig, 1);
    let lower = bounds::conflict_lower_bound(&fig);
    if lower != 1 {
        violations.push(format!("figure1 conflict bound: expected 1, got {lower}"));
    }

    criterion(2, "named values reproduced exactly", violations);
}

#[test]
fn criterion_03_layered_construction_and_k6_search() {
    let mut violations = Vec::new();
    for k in 1..=30 {
        let g = closed_forms::build_t_k(k).unwrap();
        if !g.is_locally_irregular() {
            violations.push(format!("t_k k={k} is not locally irregular"));
        }
        if g.edge_count() as u64 != closed_forms::max_irregular_edges(k) {
            violations.push(format!(
                "t_k k={k}: {} edges, formula says {}",
                g.edge_count(),
                closed_forms::max_irregular_edges(k)
            ));
        }
    }
    // Exhaustive confirmation on K6: no 3-edge deletion works, some 4-edge
    // deletion does.
    let k6 = generators::complete(6).unwrap();
    if oracle::decide(&k6, 3) {
        violations.push("K6 admits a 3-edge deletion set".into());
    }
    if !oracle::decide(&k6, 4) {
        violations.push("K6 rejects every 4-edge deletion set".into());
    }
    criterion(
        3,
        "densest-irregular construction and K6 search",
        violations,
    );
}

/// Shared by criteria 4 and 5: every free tree up to 9 vertices plus 200
/// seeded random trees between 10 and 14 vertices.
fn tree_corpus() -> Vec<(String, Graph)> {
    let mut corpus = Vec::new();
    for n in 1..=9 {
        for (i, t) in generators::all_free_trees(n).into_iter().enumerate() {
            corpus.push((format!("tree(n={n},#{i})"), t));
        }
    }
    for n in 10..=14 {
        for i in 0..40 {
            let seed = 1000 * n as u64 + i;
            corpus.push((
                format!("random_tree(n={n},seed={seed})"),
                generators::random_tree(n, seed).unwrap(),
            ));
        }
    }
    corpus
}

#[test]
fn criterion_04_tree_dp_matches_the_oracle() {
    let mut violations = Vec::new();
    let corpus = tree_corpus();
    assert!(
        corpus.len() >= 295,
        "corpus holds all small trees plus 200 random ones"
    );
    for (label, t) in &corpus {
        let dp = match tree_dp::ie_tree(t) {
            Ok(r) => r,
            Err(e) => {
                violations.push(format!("{label}: tree solver error {e}"));
                continue;
            }
        };
        let exact = oracle::solve_exact(t).unwrap().value;
        if dp.value != exact {
            violations.push(format!("{label}: dp {} vs oracle {exact}", dp.value));
        }
        if dp.certificate.len() != dp.value
            || !t
                .delete_edges(&dp.certificate)
                .unwrap()
                .is_locally_irregular()
        {
            violations.push(format!("{label}: certificate does not verify"));
        }
    }
    // Re-rooting never changes the value.
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..50 {
        let n = rng.gen_range(5..=12);
        let t = generators::random_tree(n, rng.gen()).unwrap();
        let reference = tree_dp::ie_tree(&t).unwrap().value;
        let root = rng.gen_range(0..n);
        let rooted = tree_dp::ie_tree_rooted(&t, root).unwrap().value;
        if rooted != reference {
            violations.push(format!(
                "re-rooting at {root} changed the value: {rooted} vs {reference}"
            ));
        }
    }
    criterion(4, "tree solver equals exhaustive search", violations);
}

#[test]
fn criterion_05_non_path_trees_stay_under_a_third() {
    let mut violations = Vec::new();
    for (label, t) in &tree_corpus() {
        if t.max_degree() <= 2 {
            continue; // paths are the stated exception
        }
        let value = tree_dp::ie_tree(t).unwrap().value;
        let third = Rational64::new(t.edge_count() as i64, 3);
        if Rational64::from_integer(value as i64) > third {
            violations.push(format!(
                "{label}: value {value} exceeds {}/3",
                t.edge_count()
            ));
        }
    }
    criterion(5, "non-path trees need at most m/3 deletions", violations);
}

#[test]
fn criterion_06_kernel_equivalence() {
    let mut violations = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    let mut tested = 0;
    while tested < 100 {
        let n = rng.gen_range(5..=12);
        let extra = rng.gen_range(0..=3);
        let g = match generators::random_connected_max_degree(n, 4, extra, rng.gen()) {
            Ok(g) => g,
            Err(_) => continue,
        };
        tested += 1;
        for k in [1, 2] {
            let direct = oracle::decide(&g, k);
            let reduced = kernel::kernelize(&g, k).unwrap();
            match reduced.status {
                KernelStatus::AlreadyIrregular => {
                    if !direct {
                        violations.push(format!("n={n}, k={k}: shortcut yes, oracle no"));
                    }
                }
                KernelStatus::NoInstance => {
                    if direct {
                        violations.push(format!("n={n}, k={k}: shortcut no, oracle yes"));
                    }
                }
                KernelStatus::Kernel => {
                    let h = reduced.kernel.as_ref().unwrap();
                    if oracle::decide(h, k) != direct {
                        violations.push(format!("n={n}, k={k}: kernel decision differs"));
                    }
                    let bound = kernel::kernel_vertex_bound(k, g.max_degree());
                    if (h.vertex_count() as u128) > bound {
                        violations.push(format!(
                            "n={n}, k={k}: kernel has {} vertices, bound {bound}",
                            h.vertex_count()
                        ));
                    }
                }
            }
        }
    }
    criterion(6, "kernel decides exactly like the input", violations);
}

#[test]
fn criterion_07_cover_solver_matches_the_oracle() {
    let mut violations = Vec::new();
    let oracle_limits = SearchLimits {
        max_candidates: 28,
        max_subset: 18,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut tested = 0;
    while tested < 100 {
        let n = rng.gen_range(6..=12);
        let g = common::random_small_cover_graph(n, 3, rng.gen());
        let cover = vc::min_vertex_cover(&g);
        if cover.len() > 3 || g.edge_count() > 18 {
            continue;
        }
        let decomp = vc::decompose(&g, &cover);
        if decomp.core_edges.len() > 18 {
            continue;
        }
        tested += 1;
        let fpt = match vc::ie_vc_fpt(&g) {
            Ok(r) => r,
            Err(e) => {
                violations.push(format!("n={n}: cover solver error {e}"));
                continue;
            }
        };
        let exact = oracle::solve_exact_with(&g, &oracle_limits).unwrap().value;
        if fpt.value != exact {
            violations.push(format!(
                "n={n}: cover solver {} vs oracle {exact}",
                fpt.value
            ));
        }
        if !g
            .delete_edges(&fpt.certificate)
            .unwrap()
            .is_locally_irregular()
        {
            violations.push(format!("n={n}: certificate does not verify"));
        }
        let counted = fpt
            .certificate
            .iter()
            .filter(|&&id| decomp.counted_edges.contains(id))
            .count();
        if counted > cover.len() * cover.len() {
            violations.push(format!(
                "n={n}: optimum uses {counted} counted edges, budget {}",
                cover.len() * cover.len()
            ));
        }
    }
    criterion(
        7,
        "cover-parameterized solver equals exhaustive search",
        violations,
    );
}

#[test]
fn criterion_08_constructive_bounds_hold() {
    let mut violations = Vec::new();

    // Pendant bipartite inputs for the parity procedure.
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut accepted = 0;
    while accepted < 50 {
        let n = rng.gen_range(6..=40);
        let g = match generators::random_connected(n, 1.4 / n as f64, rng.gen()) {
            Ok(g) => g,
            Err(_) => continue,
        };
        if g.bipartition().is_none() || !(0..n).any(|v| g.degree(v) == 1) {
            continue;
        }
        accepted += 1;
        match bounds::bipartite_deg1_irregulator(&g) {
            Ok(s) => {
                if s.len() > n - 1 {
                    violations.push(format!("parity: n={n}, |S|={} exceeds n-1", s.len()));
                }
                if !g.delete_edges(&s).unwrap().is_locally_irregular() {
                    violations.push(format!("parity: n={n}, output does not verify"));
                }
            }
            Err(e) => violations.push(format!("parity: n={n}, error {e}")),
        }
    }

    // General connected inputs for the cut procedure.
    let mut accepted = 0;
    let mut seed = 0u64;
    while accepted < 50 {
        seed += 1;
        let n = 5 + (seed as usize * 7) % 46; // spread through 5..=50
        let g = match generators::random_connected(n, 2.0 / n as f64, seed) {
            Ok(g) => g,
            Err(_) => continue,
        };
        accepted += 1;
        let cap = g.edge_count() / 2 + g.vertex_count() + g.max_degree() - 2;
        match bounds::maxcut_irregulator(&g) {
            Ok(s) => {
                if s.len() > cap {
                    violations.push(format!("cut: n={n}, |S|={} exceeds {cap}", s.len()));
                }
                if !g.delete_edges(&s).unwrap().is_locally_irregular() {
                    violations.push(format!("cut: n={n}, output does not verify"));
                }
            }
            Err(e) => violations.push(format!("cut: n={n}, error {e}")),
        }
    }

    criterion(
        8,
        "constructive procedures verify within their bounds",
        violations,
    );
}

#[test]
fn criterion_09_double_subdivision_lower_bound() {
    let mut violations = Vec::new();

    let c9 = generators::double_subdivision(&generators::complete(3).unwrap());
    let value = oracle::solve_exact(&c9).unwrap().value;
    if value != 3 || 3 * value != c9.edge_count() {
        violations.push(format!(
            "tripled triangle: value {value}, edges {}",
            c9.edge_count()
        ));
    }

    let sub4 = generators::double_subdivision(&generators::complete(4).unwrap());
    let value = oracle::solve_exact(&sub4).unwrap().value;
    if value < 6 {
        violations.push(format!("tripled K4: value {value} below 6"));
    }
    if 3 * value < sub4.edge_count() {
        violations.push(format!(
            "tripled K4: value {value} below a third of {} edges",
            sub4.edge_count()
        ));
    }

    criterion(
        9,
        "double subdivisions need at least a third of their edges",
        violations,
    );
}

#[test]
fn criterion_10_conjecture_sweep() {
    let mut violations = Vec::new();
    let suite = harness::standard_suite(1).unwrap();
    let outcome =
        harness::conjecture_sweep(&suite, &SolveConfig::standard_suite(), true, 1).unwrap();

    for (label, note) in &outcome.skipped {
        violations.push(format!("skipped {label}: {note}"));
    }
    let four_thirds = Rational64::new(4, 3);
    match outcome.max_excess {
        Some(max) if max == four_thirds => {}
        other => violations.push(format!("max excess {other:?}, expected 4/3")),
    }
    match &outcome.max_excess_witness {
        Some(w) if w == "cycle(n=5)" => {}
        other => violations.push(format!("witness {other:?}, expected cycle(n=5)")),
    }
    let two = Rational64::from_integer(2);
    for report in &outcome.reports {
        let Some(value) = report.ie else { continue };
        let excess = harness::excess(value, report.m);
        if excess > two {
            violations.push(format!("{}: excess {excess} exceeds 2", report.family));
        }
        let is_late_cycle =
            report.family.starts_with("cycle(") && report.n >= 3 && report.n % 3 == 2;
        if is_late_cycle && excess != four_thirds {
            violations.push(format!("{}: excess {excess}, expected 4/3", report.family));
        }
    }
    if outcome.positive_excess_count == 0 {
        violations.push("no instance with positive excess found".into());
    }
    criterion(
        10,
        "sweep peaks at 4/3 on the short-residue cycles",
        violations,
    );
}
