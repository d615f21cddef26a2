//! Sweep the built-in suite and measure each instance's excess over one
//! third of its edge count.
//!
//! Run with: cargo run -p irregulators --example conjecture_sweep

use irregulators::harness::{self, SolveConfig};

fn main() {
    let suite = harness::standard_suite(1).expect("suite builds");
    println!("sweeping {} instances...", suite.len());
    let outcome = harness::conjecture_sweep(&suite, &SolveConfig::standard_suite(), true, 1)
        .expect("sweep completes");

    println!(
        "solved {} / {} exactly; {} with positive excess",
        outcome.reports.len() - outcome.skipped.len(),
        outcome.reports.len(),
        outcome.positive_excess_count
    );
    if let (Some(max), Some(witness)) = (&outcome.max_excess, &outcome.max_excess_witness) {
        println!("maximum excess {max}, first attained by {witness}");
    }

    // The instances with the largest excess, most extreme first.
    let mut ranked: Vec<_> = outcome
        .reports
        .iter()
        .filter_map(|r| r.ie.map(|value| (harness::excess(value, r.m), r)))
        .collect();
    ranked.sort_by_key(|&(excess, _)| std::cmp::Reverse(excess));
    println!("\ntop excesses:");
    for (excess, report) in ranked.iter().take(8) {
        println!(
            "  {:<28} ie={:<3} m={:<3} excess {excess}",
            report.family,
            report.ie.unwrap(),
            report.m
        );
    }

    // Every cycle whose order leaves remainder 2 mod 3 sits exactly at the
    // peak; everything else stays strictly below it.
    let peak = ranked.first().map(|(e, _)| *e).unwrap();
    let peak_cycles = ranked
        .iter()
        .filter(|(e, r)| *e == peak && r.family.starts_with("cycle("))
        .count();
    println!("\ncycles at the {peak} peak: {peak_cycles}");
}
