//! Reading and writing graph files, including what the parser rejects.
//!
//! Run with: cargo run -p irregulators --example dimacs_io

use irregulators::dimacs;

fn main() {
    let text = "c a 4-cycle\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n";
    let g = dimacs::parse(text).expect("well-formed file");
    println!("parsed: n={}, m={}", g.vertex_count(), g.edge_count());
    println!("degrees: {:?}", g.degrees());

    // The emitter is canonical: edges sorted, LF line endings, 1-indexed.
    let emitted = dimacs::emit(&g);
    print!("emitted back:\n{emitted}");
    assert_eq!(dimacs::parse(&emitted).unwrap(), g);
    println!("round trip: identical graph");

    // Malformed inputs are rejected with the offending line number.
    for bad in [
        "p edge 3 1\ne 1 5\n",        // endpoint out of range
        "p edge 2 1\ne 1 1\n",        // self-loop
        "p edge 2 2\ne 1 2\ne 2 1\n", // duplicate edge
        "e 1 2\n",                    // edge before header
    ] {
        let err = dimacs::parse(bad).unwrap_err();
        println!("rejected: {err}");
    }
}
