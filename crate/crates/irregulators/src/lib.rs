//! Solvers for the minimum number of edge deletions that make a graph
//! locally irregular (no edge joining two vertices of equal degree).
//!
//! The crate ships several routes to that minimum and cross-checks them
//! against each other:
//!
//! - [`oracle`]: pruned exhaustive search, the ground truth for everything
//!   else;
//! - [`closed_forms`]: constant-time formulas for paths, cycles, complete
//!   bipartite graphs and complete graphs of triangular order, each with a
//!   constructive certificate;
//! - [`tree_dp`]: an exact linear-time dynamic program for forests;
//! - [`kernel`]: shrinks an instance around its conflicting edges before the
//!   exhaustive search runs;
//! - [`vc`]: an exact solver parameterized by the vertex cover number;
//! - [`bounds`]: lower bounds and constructive upper bounds for everything
//!   the exact solvers cannot reach;
//! - [`generators`]: reproducible graph families and isomorphism-free small
//!   trees;
//! - [`harness`]: automatic dispatch, certificate verification, and the
//!   excess sweep that measures how far `ie` strays above one third of the
//!   edge count.
//!
//! Every certificate returned anywhere is re-verified before it reaches the
//! caller. See the `examples/` directory for one runnable walk-through per
//! capability; the `irregulators` binary exposes the same functionality on
//! the command line.

pub mod bounds;
pub mod closed_forms;
pub mod dimacs;
pub mod error;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod kernel;
pub mod oracle;
pub mod tree_dp;
pub mod vc;

pub use error::{Error, Result};
pub use graph::{ConflictReport, EdgeSet, Graph, VertexLabel};
pub use oracle::{IrregulatorResult, Method, SearchLimits};
