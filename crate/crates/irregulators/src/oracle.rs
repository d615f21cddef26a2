//! Ground-truth exact solver: pruned exhaustive search over deletion sets.
//!
//! Every other solver in the crate is cross-checked against this one. The
//! search only considers edges close to a conflicting edge: any optimal
//! deletion set of size `s` lies within edge distance `2s - 1` of an edge
//! whose endpoints have equal degree, so for a budget `k` the candidate pool
//! of radius `2k - 1` is guaranteed to contain an optimal set.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};

/// Which solver produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Oracle,
    TreeDp,
    Formula,
    VcFpt,
    Constructive,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::TreeDp => "tree-dp",
            Method::Formula => "formula",
            Method::VcFpt => "vc-fpt",
            Method::Constructive => "constructive",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An exact answer: the minimum deletion count together with a witnessing
/// deletion set of exactly that size.
#[derive(Debug, Clone)]
pub struct IrregulatorResult {
    pub value: usize,
    pub certificate: EdgeSet,
    pub method: Method,
    pub elapsed: Duration,
}

impl IrregulatorResult {
    pub(crate) fn verified(
        g: &Graph,
        certificate: EdgeSet,
        method: Method,
        elapsed: Duration,
    ) -> Result<Self> {
        let value = certificate.len();
        let reduced = g.delete_edges(&certificate)?;
        if let Some(&(u, v)) = reduced
            .edges()
            .iter()
            .find(|&&(u, v)| reduced.degree(u as usize) == reduced.degree(v as usize))
        {
            return Err(Error::CertificateInvalid {
                u: u as usize + 1,
                v: v as usize + 1,
            });
        }
        Ok(IrregulatorResult {
            value,
            certificate,
            method,
            elapsed,
        })
    }
}

/// Caps that keep the exhaustive search honest: exceeding them is a hard
/// error, never a silent approximation.
#[derive(Debug, Clone, Copy)]
pub struct SearchLimits {
    /// Largest admissible candidate pool.
    pub max_candidates: usize,
    /// Largest deletion-set size the search will attempt.
    pub max_subset: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_candidates: 28,
            max_subset: 12,
        }
    }
}

/// Edges within edge distance `2k - 1` of some conflicting edge; every
/// deletion set of size at most `k` that is optimal for its size is a subset
/// of this pool. Empty when the graph is already locally irregular.
pub fn candidate_edges(g: &Graph, k: usize) -> EdgeSet {
    assert!(k >= 1, "budget must be positive");
    let conflicts = g.conflict_report().conflict_edges;
    if conflicts.is_empty() {
        return EdgeSet::empty();
    }
    let sources = conflicts.iter().flat_map(|&id| {
        let (u, v) = g.endpoints(id);
        [u, v]
    });
    let dist = g.bfs_multi(sources);
    let radius = 2 * k - 1;
    EdgeSet::from_sorted(
        (0..g.edge_count())
            .filter(|&id| {
                let (u, v) = g.endpoints(id);
                let d = match (dist[u], dist[v]) {
                    (Some(a), Some(b)) => a.min(b),
                    (Some(a), None) | (None, Some(a)) => a,
                    (None, None) => return false,
                };
                d <= radius
            })
            .collect(),
    )
}

/// Decision variant: is there a deletion set of size at most `k`?
pub fn decide(g: &Graph, k: usize) -> bool {
    decide_with_witness(g, k).is_some()
}

/// Smallest witnessing deletion set of size at most `k`, if any; searched in
/// increasing size, lexicographic within a size.
pub fn decide_with_witness(g: &Graph, k: usize) -> Option<EdgeSet> {
    if g.is_locally_irregular() {
        return Some(EdgeSet::empty());
    }
    if k == 0 {
        return None;
    }
    let cands = candidate_edges(g, k);
    let mut search = SubsetSearch::new(g, cands.as_slice());
    (1..=k.min(cands.len())).find_map(|size| search.find(size))
}

/// Minimum deletion count with a lexicographically smallest witnessing set,
/// found by exhaustive search in increasing size.
pub fn solve_exact(g: &Graph) -> Result<IrregulatorResult> {
    solve_exact_with(g, &SearchLimits::default())
}

pub fn solve_exact_with(g: &Graph, limits: &SearchLimits) -> Result<IrregulatorResult> {
    let start = Instant::now();
    if g.is_locally_irregular() {
        return IrregulatorResult::verified(g, EdgeSet::empty(), Method::Oracle, start.elapsed());
    }
    let m = g.edge_count();
    for k in 1.. {
        if k > limits.max_subset {
            return Err(Error::CapExceeded {
                what: "deletion-set size",
                value: k,
                cap: limits.max_subset,
                upper_bound: m,
            });
        }
        let cands = candidate_edges(g, k);
        if cands.len() > limits.max_candidates {
            return Err(Error::CapExceeded {
                what: "candidate edges",
                value: cands.len(),
                cap: limits.max_candidates,
                upper_bound: m,
            });
        }
        if k > cands.len() {
            continue;
        }
        // Sizes below k were ruled out at earlier budgets, so only size k
        // is searched here.
        let mut search = SubsetSearch::new(g, cands.as_slice());
        if let Some(witness) = search.find(k) {
            return IrregulatorResult::verified(g, witness, Method::Oracle, start.elapsed());
        }
    }
    unreachable!("deleting all edges always succeeds");
}

/// Enumerates fixed-size subsets of the candidate pool in lexicographic
/// order, maintaining degrees incrementally; the irregularity check at each
/// leaf dominates the runtime.
struct SubsetSearch<'a> {
    g: &'a Graph,
    cands: &'a [usize],
    deg: Vec<usize>,
    deleted: Vec<bool>,
    chosen: Vec<usize>,
}

impl<'a> SubsetSearch<'a> {
    fn new(g: &'a Graph, cands: &'a [usize]) -> Self {
        SubsetSearch {
            g,
            cands,
            deg: g.degrees(),
            deleted: vec![false; g.edge_count()],
            chosen: Vec::new(),
        }
    }

    /// First (lexicographically smallest) subset of exactly `size` candidate
    /// edges whose deletion leaves the graph locally irregular.
    fn find(&mut self, size: usize) -> Option<EdgeSet> {
        if self.recurse(0, size) {
            let found = EdgeSet::new(self.chosen.iter().copied());
            self.unwind();
            Some(found)
        } else {
            debug_assert!(self.chosen.is_empty());
            None
        }
    }

    fn recurse(&mut self, from: usize, remaining: usize) -> bool {
        if remaining == 0 {
            return self.deletion_is_irregular();
        }
        if self.cands.len() - from < remaining {
            return false;
        }
        for i in from..=self.cands.len() - remaining {
            let e = self.cands[i];
            self.push(e);
            if self.recurse(i + 1, remaining - 1) {
                return true;
            }
            self.pop(e);
        }
        false
    }

    fn push(&mut self, e: usize) {
        let (u, v) = self.g.endpoints(e);
        self.deg[u] -= 1;
        self.deg[v] -= 1;
        self.deleted[e] = true;
        self.chosen.push(e);
    }

    fn pop(&mut self, e: usize) {
        let (u, v) = self.g.endpoints(e);
        self.deg[u] += 1;
        self.deg[v] += 1;
        self.deleted[e] = false;
        self.chosen.pop();
    }

    fn unwind(&mut self) {
        while let Some(&e) = self.chosen.last() {
            self.pop(e);
        }
    }

    fn deletion_is_irregular(&self) -> bool {
        self.g
            .edges()
            .iter()
            .enumerate()
            .all(|(id, &(u, v))| self.deleted[id] || self.deg[u as usize] != self.deg[v as usize])
    }
}
