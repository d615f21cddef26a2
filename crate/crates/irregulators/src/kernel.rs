//! Instance shrinking for the decision problem "can `k` deletions make the
//! graph locally irregular?".
//!
//! Any deletion set of minimum size stays within edge distance `2k - 1` of a
//! conflicting edge, so only the union of radius-`2k+1` balls around the
//! conflicts matters. The induced subgraph on those balls, padded with
//! pendant leaves so every kept vertex retains its original degree, decides
//! exactly like the input at the same budget.

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, VertexLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelStatus {
    /// No conflicts at all: the answer is yes with zero deletions.
    AlreadyIrregular,
    /// More conflicts than `k` deletions could ever resolve.
    NoInstance,
    /// A reduced equivalent instance was produced.
    Kernel,
}

#[derive(Debug, Clone)]
pub struct KernelStats {
    /// Number of conflicting edges in the input.
    pub conflict_edges: usize,
    /// Vertices kept from the input (excluding padding leaves).
    pub kept_vertices: usize,
    /// The guaranteed ceiling `2k(2Δ+1)Δ^(2k+1)` on kernel vertices
    /// (saturating in the unbounded regime).
    pub vertex_bound: u128,
}

#[derive(Debug, Clone)]
pub struct KernelResult {
    pub status: KernelStatus,
    /// Present iff `status == Kernel`. Vertex labels record which vertices
    /// come from the input and which are padding leaves.
    pub kernel: Option<Graph>,
    pub k: usize,
    pub added_leaves: usize,
    pub stats: KernelStats,
}

impl KernelResult {
    /// The conventional stand-in kernel for a no-instance: a single edge
    /// with budget zero.
    pub fn no_instance_artifact() -> (Graph, usize) {
        (Graph::from_edges(2, [(0, 1)]).expect("two-vertex edge"), 0)
    }
}

/// Vertex ceiling `2k(2Δ+1)Δ^(2k+1)`; saturates instead of overflowing.
pub fn kernel_vertex_bound(k: usize, max_degree: usize) -> u128 {
    let delta = max_degree as u128;
    let mut power: u128 = 1;
    for _ in 0..2 * k + 1 {
        power = power.saturating_mul(delta);
    }
    (2 * k as u128)
        .saturating_mul(2 * delta + 1)
        .saturating_mul(power)
}

pub fn kernelize(g: &Graph, k: usize) -> Result<KernelResult> {
    if k < 1 {
        return Err(Error::BudgetTooSmall { min: 1, got: k });
    }
    let conflicts = g.conflict_report().conflict_edges;
    let delta = g.max_degree();
    let stats = |kept: usize| KernelStats {
        conflict_edges: conflicts.len(),
        kept_vertices: kept,
        vertex_bound: kernel_vertex_bound(k, delta),
    };

    if conflicts.is_empty() {
        return Ok(KernelResult {
            status: KernelStatus::AlreadyIrregular,
            kernel: None,
            k,
            added_leaves: 0,
            stats: stats(0),
        });
    }
    // One deletion fixes at most 2Δ - 1 conflicting edges.
    if conflicts.len() > k * (2 * delta - 1) {
        return Ok(KernelResult {
            status: KernelStatus::NoInstance,
            kernel: None,
            k,
            added_leaves: 0,
            stats: stats(0),
        });
    }

    let sources = conflicts.iter().flat_map(|&id| {
        let (u, v) = g.endpoints(id);
        [u, v]
    });
    let dist = g.bfs_multi(sources);
    let radius = 2 * k + 1;
    let kept: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| matches!(dist[v], Some(d) if d <= radius))
        .collect();
    assert!(!kept.is_empty(), "conflict endpoints are always kept");

    let (induced, map) = g.induced_subgraph(&kept);
    let mut edges: Vec<(usize, usize)> = induced
        .edges()
        .iter()
        .map(|&(u, v)| (u as usize, v as usize))
        .collect();
    let mut labels: Vec<VertexLabel> = map.iter().map(|&orig| VertexLabel::Source(orig)).collect();

    // Restore original degrees with pendant leaves; deficits only occur on
    // the boundary shell, so a padded vertex keeps degree at least 2 and
    // never conflicts with its leaves.
    let mut next = kept.len();
    let mut added_leaves = 0;
    for (new_id, &orig) in map.iter().enumerate() {
        let deficit = g.degree(orig) - induced.degree(new_id);
        for _ in 0..deficit {
            edges.push((new_id, next));
            labels.push(VertexLabel::PaddingLeaf);
            next += 1;
            added_leaves += 1;
        }
    }

    let kernel = Graph::from_edges(next, edges)?.with_labels(labels);
    assert!(
        (kernel.vertex_count() as u128) <= kernel_vertex_bound(k, delta),
        "kernel exceeds its vertex ceiling"
    );
    Ok(KernelResult {
        status: KernelStatus::Kernel,
        kernel: Some(kernel),
        k,
        added_leaves,
        stats: stats(kept.len()),
    })
}

/// Maps a deletion set of the kernel back to edge ids of the original graph.
/// Minimum-size deletion sets never touch padding leaves, so hitting one is
/// an internal error.
pub fn lift_certificate(g: &Graph, kernel: &Graph, cert: &EdgeSet) -> Result<EdgeSet> {
    let labels = kernel
        .labels()
        .ok_or(Error::Internal("kernel graph lost its labels"))?;
    let mut ids = Vec::with_capacity(cert.len());
    for &id in cert.iter() {
        let (a, b) = kernel.endpoints(id);
        match (labels[a], labels[b]) {
            (VertexLabel::Source(u), VertexLabel::Source(v)) => {
                ids.push(g.edge_id(u, v).ok_or(Error::NoSuchEdge { u, v })?);
            }
            _ => {
                return Err(Error::Internal(
                    "kernel deletion set touches a padding leaf",
                ))
            }
        }
    }
    Ok(EdgeSet::new(ids))
}
