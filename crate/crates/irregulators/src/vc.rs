//! Exact solver parameterized by the vertex cover number.
//!
//! The independent side of a minimum vertex cover is split in two: vertices
//! whose cover neighbours all have many independent-side neighbours can be
//! handled by counting alone (per cover vertex it only matters *how many* of
//! its edges towards that part are deleted, not which ones), while the rest
//! joins the cover in a small core whose edge subsets are enumerated
//! exhaustively. Structural facts are only used to bound the search space;
//! every candidate is accepted solely by re-checking local irregularity.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};
use crate::oracle::{IrregulatorResult, Method};

/// Exact minimum vertex cover by branching on an uncovered edge, with the
/// lexicographically smallest cover among the minimum ones.
pub fn min_vertex_cover(g: &Graph) -> Vec<usize> {
    let mut in_cover = vec![false; g.vertex_count()];
    let mut best: Option<Vec<usize>> = None;
    branch_cover(g, &mut in_cover, 0, &mut best);
    best.unwrap_or_default()
}

fn branch_cover(g: &Graph, in_cover: &mut Vec<bool>, count: usize, best: &mut Option<Vec<usize>>) {
    let uncovered = g
        .edges()
        .iter()
        .find(|&&(u, v)| !in_cover[u as usize] && !in_cover[v as usize]);
    let Some(&(u, v)) = uncovered else {
        let cover: Vec<usize> = (0..g.vertex_count()).filter(|&v| in_cover[v]).collect();
        let better = match best {
            None => true,
            Some(cur) => cover.len() < cur.len() || (cover.len() == cur.len() && cover < *cur),
        };
        if better {
            *best = Some(cover);
        }
        return;
    };
    // One more vertex is unavoidable; equal-sized covers still compete on
    // lexicographic order, so only strictly worse branches are cut.
    if let Some(cur) = best {
        if count + 1 > cur.len() {
            return;
        }
    }
    for w in [u as usize, v as usize] {
        in_cover[w] = true;
        branch_cover(g, in_cover, count + 1, best);
        in_cover[w] = false;
    }
}

/// Degree threshold separating the two independent-side parts.
fn attachment_threshold(vc: usize) -> usize {
    5 * vc
}

/// The cover-based split of a graph.
#[derive(Debug, Clone)]
pub struct VcDecomposition {
    pub cover: Vec<usize>,
    pub independent: Vec<usize>,
    /// Independent vertices with a low-attachment cover neighbour.
    pub core_independent: Vec<usize>,
    /// The remaining independent vertices; all their cover neighbours have
    /// many independent-side neighbours.
    pub counted_independent: Vec<usize>,
    /// Edges inside cover ∪ core (enumerated exhaustively).
    pub core_edges: EdgeSet,
    /// Edges between the cover and the counted part (handled by counting).
    pub counted_edges: EdgeSet,
}

pub fn decompose(g: &Graph, cover: &[usize]) -> VcDecomposition {
    let n = g.vertex_count();
    let vc = cover.len();
    let mut is_cover = vec![false; n];
    for &c in cover {
        is_cover[c] = true;
    }
    debug_assert!(g
        .edges()
        .iter()
        .all(|&(u, v)| is_cover[u as usize] || is_cover[v as usize]));
    let independent: Vec<usize> = (0..n).filter(|&v| !is_cover[v]).collect();
    for &v in &independent {
        debug_assert!(g.degree(v) <= vc, "independent vertices see only the cover");
    }

    let mut in_core = vec![false; n];
    for &c in cover {
        let ind_degree = g
            .neighbours(c)
            .iter()
            .filter(|&&w| !is_cover[w as usize])
            .count();
        if ind_degree <= attachment_threshold(vc) {
            for &w in g.neighbours(c) {
                if !is_cover[w as usize] {
                    in_core[w as usize] = true;
                }
            }
        }
    }
    let core_independent: Vec<usize> = independent
        .iter()
        .copied()
        .filter(|&v| in_core[v])
        .collect();
    let counted_independent: Vec<usize> = independent
        .iter()
        .copied()
        .filter(|&v| !in_core[v])
        .collect();

    let mut core_edges = Vec::new();
    let mut counted_edges = Vec::new();
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        let (u, v) = (u as usize, v as usize);
        let counted = (!is_cover[u] && !in_core[u]) || (!is_cover[v] && !in_core[v]);
        if counted {
            counted_edges.push(id);
        } else {
            core_edges.push(id);
        }
    }

    VcDecomposition {
        cover: cover.to_vec(),
        independent,
        core_independent,
        counted_independent,
        core_edges: EdgeSet::new(core_edges),
        counted_edges: EdgeSet::new(counted_edges),
    }
}

/// Cap on the exhaustively enumerated core edge set; the doubly exponential
/// worst case is made explicit instead of silent.
#[derive(Debug, Clone, Copy)]
pub struct VcLimits {
    pub core_edge_cap: usize,
}

impl Default for VcLimits {
    fn default() -> Self {
        VcLimits { core_edge_cap: 24 }
    }
}

pub fn ie_vc_fpt(g: &Graph) -> Result<IrregulatorResult> {
    ie_vc_fpt_with(g, &VcLimits::default())
}

pub fn ie_vc_fpt_with(g: &Graph, limits: &VcLimits) -> Result<IrregulatorResult> {
    let start = Instant::now();
    let cover = min_vertex_cover(g);
    let vc = cover.len();
    if vc == 0 {
        return IrregulatorResult::verified(g, EdgeSet::empty(), Method::VcFpt, start.elapsed());
    }
    let decomp = decompose(g, &cover);
    if decomp.core_edges.len() > limits.core_edge_cap {
        return Err(Error::CapExceeded {
            what: "core edges",
            value: decomp.core_edges.len(),
            cap: limits.core_edge_cap,
            upper_bound: g.edge_count(),
        });
    }

    // Per cover vertex, its counted edges sorted by the independent
    // endpoint's id: deleting "j edges at cover vertex i" canonically means
    // the j lowest such neighbours.
    let counted_at: Vec<Vec<usize>> = decomp
        .cover
        .iter()
        .map(|&c| {
            let mut ids: Vec<(usize, usize)> = decomp
                .counted_edges
                .iter()
                .filter_map(|&id| {
                    let (u, v) = g.endpoints(id);
                    if u == c {
                        Some((v, id))
                    } else if v == c {
                        Some((u, id))
                    } else {
                        None
                    }
                })
                .collect();
            ids.sort_unstable();
            ids.into_iter().map(|(_, id)| id).collect()
        })
        .collect();

    let mut search = FptSearch {
        g,
        deg: g.degrees(),
        deleted: vec![false; g.edge_count()],
        chosen: Vec::new(),
        counted_at: &counted_at,
        budget_cap: vc * vc,
        best: None,
    };
    let core: Vec<usize> = decomp.core_edges.iter().copied().collect();
    for core_size in 0..=core.len() {
        if let Some((best_size, _)) = &search.best {
            if core_size >= *best_size {
                break;
            }
        }
        search.enumerate_core(&core, 0, core_size);
    }

    let (value, certificate) = search.best.ok_or(Error::Internal(
        "cover search exhausted without a verified candidate",
    ))?;
    let in_counted: usize = certificate
        .iter()
        .filter(|&&id| decomp.counted_edges.contains(id))
        .count();
    assert!(
        in_counted <= vc * vc,
        "optimum exceeds the counted-edge budget"
    );
    let result = IrregulatorResult::verified(g, certificate, Method::VcFpt, start.elapsed())?;
    debug_assert_eq!(result.value, value);
    Ok(result)
}

struct FptSearch<'a> {
    g: &'a Graph,
    deg: Vec<usize>,
    deleted: Vec<bool>,
    chosen: Vec<usize>,
    counted_at: &'a [Vec<usize>],
    budget_cap: usize,
    best: Option<(usize, EdgeSet)>,
}

impl FptSearch<'_> {
    fn best_size(&self) -> usize {
        self.best.as_ref().map_or(usize::MAX, |(s, _)| *s)
    }

    fn enumerate_core(&mut self, core: &[usize], from: usize, remaining: usize) {
        if remaining == 0 {
            self.enumerate_budgets();
            return;
        }
        if core.len() - from < remaining {
            return;
        }
        for i in from..=core.len() - remaining {
            self.push(core[i]);
            self.enumerate_core(core, i + 1, remaining - 1);
            self.pop(core[i]);
        }
    }

    /// Counted deletions per cover vertex, tried in increasing total.
    fn enumerate_budgets(&mut self) {
        let core_size = self.chosen.len();
        for total in 0..=self.budget_cap {
            if core_size + total >= self.best_size() {
                return;
            }
            self.enumerate_tuple(0, total);
        }
    }

    fn enumerate_tuple(&mut self, cover_idx: usize, remaining: usize) {
        if cover_idx == self.counted_at.len() {
            if remaining == 0 {
                self.consider();
            }
            return;
        }
        // Counted edges are disjoint from the core, so none are deleted yet;
        // taking a prefix deletes the edges to the lowest-id neighbours.
        let lists = self.counted_at;
        let available = lists[cover_idx].as_slice();
        let cap = available.len().min(remaining);
        for take in 0..=cap {
            for &id in &available[..take] {
                self.push(id);
            }
            self.enumerate_tuple(cover_idx + 1, remaining - take);
            for &id in &available[..take] {
                self.pop(id);
            }
        }
    }

    fn consider(&mut self) {
        if self.chosen.len() >= self.best_size() {
            return;
        }
        let irregular =
            self.g.edges().iter().enumerate().all(|(id, &(u, v))| {
                self.deleted[id] || self.deg[u as usize] != self.deg[v as usize]
            });
        if irregular {
            self.best = Some((self.chosen.len(), EdgeSet::new(self.chosen.iter().copied())));
        }
    }

    fn push(&mut self, id: usize) {
        let (u, v) = self.g.endpoints(id);
        self.deg[u] -= 1;
        self.deg[v] -= 1;
        self.deleted[id] = true;
        self.chosen.push(id);
    }

    fn pop(&mut self, id: usize) {
        let (u, v) = self.g.endpoints(id);
        self.deg[u] += 1;
        self.deg[v] += 1;
        self.deleted[id] = false;
        self.chosen.pop();
    }
}
