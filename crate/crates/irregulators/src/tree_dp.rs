//! Exact solver for forests: a two-table dynamic program over rooted trees.
//!
//! For a vertex `u` with `k` children, `d[δ]` is the cheapest deletion count
//! inside `u`'s subtree when the edge to `u`'s parent is deleted and `u` ends
//! with degree exactly `δ` (0 ≤ δ ≤ k); `u[δ]` is the same with the parent
//! edge kept, `δ` counting that edge (1 ≤ δ ≤ k + 1). A kept child must end
//! with a total degree different from `δ`, which is what the exclusion index
//! in the selection below enforces. Degree 0 is admitted in `d`: a vertex
//! isolated by the deletions is never in conflict.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};
use crate::oracle::{IrregulatorResult, Method};

/// Marks an unattainable table entry; additions saturate so sums stay put.
pub const INFEASIBLE: u64 = u64::MAX;

/// Per-vertex cost arrays, indexed by prescribed degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpTables {
    /// `d[δ]` for δ in `0..=k`: parent edge deleted.
    pub d: Vec<u64>,
    /// `u[δ]` for δ in `1..=k+1`: parent edge kept (`u[0]` is a sentinel).
    pub u: Vec<u64>,
}

impl DpTables {
    /// Base case: a leaf pays nothing for degree 0 without its parent edge
    /// and nothing for degree 1 with it; everything else is infeasible.
    pub fn leaf() -> Self {
        DpTables {
            d: vec![0],
            u: vec![INFEASIBLE, 0],
        }
    }
}

/// Summary of a child's tables used by the row selection.
#[derive(Debug, Clone, Copy)]
struct ChildInfo {
    /// Cheapest way to cut the child loose (minimum over its `d` row).
    out: u64,
    /// Minimum of the child's `u` row, the lowest degree attaining it, and
    /// the minimum over the remaining degrees.
    keep_min: u64,
    keep_arg: usize,
    keep_second: u64,
}

impl ChildInfo {
    fn of(tables: &DpTables) -> Self {
        let out = *tables.d.iter().min().expect("d row never empty");
        let mut keep_min = INFEASIBLE;
        let mut keep_arg = 0;
        let mut keep_second = INFEASIBLE;
        for (deg, &cost) in tables.u.iter().enumerate().skip(1) {
            if cost < keep_min {
                keep_second = keep_min;
                keep_min = cost;
                keep_arg = deg;
            } else if cost < keep_second {
                keep_second = cost;
            }
        }
        ChildInfo {
            out,
            keep_min,
            keep_arg,
            keep_second,
        }
    }

    /// Cheapest `u` entry over degrees different from `excluded`.
    fn keep_cost_excluding(&self, excluded: usize) -> u64 {
        if self.keep_arg == excluded {
            self.keep_second
        } else {
            self.keep_min
        }
    }
}

/// One table row: the parent keeps exactly `kept` children, pays for the
/// `k - kept` cut edges, and every kept child must avoid total degree
/// `excluded`. Ties in the keep-versus-cut margin go to the lowest child
/// index. Returns the cost and the kept child indices, or `None` when fewer
/// than `kept` children can avoid the excluded degree.
fn select_row(children: &[ChildInfo], excluded: usize, kept: usize) -> Option<(u64, Vec<usize>)> {
    let k = children.len();
    debug_assert!(kept <= k);
    let base: u64 = (k - kept) as u64
        + children
            .iter()
            .map(|c| c.out)
            .fold(0u64, |a, b| a.saturating_add(b));
    if kept == 0 {
        return Some((base, Vec::new()));
    }
    let mut margins: Vec<(i64, usize)> = Vec::with_capacity(k);
    for (i, child) in children.iter().enumerate() {
        let keep = child.keep_cost_excluding(excluded);
        if keep != INFEASIBLE {
            margins.push((keep as i64 - child.out as i64, i));
        }
    }
    if margins.len() < kept {
        return None;
    }
    margins.sort_unstable();
    let chosen: Vec<usize> = margins[..kept].iter().map(|&(_, i)| i).collect();
    let delta: i64 = margins[..kept].iter().map(|&(d, _)| d).sum();
    let total = base as i64 + delta;
    debug_assert!(total >= 0);
    Some((total as u64, chosen))
}

/// Builds a parent's tables from its children's.
pub fn combine(children: &[DpTables]) -> DpTables {
    let infos: Vec<ChildInfo> = children.iter().map(ChildInfo::of).collect();
    let k = children.len();
    let d = (0..=k)
        .map(|delta| select_row(&infos, delta, delta).map_or(INFEASIBLE, |(c, _)| c))
        .collect();
    let u = (0..=k + 1)
        .map(|delta| {
            if delta == 0 {
                INFEASIBLE
            } else {
                select_row(&infos, delta, delta - 1).map_or(INFEASIBLE, |(c, _)| c)
            }
        })
        .collect();
    DpTables { d, u }
}

/// Exact minimum deletion count for a forest, with a verified certificate.
/// Components are solved independently (rooted at their smallest vertex)
/// and the answers added up.
pub fn ie_tree(g: &Graph) -> Result<IrregulatorResult> {
    let start = Instant::now();
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    let mut deleted: Vec<usize> = Vec::new();
    for comp in g.connected_components() {
        solve_component(g, comp[0], &mut deleted);
    }
    IrregulatorResult::verified(g, EdgeSet::new(deleted), Method::TreeDp, start.elapsed())
}

/// The finished cost tables of a connected tree rooted at `root`; mostly
/// useful for inspecting or cross-checking the recurrence.
pub fn root_tables(g: &Graph, root: usize) -> Result<DpTables> {
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if root >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            v: root,
            n: g.vertex_count(),
        });
    }
    let rooted = root_component(g, root);
    let mut tables = compute_tables(g, &rooted);
    Ok(tables[root].take().expect("root table computed"))
}

/// Same solver pinned to a specific root; the value never depends on the
/// choice. Requires a connected tree.
pub fn ie_tree_rooted(g: &Graph, root: usize) -> Result<IrregulatorResult> {
    let start = Instant::now();
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if root >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            v: root,
            n: g.vertex_count(),
        });
    }
    let mut deleted = Vec::new();
    solve_component(g, root, &mut deleted);
    IrregulatorResult::verified(g, EdgeSet::new(deleted), Method::TreeDp, start.elapsed())
}

struct RootedComponent {
    /// Vertices in BFS order from the root.
    order: Vec<usize>,
    children: Vec<Vec<usize>>,
}

fn root_component(g: &Graph, root: usize) -> RootedComponent {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![root];
    let mut children = vec![Vec::new(); n];
    parent[root] = root;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in g.neighbours(v) {
            let w = w as usize;
            if parent[w] == usize::MAX {
                parent[w] = v;
                children[v].push(w);
                order.push(w);
            }
        }
    }
    RootedComponent { order, children }
}

/// Children are complete before their parent in reverse BFS order.
fn compute_tables(g: &Graph, rooted: &RootedComponent) -> Vec<Option<DpTables>> {
    let mut tables: Vec<Option<DpTables>> = vec![None; g.vertex_count()];
    for &v in rooted.order.iter().rev() {
        let child_tables: Vec<DpTables> = rooted.children[v]
            .iter()
            .map(|&c| tables[c].clone().expect("child table ready"))
            .collect();
        tables[v] = Some(if child_tables.is_empty() {
            DpTables::leaf()
        } else {
            combine(&child_tables)
        });
    }
    tables
}

fn solve_component(g: &Graph, root: usize, deleted: &mut Vec<usize>) {
    let rooted = root_component(g, root);
    let tables = compute_tables(g, &rooted);

    let root_tables = tables[root].as_ref().unwrap();
    let (_, best_delta) = root_tables
        .d
        .iter()
        .enumerate()
        .map(|(delta, &cost)| (cost, delta))
        .min()
        .expect("the all-deleted row is always feasible");

    // Top-down walk re-runs the row selection at each vertex; the chosen
    // degrees pin down exactly which child edges survive.
    let mut stack: Vec<(usize, usize, bool)> = vec![(root, best_delta, false)];
    while let Some((v, delta, parent_kept)) = stack.pop() {
        let kids = &rooted.children[v];
        if kids.is_empty() {
            continue;
        }
        let infos: Vec<ChildInfo> = kids
            .iter()
            .map(|&c| ChildInfo::of(tables[c].as_ref().unwrap()))
            .collect();
        let kept_count = delta - usize::from(parent_kept);
        let (_, kept_idx) =
            select_row(&infos, delta, kept_count).expect("reconstruction follows a feasible row");
        let mut kept_flags = vec![false; kids.len()];
        for &i in &kept_idx {
            kept_flags[i] = true;
        }
        for (i, &child) in kids.iter().enumerate() {
            if kept_flags[i] {
                // The child keeps its edge to v and must dodge degree `delta`.
                let child_u = &tables[child].as_ref().unwrap().u;
                let child_delta = (1..child_u.len())
                    .filter(|&d| d != delta && child_u[d] != INFEASIBLE)
                    .min_by_key(|&d| (child_u[d], d))
                    .expect("selected child has a feasible kept degree");
                stack.push((child, child_delta, true));
            } else {
                deleted.push(g.edge_id(v, child).expect("tree edge"));
                let child_d = &tables[child].as_ref().unwrap().d;
                let child_delta = (0..child_d.len())
                    .filter(|&d| child_d[d] != INFEASIBLE)
                    .min_by_key(|&d| (child_d[d], d))
                    .expect("the all-deleted row is always feasible");
                stack.push((child, child_delta, false));
            }
        }
    }
}
