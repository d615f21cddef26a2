//! Immutable simple undirected graphs with stable edge identifiers.
//!
//! Vertices are dense integers `0..n`. Edges are stored as a lexicographically
//! sorted list of pairs `(u, v)` with `u < v`; an edge id is the index into
//! that list. All solvers in this crate treat a [`Graph`] as read-only and
//! produce new graphs when they delete edges.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Marks the origin of a vertex in a derived graph (kernels keep track of
/// which vertices are padding leaves).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexLabel {
    /// Vertex inherited from a source graph, with its original id.
    Source(usize),
    /// Degree-1 padding vertex added during kernelization.
    PaddingLeaf,
}

/// Simple undirected graph: no self-loops, no parallel edges.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
    labels: Option<Vec<VertexLabel>>,
}

impl PartialEq for Graph {
    /// Structural equality: same vertex count and same edge list.
    /// Labels are bookkeeping and do not participate.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Pairs may come in either endpoint
    /// order; they are normalised, checked and sorted.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list: Vec<(u32, u32)> = Vec::new();
        for (a, b) in edges {
            if a >= n {
                return Err(Error::VertexOutOfRange { v: a, n });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { v: b, n });
            }
            if a == b {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("self-loop at vertex {a}"),
                });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            list.push((u as u32, v as u32));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Parse {
                line: 0,
                msg: format!("duplicate edge ({},{})", w[0].0 + 1, w[0].1 + 1),
            });
        }
        Ok(Self::from_sorted_edges(n, list, None))
    }

    /// Internal constructor; `edges` must already be sorted, deduplicated and
    /// normalised with `u < v`.
    pub(crate) fn from_sorted_edges(
        n: usize,
        edges: Vec<(u32, u32)>,
        labels: Option<Vec<VertexLabel>>,
    ) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        debug_assert!(labels.as_ref().is_none_or(|l| l.len() == n));
        Graph {
            n,
            edges,
            adj,
            labels,
        }
    }

    pub(crate) fn with_labels(mut self, labels: Vec<VertexLabel>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Endpoints of edge `id`, as `(u, v)` with `u < v`.
    #[inline]
    pub fn endpoints(&self, id: usize) -> (usize, usize) {
        let (u, v) = self.edges[id];
        (u as usize, v as usize)
    }

    /// Edge id for the pair `(a, b)`, if present.
    pub fn edge_id(&self, a: usize, b: usize) -> Option<usize> {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&(u as u32, v as u32)).ok()
    }

    /// Sorted neighbour list of `v`.
    #[inline]
    pub fn neighbours(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    /// Number of neighbours of `v`.
    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Largest degree, 0 for an edgeless graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn labels(&self) -> Option<&[VertexLabel]> {
        self.labels.as_deref()
    }

    /// True iff no edge joins two vertices of equal degree. O(n + m).
    pub fn is_locally_irregular(&self) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| self.adj[u as usize].len() != self.adj[v as usize].len())
    }

    /// All edges whose endpoints currently have equal degree.
    pub fn conflict_report(&self) -> ConflictReport {
        let ids = self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| self.adj[u as usize].len() == self.adj[v as usize].len())
            .map(|(id, _)| id)
            .collect();
        ConflictReport {
            conflict_edges: EdgeSet::from_sorted(ids),
        }
    }

    /// New graph with the edges of `s` removed. The vertex set (and any
    /// labels) are preserved; vertices may become isolated.
    pub fn delete_edges(&self, s: &EdgeSet) -> Result<Graph> {
        if let Some(&id) = s.iter().find(|&&id| id >= self.edges.len()) {
            return Err(Error::EdgeOutOfRange {
                id,
                m: self.edges.len(),
            });
        }
        let keep: Vec<(u32, u32)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(id, _)| !s.contains(*id))
            .map(|(_, &e)| e)
            .collect();
        Ok(Graph::from_sorted_edges(self.n, keep, self.labels.clone()))
    }

    /// Vertex partition into connected components, each sorted ascending,
    /// components ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        queue.push_back(w as usize);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// BFS distances from a set of source vertices; `None` = unreachable.
    pub fn bfs_multi(&self, sources: impl IntoIterator<Item = usize>) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adj[v] {
                let w = w as usize;
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Distance between two edges: the minimum over endpoint pairs of the
    /// shortest-path distance (0 when the edges share a vertex), `None`
    /// across components.
    pub fn edge_distance(&self, e: usize, f: usize) -> Result<Option<usize>> {
        let m = self.edges.len();
        if e >= m {
            return Err(Error::EdgeOutOfRange { id: e, m });
        }
        if f >= m {
            return Err(Error::EdgeOutOfRange { id: f, m });
        }
        let (a, b) = self.endpoints(e);
        let (x, y) = self.endpoints(f);
        let dist = self.bfs_multi([a, b]);
        Ok(match (dist[x], dist[y]) {
            (Some(p), Some(q)) => Some(p.min(q)),
            (Some(p), None) => Some(p),
            (None, Some(q)) => Some(q),
            (None, None) => None,
        })
    }

    /// Vertices within distance `r` of either endpoint of edge `e`
    /// (the endpoints themselves at `r = 0`). Sorted ascending.
    pub fn ball_vertices(&self, e: usize, r: usize) -> Result<Vec<usize>> {
        let m = self.edges.len();
        if e >= m {
            return Err(Error::EdgeOutOfRange { id: e, m });
        }
        let (a, b) = self.endpoints(e);
        let dist = self.bfs_multi([a, b]);
        Ok((0..self.n)
            .filter(|&v| matches!(dist[v], Some(d) if d <= r))
            .collect())
    }

    /// Induced subgraph on `vertices` (which must be sorted and distinct).
    /// Returns the subgraph plus the map from new ids to original ids;
    /// new ids follow the ascending order of `vertices`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let mut back = vec![usize::MAX; self.n];
        for (new, &old) in vertices.iter().enumerate() {
            back[old] = new;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            let (nu, nv) = (back[u as usize], back[v as usize]);
            if nu != usize::MAX && nv != usize::MAX {
                edges.push((nu as u32, nv as u32));
            }
        }
        edges.sort_unstable();
        (
            Graph::from_sorted_edges(vertices.len(), edges, None),
            vertices.to_vec(),
        )
    }

    /// Two-colouring if the graph is bipartite: `side[v] in {0, 1}`,
    /// colours chosen per component with the smallest vertex on side 0.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    let w = w as usize;
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// True for acyclic graphs (forests), connected or not.
    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.connected_components().len() == self.n
    }
}

/// Canonical (sorted, duplicate-free) set of edge ids of a specific graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeSet {
    ids: Vec<usize>,
}

impl EdgeSet {
    pub fn empty() -> Self {
        EdgeSet { ids: Vec::new() }
    }

    /// Canonicalises an arbitrary id collection: sorts and deduplicates.
    pub fn new(ids: impl IntoIterator<Item = usize>) -> Self {
        let mut ids: Vec<usize> = ids.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        EdgeSet { ids }
    }

    pub(crate) fn from_sorted(ids: Vec<usize>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        EdgeSet { ids }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.ids.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    #[inline]
    pub fn contains(&self, id: usize) -> bool {
        self.ids.binary_search(&id).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.ids.iter()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.ids
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet::new(self.ids.iter().chain(other.ids.iter()).copied())
    }

    /// Endpoint pairs in 1-indexed file coordinates, for reporting.
    pub fn to_file_pairs(&self, g: &Graph) -> Vec<(usize, usize)> {
        self.ids
            .iter()
            .map(|&id| {
                let (u, v) = g.endpoints(id);
                (u + 1, v + 1)
            })
            .collect()
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        EdgeSet::new(iter)
    }
}

/// The edges of a graph whose endpoints have equal degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConflictReport {
    pub conflict_edges: EdgeSet,
}

impl ConflictReport {
    /// Number of conflicting edges.
    pub fn count(&self) -> usize {
        self.conflict_edges.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn degree_basics() {
        let p4 = path(4);
        assert_eq!(p4.degree(0), 1);
        assert_eq!(p4.degree(1), 2);
        let k6 = complete(6);
        for v in 0..6 {
            assert_eq!(k6.degree(v), 5);
        }
    }

    #[test]
    fn degree_of_figure1_centre() {
        let g = generators::figure1();
        // Vertex 0 is one of the two adjacent centres.
        assert_eq!(g.degree(0), 4);
    }

    #[test]
    fn conflicts_on_small_graphs() {
        assert_eq!(cycle(4).conflict_report().count(), 4);
        let p4 = path(4);
        let report = p4.conflict_report();
        assert_eq!(report.count(), 1);
        let id = report.conflict_edges.as_slice()[0];
        assert_eq!(p4.endpoints(id), (1, 2));
        assert_eq!(generators::figure1().conflict_report().count(), 1);
    }

    #[test]
    fn local_irregularity() {
        assert!(path(3).is_locally_irregular());
        assert!(!path(2).is_locally_irregular());
        assert!(Graph::edgeless(5).is_locally_irregular());
    }

    #[test]
    fn deleting_edges() {
        let k2 = path(2);
        let empty = k2.delete_edges(&EdgeSet::new([0])).unwrap();
        assert_eq!(empty.edge_count(), 0);
        assert_eq!(empty.vertex_count(), 2);
        assert!(empty.is_locally_irregular());

        // Removing one edge of a 4-cycle leaves a 4-vertex path.
        let c4 = cycle(4);
        let p = c4.delete_edges(&EdgeSet::new([0])).unwrap();
        assert_eq!(p.edge_count(), 3);
        let mut degs = p.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2]);

        // K3 minus an edge is a locally irregular 3-vertex path.
        let k3 = complete(3);
        let p3 = k3.delete_edges(&EdgeSet::new([0])).unwrap();
        assert!(p3.is_locally_irregular());

        let err = c4.delete_edges(&EdgeSet::new([9])).unwrap_err();
        assert!(matches!(err, Error::EdgeOutOfRange { id: 9, .. }));
    }

    #[test]
    fn components() {
        assert_eq!(path(4).connected_components().len(), 1);
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.connected_components(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(Graph::edgeless(3).connected_components().len(), 3);
    }

    #[test]
    fn edge_distances() {
        let p4 = path(4);
        // Adjacent edges touch.
        assert_eq!(p4.edge_distance(0, 1).unwrap(), Some(0));
        // e1 = (0,1) and e3 = (2,3): their closest endpoints are adjacent.
        assert_eq!(p4.edge_distance(0, 2).unwrap(), Some(1));

        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.edge_distance(0, 1).unwrap(), None);

        assert!(p4.edge_distance(0, 7).is_err());
    }

    #[test]
    fn balls() {
        let p5 = path(5);
        let mid = p5.edge_id(1, 2).unwrap();
        assert_eq!(p5.ball_vertices(mid, 0).unwrap(), vec![1, 2]);
        assert_eq!(p5.ball_vertices(mid, 1).unwrap(), vec![0, 1, 2, 3]);

        let c6 = cycle(6);
        assert_eq!(c6.ball_vertices(0, 2).unwrap().len(), 6);
    }

    #[test]
    fn induced_subgraph_keeps_order() {
        let c4 = cycle(4);
        let (sub, map) = c4.induced_subgraph(&[0, 1, 3]);
        assert_eq!(map, vec![0, 1, 3]);
        assert_eq!(sub.edge_count(), 2); // edges (0,1) and (0,3)
        assert_eq!(sub.degree(0), 2);
    }

    #[test]
    fn bipartition_and_forest_checks() {
        assert!(path(5).bipartition().is_some());
        assert!(cycle(5).bipartition().is_none());
        assert!(cycle(6).bipartition().is_some());
        assert!(path(5).is_forest());
        assert!(!cycle(5).is_forest());
        assert!(Graph::edgeless(3).is_forest());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 5)]).is_err());
    }
}
