//! Deterministic and seeded constructions for every graph family the
//! toolkit operates on, plus isomorphism-free enumeration of small trees.

use std::collections::VecDeque;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::closed_forms;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A reproducible description of a generated instance: the same spec always
/// yields the same graph.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    /// Spider: one centre with paths ("legs") of the given lengths.
    StarSubdivision {
        legs: Vec<usize>,
    },
    /// Two centres joined by a path of `bridge` edges, each centre carrying
    /// its own legs.
    BistarSubdivision {
        legs_a: Vec<usize>,
        legs_b: Vec<usize>,
        bridge: usize,
    },
    RandomTree {
        n: usize,
        seed: u64,
    },
    RandomConnected {
        n: usize,
        p: f64,
        seed: u64,
    },
    /// Replace every edge `uv` of the base graph by a 3-edge path `u-a-b-v`.
    DoubleSubdivision {
        base: Box<FamilySpec>,
    },
    /// Two adjacent degree-4 centres, six degree-5 midpoints, four pendant
    /// leaves per midpoint; its single conflict sits between the centres.
    Figure1,
    /// Layered dense locally irregular graph on the k-th triangular number
    /// of vertices.
    TriangularLayered {
        k: usize,
    },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path { n } => write!(f, "path(n={n})"),
            FamilySpec::Cycle { n } => write!(f, "cycle(n={n})"),
            FamilySpec::Complete { n } => write!(f, "complete(n={n})"),
            FamilySpec::CompleteBipartite { a, b } => write!(f, "complete_bipartite(a={a},b={b})"),
            FamilySpec::StarSubdivision { legs } => {
                write!(f, "star_subdivision(legs={})", join(legs))
            }
            FamilySpec::BistarSubdivision {
                legs_a,
                legs_b,
                bridge,
            } => write!(
                f,
                "bistar_subdivision(legs_a={},legs_b={},bridge={bridge})",
                join(legs_a),
                join(legs_b)
            ),
            FamilySpec::RandomTree { n, seed } => write!(f, "random_tree(n={n},seed={seed})"),
            FamilySpec::RandomConnected { n, p, seed } => {
                write!(f, "random_connected(n={n},p={p},seed={seed})")
            }
            FamilySpec::DoubleSubdivision { base } => write!(f, "double_subdivision({base})"),
            FamilySpec::Figure1 => write!(f, "figure1"),
            FamilySpec::TriangularLayered { k } => write!(f, "t_k(k={k})"),
        }
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Builds the graph described by `spec`.
pub fn gen(spec: &FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Path { n } => path(*n),
        FamilySpec::Cycle { n } => cycle(*n),
        FamilySpec::Complete { n } => complete(*n),
        FamilySpec::CompleteBipartite { a, b } => complete_bipartite(*a, *b),
        FamilySpec::StarSubdivision { legs } => star_subdivision(legs),
        FamilySpec::BistarSubdivision {
            legs_a,
            legs_b,
            bridge,
        } => bistar_subdivision(legs_a, legs_b, *bridge),
        FamilySpec::RandomTree { n, seed } => random_tree(*n, *seed),
        FamilySpec::RandomConnected { n, p, seed } => random_connected(*n, *p, *seed),
        FamilySpec::DoubleSubdivision { base } => {
            let h = gen(base)?;
            Ok(double_subdivision(&h))
        }
        FamilySpec::Figure1 => Ok(figure1()),
        FamilySpec::TriangularLayered { k } => closed_forms::build_t_k(*k),
    }
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::OrderTooSmall { min: 1, got: n });
    }
    Graph::from_edges(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::OrderTooSmall { min: 3, got: n });
    }
    let edges = (0..n - 1).map(|i| (i, i + 1)).chain([(0, n - 1)]);
    Graph::from_edges(n, edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::OrderTooSmall { min: 1, got: n });
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges)
}

/// Sides occupy ids `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(Error::OrderTooSmall {
            min: 1,
            got: a.min(b),
        });
    }
    let edges = (0..a).flat_map(|u| (0..b).map(move |j| (u, a + j)));
    Graph::from_edges(a + b, edges)
}

/// Centre vertex 0; leg `i` occupies the next `legs[i]` ids outward.
pub fn star_subdivision(legs: &[usize]) -> Result<Graph> {
    if legs.contains(&0) {
        return Err(Error::Generator("legs must have length at least 1".into()));
    }
    let n = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Centres 0 and 1 joined by a path of `bridge` edges; legs as for the
/// spider, first around centre 0 then centre 1.
pub fn bistar_subdivision(legs_a: &[usize], legs_b: &[usize], bridge: usize) -> Result<Graph> {
    if bridge == 0 {
        return Err(Error::Generator(
            "bridge must have length at least 1".into(),
        ));
    }
    if legs_a.iter().chain(legs_b).any(|&l| l == 0) {
        return Err(Error::Generator("legs must have length at least 1".into()));
    }
    let n = 2 + (bridge - 1) + legs_a.iter().sum::<usize>() + legs_b.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 2;
    // Bridge path from centre 0 to centre 1.
    let mut prev = 0;
    for _ in 0..bridge - 1 {
        edges.push((prev, next));
        prev = next;
        next += 1;
    }
    edges.push((prev, 1));
    for (centre, legs) in [(0, legs_a), (1, legs_b)] {
        for &len in legs {
            let mut prev = centre;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Uniform random labelled tree, decoded from a random generating sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::OrderTooSmall { min: 1, got: n });
    }
    if n == 1 {
        return Ok(Graph::edgeless(1));
    }
    if n == 2 {
        return Graph::from_edges(2, [(0, 1)]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Ok(tree_from_sequence(n, &seq))
}

/// Prufer-style decoding: `seq` has length `n - 2` over `0..n`.
fn tree_from_sequence(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // Min-heap over current leaves keeps the decoding canonical.
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &s in seq {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("leaf available");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(std::cmp::Reverse(s));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().unwrap();
    let std::cmp::Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    Graph::from_edges(n, edges).expect("decoded tree is simple")
}

const CONNECTED_RETRIES: usize = 1000;

/// Binomial random graph conditioned on connectivity by rejection; errors
/// out after a bounded number of attempts rather than adjusting density.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::OrderTooSmall { min: 1, got: n });
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Generator(format!("probability {p} out of [0,1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..CONNECTED_RETRIES {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::Generator(format!(
        "no connected sample for n={n}, p={p} after {CONNECTED_RETRIES} attempts"
    )))
}

/// Random connected graph with all degrees at most `max_degree`: a random
/// tree respecting the cap, plus up to `extra_edges` random chords that keep
/// respecting it.
pub fn random_connected_max_degree(
    n: usize,
    max_degree: usize,
    extra_edges: usize,
    seed: u64,
) -> Result<Graph> {
    if max_degree < 2 && n > 2 {
        return Err(Error::Generator(
            "max_degree below 2 only fits tiny graphs".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n <= 2 {
        return if n == 1 {
            Ok(Graph::edgeless(1))
        } else {
            Graph::from_edges(2, [(0, 1)])
        };
    }
    for _ in 0..CONNECTED_RETRIES {
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        let tree = tree_from_sequence(n, &seq);
        if tree.max_degree() > max_degree {
            continue;
        }
        let mut edges: Vec<(usize, usize)> = tree
            .edges()
            .iter()
            .map(|&(u, v)| (u as usize, v as usize))
            .collect();
        let mut deg = tree.degrees();
        let mut added = 0;
        for _ in 0..4 * extra_edges {
            if added == extra_edges {
                break;
            }
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v || deg[u] >= max_degree || deg[v] >= max_degree {
                continue;
            }
            let pair = (u.min(v), u.max(v));
            if edges.contains(&pair) {
                continue;
            }
            edges.push(pair);
            deg[u] += 1;
            deg[v] += 1;
            added += 1;
        }
        return Graph::from_edges(n, edges);
    }
    Err(Error::Generator(format!(
        "no tree with max degree {max_degree} for n={n} after {CONNECTED_RETRIES} attempts"
    )))
}

/// Replaces each edge `uv` of `h` (taken in id order) by the path
/// `u - a - b - v`; the pair `(a, b)` for edge `i` occupies ids
/// `n + 2i` and `n + 2i + 1`.
pub fn double_subdivision(h: &Graph) -> Graph {
    let n = h.vertex_count();
    let mut edges = Vec::with_capacity(3 * h.edge_count());
    for (i, &(u, v)) in h.edges().iter().enumerate() {
        let a = n + 2 * i;
        let b = a + 1;
        edges.push((u as usize, a));
        edges.push((a, b));
        edges.push((b, v as usize));
    }
    Graph::from_edges(n + 2 * h.edge_count(), edges).expect("subdivision is simple")
}

/// The 32-vertex witness that the conflict-count lower bound can be tight:
/// centres 0 and 1 (degree 4, in conflict with each other), midpoints 2..8
/// (degree 5), and four leaves per midpoint.
pub fn figure1() -> Graph {
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)];
    let mut next = 8;
    for mid in 2..8 {
        for _ in 0..4 {
            edges.push((mid, next));
            next += 1;
        }
    }
    Graph::from_edges(32, edges).expect("figure1 is simple")
}

// ---------------------------------------------------------------------------
// Isomorphism-free enumeration of small trees.
// ---------------------------------------------------------------------------

/// All free (unrooted, non-isomorphic) trees on exactly `n` vertices,
/// each as a concrete labelled graph, ordered by canonical code.
pub fn all_free_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1, "trees need at least one vertex");
    // Rooted trees by size, as child-index lists into the previous layers.
    let rooted = rooted_trees_up_to(n);
    let mut seen = std::collections::BTreeMap::new();
    for tree in &rooted[n] {
        let g = rooted_to_graph(tree, &rooted);
        let code = free_canonical_code(&g);
        seen.entry(code).or_insert(g);
    }
    seen.into_values().collect()
}

/// A rooted tree is a multiset of child subtrees, stored as (size, index)
/// references into the table of smaller rooted trees.
#[derive(Debug, Clone)]
struct Rooted {
    children: Vec<(usize, usize)>,
    size: usize,
}

fn rooted_trees_up_to(n: usize) -> Vec<Vec<Rooted>> {
    let mut table: Vec<Vec<Rooted>> = vec![Vec::new(); n + 1];
    if n >= 1 {
        table[1].push(Rooted {
            children: Vec::new(),
            size: 1,
        });
    }
    for size in 2..=n {
        let mut out = Vec::new();
        // Children multisets are non-increasing in (size, index), which
        // makes each multiset appear exactly once.
        let max_ref = (size - 1, table[size - 1].len().saturating_sub(1));
        collect_children(&table, size - 1, max_ref, &mut Vec::new(), &mut out);
        table[size] = out
            .into_iter()
            .map(|children| Rooted { children, size })
            .collect();
    }
    table
}

fn collect_children(
    table: &[Vec<Rooted>],
    remaining: usize,
    max_ref: (usize, usize),
    acc: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if remaining == 0 {
        out.push(acc.clone());
        return;
    }
    let top_size = remaining.min(max_ref.0);
    for size in (1..=top_size).rev() {
        let start_idx = if size == max_ref.0 {
            max_ref.1
        } else {
            table[size].len() - 1
        };
        for idx in (0..=start_idx).rev() {
            acc.push((size, idx));
            collect_children(table, remaining - size, (size, idx), acc, out);
            acc.pop();
        }
    }
}

fn rooted_to_graph(tree: &Rooted, table: &[Vec<Rooted>]) -> Graph {
    let mut edges = Vec::with_capacity(tree.size - 1);
    let mut next = 1;
    let mut stack: Vec<(usize, &Rooted)> = vec![(0, tree)];
    while let Some((id, node)) = stack.pop() {
        for &(csize, cidx) in &node.children {
            let child = &table[csize][cidx];
            edges.push((id, next));
            let child_id = next;
            next += 1;
            // Reserve the child's subtree ids before moving on.
            stack.push((child_id, child));
            // `next` advances as the stack unwinds; ids stay unique.
        }
    }
    Graph::from_edges(tree.size, edges).expect("rooted tree is simple")
}

/// Canonical code of a free tree: minimum rooted code over its centre(s).
pub(crate) fn free_canonical_code(g: &Graph) -> String {
    centres(g)
        .into_iter()
        .map(|c| rooted_code(g, c))
        .min()
        .expect("tree has a centre")
}

fn rooted_code(g: &Graph, root: usize) -> String {
    // Iterative post-order; children codes are sorted before concatenation.
    fn rec(g: &Graph, v: usize, parent: Option<usize>) -> String {
        let mut parts: Vec<String> = g
            .neighbours(v)
            .iter()
            .map(|&w| w as usize)
            .filter(|&w| Some(w) != parent)
            .map(|w| rec(g, w, Some(v)))
            .collect();
        parts.sort();
        format!("({})", parts.concat())
    }
    rec(g, root, None)
}

/// Centre(s) of a tree by repeated leaf stripping (one or two vertices).
fn centres(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree = g.degrees();
    let mut removed = vec![false; n];
    let mut layer: VecDeque<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = VecDeque::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &w in g.neighbours(v) {
                let w = w as usize;
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push_back(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}
