//! Constant-time formulas with constructive certificates: paths, cycles,
//! complete bipartite graphs, and complete graphs of triangular order.

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};

/// Minimum deletions for the n-vertex path.
pub fn ie_path(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::OrderTooSmall { min: 2, got: n });
    }
    let m = n - 1;
    Ok(match n % 3 {
        1 => m / 3,
        2 => m.div_ceil(3),
        _ => m / 3,
    })
}

/// Deletion set for the canonical path `0-1-...-n-1`: every third edge from
/// vertex 0 onwards, plus the final edge when one trailing edge would remain.
/// Edge `i` of the walk (1-based) has id `i - 1`.
pub fn path_certificate(n: usize) -> EdgeSet {
    assert!(n >= 2, "paths need at least two vertices");
    let m = n - 1;
    let mut ids: Vec<usize> = (1..)
        .map(|j| 3 * j)
        .take_while(|&pos| pos <= m)
        .map(|pos| pos - 1)
        .collect();
    if m % 3 == 1 {
        ids.push(m - 1);
    }
    EdgeSet::new(ids)
}

/// Minimum deletions for the n-vertex cycle: one more than for the path.
pub fn ie_cycle(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::OrderTooSmall { min: 3, got: n });
    }
    Ok(ie_path(n)? + 1)
}

/// Deletion set for the canonical cycle (`generators::cycle`): opens the
/// cycle at edge `(0, n-1)` and then treats `0-1-...-n-1` as a path.
pub fn cycle_certificate(n: usize) -> EdgeSet {
    assert!(n >= 3, "cycles need at least three vertices");
    // Sorted edge list of the canonical cycle: (0,1) id 0, (0,n-1) id 1,
    // then (i-1,i) has id i for i >= 2.
    let mut ids = vec![1];
    for &pid in path_certificate(n).iter() {
        let walk_pos = pid + 1; // 1-based edge position along the path
        ids.push(if walk_pos == 1 { 0 } else { walk_pos });
    }
    EdgeSet::new(ids)
}

/// Value and certificate for the complete bipartite graph with sides of
/// size `a` and `b` in the canonical layout (`generators::complete_bipartite`).
/// Unequal sides need no deletions; equal sides lose every edge at vertex 0.
pub fn ie_complete_bipartite(a: usize, b: usize) -> Result<(usize, EdgeSet)> {
    if a < 1 || b < 1 {
        return Err(Error::OrderTooSmall {
            min: 1,
            got: a.min(b),
        });
    }
    if a != b {
        return Ok((0, EdgeSet::empty()));
    }
    // Vertex 0's edges are ids 0..b in the lexicographically sorted edge list.
    Ok((a, EdgeSet::new(0..b)))
}

/// Index `k` such that `n = k (k + 1) / 2`, when `n` is triangular.
pub fn triangular_index(n: usize) -> Option<usize> {
    if n < 1 {
        return None;
    }
    let mut k = 0usize;
    let mut total = 0usize;
    while total < n {
        k += 1;
        total += k;
    }
    (total == n).then_some(k)
}

/// The k-th triangular number and the maximum edge count of a locally
/// irregular graph of that order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangularDecomposition {
    pub k: usize,
    pub max_edges: u64,
}

pub fn triangular_decomposition(n: usize) -> Option<TriangularDecomposition> {
    triangular_index(n).map(|k| TriangularDecomposition {
        k,
        max_edges: max_irregular_edges(k),
    })
}

/// `k (k + 1) (k - 1) (3k + 2) / 24`, the edge count of the layered graph
/// below; integer-exact (the numerator is always divisible by 24).
pub fn max_irregular_edges(k: usize) -> u64 {
    let k = k as u128;
    let numerator = k * (k + 1) * (k.saturating_sub(1)) * (3 * k + 2);
    debug_assert_eq!(numerator % 24, 0);
    u64::try_from(numerator / 24).expect("edge count fits in u64")
}

/// Densest locally irregular graph on `t_k` vertices: layer `i` (1-based)
/// occupies the next `i` ids and every pair of vertices from different
/// layers is joined. Layer sizes force the degree multiset
/// {one of n-1, two of n-2, ..., k of n-k}.
pub fn build_t_k(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::OrderTooSmall { min: 1, got: k });
    }
    let n = k * (k + 1) / 2;
    let layer_of = layer_assignment(k);
    let edges = (0..n).flat_map(|u| {
        let layer_of = &layer_of;
        (u + 1..n).filter_map(move |v| (layer_of[u] != layer_of[v]).then_some((u, v)))
    });
    Graph::from_edges(n, edges)
}

fn layer_assignment(k: usize) -> Vec<usize> {
    let mut layer_of = Vec::with_capacity(k * (k + 1) / 2);
    for layer in 1..=k {
        layer_of.extend(std::iter::repeat_n(layer, layer));
    }
    layer_of
}

/// Exact value for the complete graph on a triangular number of vertices,
/// with the certificate `E(K_n) \ E(T_k)`: all pairs inside a layer.
pub fn ie_complete_triangular(n: usize) -> Result<(usize, EdgeSet)> {
    let decomp = triangular_decomposition(n).ok_or(Error::NotTriangular { n })?;
    let total = n * (n - 1) / 2;
    let value = total - decomp.max_edges as usize;
    let layer_of = layer_assignment(decomp.k);
    let ids = (0..n).flat_map(|u| {
        let layer_of = &layer_of;
        (u + 1..n)
            .filter(move |&v| layer_of[u] == layer_of[v])
            .map(move |v| complete_edge_id(n, u, v))
    });
    let certificate = EdgeSet::new(ids);
    debug_assert_eq!(certificate.len(), value);
    Ok((value, certificate))
}

/// Id of edge `(u, v)` (`u < v`) in the lexicographically sorted edge list
/// of the complete graph on `n` vertices.
fn complete_edge_id(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * n - u * (u + 1) / 2 + v - u - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::oracle;

    #[test]
    fn path_values() {
        assert_eq!(ie_path(3).unwrap(), 0);
        assert_eq!(ie_path(2).unwrap(), 1);
        assert_eq!(ie_path(6).unwrap(), 1);
        assert!(ie_path(1).is_err());
    }

    #[test]
    fn path_certificates_match_value_and_verify() {
        assert_eq!(path_certificate(4).as_slice(), &[2]);
        assert!(path_certificate(3).is_empty());
        assert_eq!(path_certificate(8).as_slice(), &[2, 5, 6]);
        for n in 2..=16 {
            let cert = path_certificate(n);
            assert_eq!(cert.len(), ie_path(n).unwrap(), "size at n={n}");
            let g = generators::path(n).unwrap();
            assert!(
                g.delete_edges(&cert).unwrap().is_locally_irregular(),
                "n={n}"
            );
        }
    }

    #[test]
    fn cycle_values_and_certificates() {
        assert_eq!(ie_cycle(4).unwrap(), 2);
        assert_eq!(ie_cycle(3).unwrap(), 1);
        assert_eq!(ie_cycle(5).unwrap(), 3);
        for n in 3..=16 {
            let cert = cycle_certificate(n);
            assert_eq!(cert.len(), ie_cycle(n).unwrap(), "size at n={n}");
            let g = generators::cycle(n).unwrap();
            assert!(
                g.delete_edges(&cert).unwrap().is_locally_irregular(),
                "n={n}"
            );
        }
    }

    #[test]
    fn complete_bipartite_values() {
        assert_eq!(ie_complete_bipartite(2, 3).unwrap().0, 0);
        let (v, cert) = ie_complete_bipartite(3, 3).unwrap();
        assert_eq!(v, 3);
        let g = generators::complete_bipartite(3, 3).unwrap();
        assert!(g.delete_edges(&cert).unwrap().is_locally_irregular());
        assert_eq!(ie_complete_bipartite(1, 1).unwrap().0, 1);
    }

    #[test]
    fn triangular_indices() {
        assert_eq!(triangular_index(6), Some(3));
        assert_eq!(triangular_index(10), Some(4));
        assert_eq!(triangular_index(7), None);
        assert_eq!(triangular_index(1), Some(1));
    }

    #[test]
    fn layered_construction_shape() {
        let t1 = build_t_k(1).unwrap();
        assert_eq!((t1.vertex_count(), t1.edge_count()), (1, 0));

        // k = 2 gives a 3-vertex path through the layer-1 vertex.
        let t2 = build_t_k(2).unwrap();
        let mut degs = t2.degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2]);

        let t3 = build_t_k(3).unwrap();
        assert_eq!((t3.vertex_count(), t3.edge_count()), (6, 11));
        let mut degs = t3.degrees();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degs, vec![5, 4, 4, 3, 3, 3]);
        assert!(t3.is_locally_irregular());
    }

    #[test]
    fn layered_graphs_hit_the_edge_formula() {
        for k in 1..=30 {
            let g = build_t_k(k).unwrap();
            assert!(g.is_locally_irregular(), "k={k}");
            assert_eq!(g.edge_count() as u64, max_irregular_edges(k), "k={k}");
        }
    }

    #[test]
    fn complete_triangular_values() {
        assert_eq!(ie_complete_triangular(3).unwrap().0, 1);
        assert_eq!(ie_complete_triangular(6).unwrap().0, 4);
        let (v, cert) = ie_complete_triangular(10).unwrap();
        assert_eq!(v, 10);
        let k10 = generators::complete(10).unwrap();
        let reduced = k10.delete_edges(&cert).unwrap();
        assert!(reduced.is_locally_irregular());
        assert!(matches!(
            ie_complete_triangular(7),
            Err(Error::NotTriangular { n: 7 })
        ));
    }

    #[test]
    fn small_formulas_agree_with_the_oracle() {
        for n in 2..=9 {
            let g = generators::path(n).unwrap();
            assert_eq!(ie_path(n).unwrap(), oracle::solve_exact(&g).unwrap().value);
        }
        for n in 3..=9 {
            let g = generators::cycle(n).unwrap();
            assert_eq!(ie_cycle(n).unwrap(), oracle::solve_exact(&g).unwrap().value);
        }
    }

    #[test]
    fn all_small_bipartite_pairs_agree_with_the_oracle() {
        for a in 1..=4 {
            for b in a..=4 {
                let g = generators::complete_bipartite(a, b).unwrap();
                let (value, cert) = ie_complete_bipartite(a, b).unwrap();
                assert_eq!(
                    value,
                    oracle::solve_exact(&g).unwrap().value,
                    "K{{{a},{b}}}"
                );
                assert_eq!(cert.len(), value);
                assert!(g.delete_edges(&cert).unwrap().is_locally_irregular());
            }
        }
    }

    #[test]
    fn triangular_orders_agree_with_the_oracle() {
        for n in [1, 3, 6] {
            let g = generators::complete(n).unwrap();
            assert_eq!(
                ie_complete_triangular(n).unwrap().0,
                oracle::solve_exact(&g).unwrap().value,
                "K{n}"
            );
        }
    }

    #[test]
    fn complete_edge_ids_match_the_sorted_list() {
        let k6 = generators::complete(6).unwrap();
        for (id, &(u, v)) in k6.edges().iter().enumerate() {
            assert_eq!(complete_edge_id(6, u as usize, v as usize), id);
        }
    }
}
