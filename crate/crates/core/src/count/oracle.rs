//! Brute-force spanning tree enumeration.

use std::ops::ControlFlow;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Default cap on the number of edges the oracle will enumerate over.
pub const ORACLE_EDGE_LIMIT: usize = 24;

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..=n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    /// False if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

fn check_limit(g: &Graph, limit: usize) -> Result<()> {
    let m = g.edge_count();
    if m > limit {
        return Err(Error::CapabilityExceeded {
            what: "spanning tree oracle (edges)",
            limit,
            actual: m,
        });
    }
    Ok(())
}

/// `n - 1` edges form a spanning tree iff they contain no cycle.
fn is_tree(n: usize, edges: &[(Vertex, Vertex)], chosen: &[usize]) -> bool {
    let mut uf = UnionFind::new(n);
    chosen.iter().all(|&i| uf.union(edges[i].0, edges[i].1))
}

/// Visits the `k`-subsets of `0..m` whose smallest element is `first`.
fn subsets_from<F>(first: usize, m: usize, k: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut c: Vec<usize> = (first..first + k).collect();
    if k == 0 || c[k - 1] >= m {
        return ControlFlow::Continue(());
    }
    loop {
        visit(&c)?;
        // advance positions 1..k only; c[0] stays fixed
        let Some(i) = (1..k).rev().find(|&i| c[i] < m - (k - i)) else {
            return ControlFlow::Continue(());
        };
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// Calls `visit` with the edge list of every spanning tree of `g`, in
/// lexicographic order of edge indices. Refuses graphs with more than
/// `edge_limit` edges.
pub fn for_each_spanning_tree<F>(g: &Graph, edge_limit: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&[(Vertex, Vertex)]),
{
    check_limit(g, edge_limit)?;
    let n = g.vertex_count();
    if n == 1 {
        visit(&[]);
        return Ok(());
    }
    let edges: Vec<_> = g.edges().collect();
    let mut tree = Vec::with_capacity(n - 1);
    for first in 0..edges.len() {
        let _ = subsets_from(first, edges.len(), n - 1, |chosen| {
            if is_tree(n, &edges, chosen) {
                tree.clear();
                tree.extend(chosen.iter().map(|&i| edges[i]));
                visit(&tree);
            }
            ControlFlow::Continue(())
        });
    }
    Ok(())
}

/// All spanning trees of `g` as edge lists.
pub fn spanning_trees(g: &Graph, edge_limit: usize) -> Result<Vec<Vec<(Vertex, Vertex)>>> {
    let mut out = Vec::new();
    for_each_spanning_tree(g, edge_limit, |t| out.push(t.to_vec()))?;
    Ok(out)
}

/// `τ(G)` by exhaustive enumeration of `(n-1)`-edge subsets, with the
/// default edge limit.
pub fn oracle_count(g: &Graph) -> Result<BigInt> {
    oracle_count_with(g, ORACLE_EDGE_LIMIT)
}

/// As [`oracle_count`] with an explicit edge limit. The subset space is
/// split by smallest edge index across the rayon pool.
pub fn oracle_count_with(g: &Graph, edge_limit: usize) -> Result<BigInt> {
    check_limit(g, edge_limit)?;
    let n = g.vertex_count();
    if n == 1 {
        return Ok(BigInt::from(1));
    }
    let edges: Vec<_> = g.edges().collect();
    let total: u64 = (0..edges.len())
        .into_par_iter()
        .map(|first| {
            let mut count = 0u64;
            let _ = subsets_from(first, edges.len(), n - 1, |chosen| {
                if is_tree(n, &edges, chosen) {
                    count += 1;
                }
                ControlFlow::Continue(())
            });
            count
        })
        .sum();
    Ok(BigInt::from(total))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig1a_has_eleven_trees() {
        let g =
            Graph::from_edges(6, [(1, 2), (1, 4), (2, 3), (2, 5), (2, 6), (4, 5), (5, 6)]).unwrap();
        assert_eq!(oracle_count(&g).unwrap(), BigInt::from(11));
        let trees = spanning_trees(&g, ORACLE_EDGE_LIMIT).unwrap();
        assert_eq!(trees.len(), 11);
        assert!(trees.iter().all(|t| t.len() == 5));
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(
            oracle_count(&Graph::path(6).unwrap()).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            oracle_count(&Graph::edgeless(1).unwrap()).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            oracle_count(&Graph::edgeless(3).unwrap()).unwrap(),
            BigInt::from(0)
        );
        let two_k2 = Graph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(oracle_count(&two_k2).unwrap(), BigInt::from(0));
        assert_eq!(
            oracle_count(&Graph::complete(4).unwrap()).unwrap(),
            BigInt::from(16)
        );
        assert_eq!(
            oracle_count(&Graph::cycle(7).unwrap()).unwrap(),
            BigInt::from(7)
        );
    }

    #[test]
    fn edge_guard() {
        let k8 = Graph::complete(8).unwrap();
        assert!(matches!(
            oracle_count(&k8),
            Err(Error::CapabilityExceeded {
                limit: 24,
                actual: 28,
                ..
            })
        ));
        assert_eq!(oracle_count_with(&k8, 28).unwrap(), BigInt::from(262144));
    }
}
