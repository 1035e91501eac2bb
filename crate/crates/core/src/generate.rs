//! Graph and partition generators for sweeps, property tests and examples.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, PartitionShape, Vertex};
use crate::recognition::next_permutation;

/// Every labeled graph on `1..=n` (`2^{n(n-1)/2}` of them), in order of
/// their edge bitmask.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(
        (1..=11).contains(&n),
        "labeled enumeration supports 1..=11 vertices"
    );
    let pairs: Vec<(Vertex, Vertex)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("valid")
    })
}

fn pair_bit(i: usize, j: usize) -> u32 {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    (b * (b - 1) / 2 + a) as u32
}

/// An isomorphism-invariant key: the smallest adjacency bitmask over all
/// relabelings that sort vertices by a degree-based invariant.
pub fn canonical_form(g: &Graph) -> u64 {
    let n = g.vertex_count();
    assert!(n <= 11, "canonical form supports at most 11 vertices");
    let invariant = |v: Vertex| {
        let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let mut verts: Vec<Vertex> = g.vertices().collect();
    verts.sort_by_key(|&v| invariant(v));
    let mut cells: Vec<Vec<Vertex>> = Vec::new();
    for v in verts {
        match cells.last_mut() {
            Some(c) if invariant(c[0]) == invariant(v) => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut perms: Vec<Vec<usize>> = cells.iter().map(|c| (0..c.len()).collect()).collect();
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let mut label = vec![0usize; n + 1];
    let mut best = u64::MAX;
    loop {
        let mut pos = 0;
        for (cell, perm) in cells.iter().zip(&perms) {
            for &i in perm {
                label[cell[i]] = pos;
                pos += 1;
            }
        }
        let mask = edges
            .iter()
            .fold(0u64, |m, &(u, v)| m | 1 << pair_bit(label[u], label[v]));
        best = best.min(mask);
        // odometer over the per-cell permutations
        let mut k = 0;
        loop {
            if k == perms.len() {
                return best;
            }
            if next_permutation(&mut perms[k]) {
                break;
            }
            perms[k].sort_unstable();
            k += 1;
        }
    }
}

/// One representative of every isomorphism class of graphs on `n`
/// vertices (1044 classes for `n = 7`).
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    assert!((1..=9).contains(&n), "supports 1..=9 vertices");
    let mut reps = vec![Graph::edgeless(1).expect("one vertex")];
    for k in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &reps {
            let old: Vec<(Vertex, Vertex)> = g.edges().collect();
            for mask in 0u32..1 << (k - 1) {
                let mut edges = old.clone();
                edges.extend((1..k).filter(|&v| mask >> (v - 1) & 1 == 1).map(|v| (v, k)));
                let h = Graph::from_edges(k, edges).expect("valid");
                if seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        reps = next;
    }
    reps
}

/// Connected representatives, one per isomorphism class.
pub fn connected_graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    graphs_up_to_isomorphism(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid")
}

/// A random U-threshold graph built from a random construction order: a
/// random vertex sequence, each vertex in `U` with probability `p_u`, each
/// later vertex entering isolated or U-dominating with equal probability.
/// Returns the graph, `U` (ascending) and the order used.
pub fn random_u_threshold<R: Rng + ?Sized>(
    n: usize,
    p_u: f64,
    rng: &mut R,
) -> (Graph, Vec<Vertex>, Vec<Vertex>) {
    let mut order: Vec<Vertex> = (1..=n).collect();
    order.shuffle(rng);
    let in_u: Vec<bool> = (0..=n).map(|_| rng.gen_bool(p_u)).collect();
    let mut edges = Vec::new();
    for (i, &v) in order.iter().enumerate().skip(1) {
        if rng.gen_bool(0.5) {
            edges.extend(
                order[..i]
                    .iter()
                    .filter(|&&w| in_u[w])
                    .map(|&w| (v.min(w), v.max(w))),
            );
        }
    }
    let g = Graph::from_edges(n, edges).expect("valid");
    let u = (1..=n).filter(|&v| in_u[v]).collect();
    (g, u, order)
}

/// A random threshold graph (a U-threshold graph with `U = V`).
pub fn random_threshold<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    random_u_threshold(n, 1.0, rng).0
}

/// A random partition of a size drawn uniformly from `1..=max_size`.
pub fn random_shape<R: Rng + ?Sized>(max_size: usize, rng: &mut R) -> PartitionShape {
    let mut remaining = rng.gen_range(1..=max_size);
    let mut parts = Vec::new();
    let mut cap = remaining;
    while remaining > 0 {
        let p = rng.gen_range(1..=cap.min(remaining));
        parts.push(p);
        remaining -= p;
        cap = p;
    }
    PartitionShape::new(parts).expect("weakly decreasing positive parts")
}

/// Every partition of `size`, in reverse lexicographic order.
pub fn partitions(size: usize) -> Vec<PartitionShape> {
    fn go(remaining: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<PartitionShape>) {
        if remaining == 0 {
            out.push(PartitionShape::new(current.clone()).expect("valid"));
            return;
        }
        for p in (1..=cap.min(remaining)).rev() {
            current.push(p);
            go(remaining - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if size > 0 {
        go(size, size, &mut Vec::new(), &mut out);
    }
    out
}
