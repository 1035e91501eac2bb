//! The canonical class order of a U-threshold graph.
//!
//! Vertices are grouped by side (`U` or not), degree into `U` and degree into
//! `V ∖ U`; the classes are totally ordered and every order listing the
//! classes in sequence (members in any order) is a construction order.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::recognition::order::{is_threshold, is_u_threshold, ConstructionOrder};

/// Degree data for a vertex subset `U`.
#[derive(Debug, Clone)]
pub(crate) struct SideDegrees {
    pub in_u: Vec<bool>,
    pub deg_u: Vec<usize>,
    pub deg_uc: Vec<usize>,
}

impl SideDegrees {
    pub fn new(g: &Graph, u: &[Vertex]) -> Result<Self> {
        let n = g.vertex_count();
        let in_u = g.vertex_mask(u)?;
        let mut deg_u = vec![0; n + 1];
        let mut deg_uc = vec![0; n + 1];
        for v in g.vertices() {
            deg_u[v] = g.degree_into(v, &in_u);
            deg_uc[v] = g.degree(v) - deg_u[v];
        }
        Ok(SideDegrees {
            in_u,
            deg_u,
            deg_uc,
        })
    }
}

/// Rank of each `U`-vertex in the threshold order of `G[U]`: vertices of
/// equal degree in `G[U]` share a rank and ranks follow a construction order
/// of `G[U]`. Entries for vertices outside `U` are `None`.
pub(crate) fn threshold_ranks(g: &Graph, u: &[Vertex]) -> Result<Vec<Option<usize>>> {
    let n = g.vertex_count();
    let mut ranks = vec![None; n + 1];
    let mut u_sorted = u.to_vec();
    u_sorted.sort_unstable();
    u_sorted.dedup();
    if u_sorted.is_empty() {
        return Ok(ranks);
    }
    let sub = g.induced_subgraph(&u_sorted)?;
    let co = is_threshold(&sub.graph)
        .into_order()
        .ok_or_else(|| Error::Precondition("the subgraph induced by U is not threshold".into()))?;
    let mut degree_rank: Vec<Option<usize>> = vec![None; sub.graph.vertex_count()];
    let mut next = 0;
    let mut last_degree = None;
    for &local in co.order() {
        let d = sub.graph.degree(local);
        if last_degree != Some(d) {
            if degree_rank[d].is_some() {
                return Err(Error::InvalidConstructionOrder(format!(
                    "vertices of degree {d} in G[U] are not contiguous in its threshold order"
                )));
            }
            degree_rank[d] = Some(next);
            next += 1;
            last_degree = Some(d);
        }
        ranks[sub.parent_label(local)] = degree_rank[d];
    }
    Ok(ranks)
}

/// Classes in canonical order plus the construction order they induce.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalOrder {
    /// Each class ascending; classes in increasing order.
    pub classes: Vec<Vec<Vertex>>,
    pub order: ConstructionOrder,
}

/// Computes the canonical class order of `g` with respect to `u`. Fails
/// unless `g` is U-threshold.
pub fn canonical_order(g: &Graph, u: &[Vertex]) -> Result<CanonicalOrder> {
    if !is_u_threshold(g, u)?.is_success() {
        return Err(Error::Precondition(
            "graph is not U-threshold for the given U".into(),
        ));
    }
    let sd = SideDegrees::new(g, u)?;
    let ranks = threshold_ranks(g, u)?;

    let mut keys: Vec<(bool, usize, usize)> = Vec::new();
    let mut classes: Vec<Vec<Vertex>> = Vec::new();
    for v in g.vertices() {
        let key = (sd.in_u[v], sd.deg_u[v], sd.deg_uc[v]);
        match keys.iter().position(|&k| k == key) {
            Some(i) => classes[i].push(v),
            None => {
                keys.push(key);
                classes.push(vec![v]);
            }
        }
    }

    // x ⊴ y on class representatives
    let precedes = |x: Vertex, y: Vertex| -> bool {
        match (sd.in_u[x], sd.in_u[y]) {
            (true, true) => ranks[x] <= ranks[y] && sd.deg_uc[x] >= sd.deg_uc[y],
            (true, false) => g.has_edge(x, y),
            (false, true) => !g.has_edge(x, y),
            (false, false) => sd.deg_u[x] <= sd.deg_u[y],
        }
    };

    let k = classes.len();
    let mut scores = Vec::with_capacity(k);
    for i in 0..k {
        let mut score = 0;
        for j in 0..k {
            if i == j {
                continue;
            }
            let (x, y) = (classes[i][0], classes[j][0]);
            let (xy, yx) = (precedes(x, y), precedes(y, x));
            if xy == yx {
                return Err(Error::InvalidConstructionOrder(format!(
                    "class comparison between {x} and {y} is not a strict total order"
                )));
            }
            if xy {
                score += 1;
            }
        }
        scores.push(score);
    }
    let mut scored: Vec<(usize, Vec<Vertex>)> = scores.into_iter().zip(classes).collect();
    scored.sort_by_key(|s| std::cmp::Reverse(s.0));
    if scored.iter().enumerate().any(|(i, (s, _))| *s != k - 1 - i) {
        return Err(Error::InvalidConstructionOrder(
            "class comparison is not transitive".into(),
        ));
    }
    let classes: Vec<Vec<Vertex>> = scored.into_iter().map(|(_, c)| c).collect();
    let flat: Vec<Vertex> = classes.iter().flatten().copied().collect();
    let order = ConstructionOrder::from_order(g, &flat, u)?;
    Ok(CanonicalOrder { classes, order })
}
