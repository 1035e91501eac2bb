//! Structural checks that hold in every U-threshold graph.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::recognition::canonical::{threshold_ranks, SideDegrees};

/// A concrete counterexample to one clause.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertices: Vec<Vertex>,
    pub detail: String,
}

/// One entry per clause; `None` means the clause holds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NestingReport {
    /// (a) `V ∖ U` is independent.
    pub complement_independent: Option<Violation>,
    /// (b) neighborhoods of `V ∖ U` vertices form a chain under inclusion.
    pub complement_nested: Option<Violation>,
    /// (c) the `V ∖ U`-neighborhoods of `U` vertices form a chain.
    pub u_nested: Option<Violation>,
    /// (d) if `v` strictly precedes `w` in the threshold order of `G[U]`,
    /// then `N_{V∖U}(v) ⊇ N_{V∖U}(w)`.
    pub reverse_monotone: Option<Violation>,
}

impl NestingReport {
    pub fn all_hold(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn violations(&self) -> impl Iterator<Item = (char, &Violation)> {
        [
            ('a', &self.complement_independent),
            ('b', &self.complement_nested),
            ('c', &self.u_nested),
            ('d', &self.reverse_monotone),
        ]
        .into_iter()
        .filter_map(|(c, v)| v.as_ref().map(|v| (c, v)))
    }
}

fn subset(a: &[Vertex], b: &[Vertex]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

fn first_incomparable(
    vertices: &[Vertex],
    nbhd: impl Fn(Vertex) -> Vec<Vertex>,
    what: &str,
) -> Option<Violation> {
    for (i, &x) in vertices.iter().enumerate() {
        let nx = nbhd(x);
        for &y in &vertices[i + 1..] {
            let ny = nbhd(y);
            if !subset(&nx, &ny) && !subset(&ny, &nx) {
                return Some(Violation {
                    vertices: vec![x, y],
                    detail: format!("{what} of {x} ({nx:?}) and {y} ({ny:?}) are incomparable"),
                });
            }
        }
    }
    None
}

/// Checks the four nesting clauses for `g` and `u`. Requires `G[U]` to be
/// threshold (so that clause (d) is defined); otherwise returns an error.
pub fn nesting_report(g: &Graph, u: &[Vertex]) -> Result<NestingReport> {
    let sd = SideDegrees::new(g, u)?;
    let ranks = threshold_ranks(g, u)?;
    let in_u: Vec<Vertex> = g.vertices().filter(|&v| sd.in_u[v]).collect();
    let out_u: Vec<Vertex> = g.vertices().filter(|&v| !sd.in_u[v]).collect();

    let complement_independent =
        g.edges()
            .find(|&(x, y)| !sd.in_u[x] && !sd.in_u[y])
            .map(|(x, y)| Violation {
                vertices: vec![x, y],
                detail: format!("{x} and {y} are both outside U but adjacent"),
            });

    let complement_nested =
        first_incomparable(&out_u, |v| g.neighbors(v).to_vec(), "neighborhoods");

    let nbhd_out = |v: Vertex| -> Vec<Vertex> {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(|&w| !sd.in_u[w])
            .collect()
    };
    let u_nested = first_incomparable(&in_u, nbhd_out, "neighborhoods outside U");

    let mut reverse_monotone = None;
    'outer: for &v in &in_u {
        for &w in &in_u {
            if ranks[v] < ranks[w] && !subset(&nbhd_out(w), &nbhd_out(v)) {
                reverse_monotone = Some(Violation {
                    vertices: vec![v, w],
                    detail: format!(
                        "{v} precedes {w} in G[U] but its neighborhood outside U ({:?}) \
                         does not contain that of {w} ({:?})",
                        nbhd_out(v),
                        nbhd_out(w)
                    ),
                });
                break 'outer;
            }
        }
    }

    Ok(NestingReport {
        complement_independent,
        complement_nested,
        u_nested,
        reverse_monotone,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PartitionShape;

    #[test]
    fn fig8_satisfies_all_clauses() {
        let g = Graph::from_edges(
            8,
            [
                (1, 2),
                (2, 3),
                (2, 4),
                (2, 5),
                (2, 6),
                (4, 5),
                (3, 8),
                (4, 8),
                (4, 7),
                (5, 7),
                (5, 8),
                (6, 8),
            ],
        )
        .unwrap();
        assert!(nesting_report(&g, &[1, 2, 3, 4, 5, 6]).unwrap().all_hold());
    }

    #[test]
    fn ferrers_with_columns_as_u() {
        let fg = PartitionShape::new(vec![3, 2, 2, 1])
            .unwrap()
            .ferrers_graph();
        let r = nesting_report(&fg.graph, &fg.cols).unwrap();
        assert!(r.complement_independent.is_none());
        assert!(r.all_hold());
    }

    #[test]
    fn edgeless_is_vacuous() {
        let g = Graph::edgeless(4).unwrap();
        assert!(nesting_report(&g, &[]).unwrap().all_hold());
        assert!(nesting_report(&g, &[1, 3]).unwrap().all_hold());
    }

    #[test]
    fn violations_are_reported() {
        // P4 with U = {2, 3}: outside vertices 1 and 4 have disjoint neighborhoods
        let p4 = Graph::path(4).unwrap();
        let r = nesting_report(&p4, &[2, 3]).unwrap();
        assert_eq!(r.complement_nested.as_ref().unwrap().vertices, vec![1, 4]);
        let two_k2 = Graph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        let r = nesting_report(&two_k2, &[1]).unwrap();
        assert_eq!(
            r.complement_independent.as_ref().unwrap().vertices,
            vec![3, 4]
        );
        assert!(nesting_report(&two_k2, &[1, 2, 3, 4]).is_err());
    }
}
