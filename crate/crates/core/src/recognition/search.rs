//! Search for a subset `U` making a graph U-threshold.
//!
//! In a U-threshold graph `V ∖ U` is independent, so only complements of
//! independent sets are tried. Isolated vertices never need to be in `U` and
//! are always placed outside it. Candidates are visited by increasing size
//! of `V ∖ U`, lexicographically within a size, and the first success in that
//! order is returned regardless of how many worker threads are used.

use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::recognition::order::{is_u_threshold, ConstructionOrder};

const BATCH: usize = 4096;

/// Limits and parallelism for [`find_special_2threshold_u_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Larger graphs are refused with [`Error::CapabilityExceeded`].
    pub max_vertices: usize,
    /// Worker threads; `None` or `Some(1)` searches on the calling thread.
    pub jobs: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_vertices: 24,
            jobs: None,
        }
    }
}

/// Finds some `U` for which `g` is U-threshold, returning its construction
/// order (which carries `U`), or `None` if `g` is not special 2-threshold.
pub fn find_special_2threshold_u(g: &Graph) -> Result<Option<ConstructionOrder>> {
    find_special_2threshold_u_with(g, SearchConfig::default())
}

pub fn find_special_2threshold_u_with(
    g: &Graph,
    config: SearchConfig,
) -> Result<Option<ConstructionOrder>> {
    let n = g.vertex_count();
    if n > config.max_vertices {
        return Err(Error::CapabilityExceeded {
            what: "special 2-threshold search (vertices)",
            limit: config.max_vertices,
            actual: n,
        });
    }
    match config.jobs {
        Some(j) if j > 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;
            pool.install(|| search(g, true))
        }
        _ => search(g, false),
    }
}

fn search(g: &Graph, parallel: bool) -> Result<Option<ConstructionOrder>> {
    let n = g.vertex_count();
    let isolated: Vec<bool> = (0..=n).map(|v| v > 0 && g.degree(v) == 0).collect();
    let pool: Vec<Vertex> = g.vertices().filter(|&v| !isolated[v]).collect();

    let try_candidate = |s: &[Vertex]| -> Option<ConstructionOrder> {
        let mut out = isolated.clone();
        for &v in s {
            out[v] = true;
        }
        let u: Vec<Vertex> = g.vertices().filter(|&v| !out[v]).collect();
        is_u_threshold(g, &u)
            .expect("vertices in range")
            .into_order()
    };

    let mut batch: Vec<Vec<Vertex>> = Vec::with_capacity(BATCH);
    let mut found = None;
    let mut flush = |batch: &mut Vec<Vec<Vertex>>| -> ControlFlow<()> {
        let hit = if parallel {
            batch.par_iter().find_map_first(|s| try_candidate(s))
        } else {
            batch.iter().find_map(|s| try_candidate(s))
        };
        batch.clear();
        match hit {
            Some(co) => {
                found = Some(co);
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        }
    };

    for k in 0..=pool.len() {
        let mut any = false;
        let mut current = Vec::with_capacity(k);
        let flow = independent_sets(g, &pool, k, 0, &mut current, &mut |s| {
            any = true;
            batch.push(s.to_vec());
            if batch.len() == BATCH {
                flush(&mut batch)
            } else {
                ControlFlow::Continue(())
            }
        });
        if flow.is_break() {
            break;
        }
        if flush(&mut batch).is_break() || !any {
            break;
        }
    }
    Ok(found)
}

/// Visits the independent `k`-subsets of `pool[start..]` in lexicographic
/// order, extending `current`.
fn independent_sets<F>(
    g: &Graph,
    pool: &[Vertex],
    k: usize,
    start: usize,
    current: &mut Vec<Vertex>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    if current.len() == k {
        return visit(current);
    }
    let needed = k - current.len();
    for i in start..pool.len() {
        if pool.len() - i < needed {
            break;
        }
        let v = pool[i];
        if current.iter().any(|&w| g.has_edge(v, w)) {
            continue;
        }
        current.push(v);
        let flow = independent_sets(g, pool, k, i + 1, current, visit);
        current.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig1e_is_special_2threshold() {
        let g = Graph::from_edges(5, [(3, 4), (1, 2), (2, 5), (4, 5), (1, 4), (1, 5)]).unwrap();
        let co = find_special_2threshold_u(&g).unwrap().unwrap();
        co.validate(&g).unwrap();
        assert!(g.is_independent(&complement(&g, co.u_set())).unwrap());
    }

    fn complement(g: &Graph, u: &[Vertex]) -> Vec<Vertex> {
        g.vertices().filter(|v| !u.contains(v)).collect()
    }

    #[test]
    fn c5_and_2k2_are_not() {
        assert_eq!(
            find_special_2threshold_u(&Graph::cycle(5).unwrap()).unwrap(),
            None
        );
        let two_k2 = Graph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(find_special_2threshold_u(&two_k2).unwrap(), None);
    }

    #[test]
    fn threshold_graphs_use_all_non_isolated_vertices() {
        let g = Graph::from_edges(4, [(1, 2), (1, 3), (2, 3)]).unwrap();
        let co = find_special_2threshold_u(&g).unwrap().unwrap();
        assert_eq!(co.u_set(), &[1, 2, 3]);
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = Graph::cycle(4).unwrap();
        let seq = find_special_2threshold_u(&g).unwrap();
        let par = find_special_2threshold_u_with(
            &g,
            SearchConfig {
                jobs: Some(3),
                ..SearchConfig::default()
            },
        )
        .unwrap();
        assert!(seq.is_some());
        assert_eq!(seq, par);
    }

    #[test]
    fn size_cap() {
        let g = Graph::edgeless(30).unwrap();
        assert!(matches!(
            find_special_2threshold_u(&g),
            Err(Error::CapabilityExceeded {
                limit: 24,
                actual: 30,
                ..
            })
        ));
        let small = SearchConfig {
            max_vertices: 3,
            jobs: None,
        };
        assert!(find_special_2threshold_u_with(&Graph::cycle(4).unwrap(), small).is_err());
    }
}
