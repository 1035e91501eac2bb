//! Forbidden induced subgraphs for the threshold, special 2-threshold and
//! Ferrers families.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// The small graphs whose induced presence rules out family membership.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Pattern {
    #[serde(rename = "2K2")]
    TwoK2,
    P4,
    C4,
    C5,
    House,
    Gem,
    Net,
    #[serde(rename = "Diamond+2P")]
    DiamondTwoPendants,
    #[serde(rename = "W4+P")]
    W4Pendant,
    Octahedron,
}

impl Pattern {
    pub const ALL: [Pattern; 10] = [
        Pattern::TwoK2,
        Pattern::P4,
        Pattern::C4,
        Pattern::C5,
        Pattern::House,
        Pattern::Gem,
        Pattern::Net,
        Pattern::DiamondTwoPendants,
        Pattern::W4Pendant,
        Pattern::Octahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pattern::TwoK2 => "2K2",
            Pattern::P4 => "P4",
            Pattern::C4 => "C4",
            Pattern::C5 => "C5",
            Pattern::House => "House",
            Pattern::Gem => "Gem",
            Pattern::Net => "Net",
            Pattern::DiamondTwoPendants => "Diamond+2P",
            Pattern::W4Pendant => "W4+P",
            Pattern::Octahedron => "Octahedron",
        }
    }

    pub fn vertex_count(self) -> usize {
        match self {
            Pattern::TwoK2 | Pattern::P4 | Pattern::C4 => 4,
            Pattern::C5 | Pattern::House | Pattern::Gem => 5,
            Pattern::Net
            | Pattern::DiamondTwoPendants
            | Pattern::W4Pendant
            | Pattern::Octahedron => 6,
        }
    }

    /// Edges on vertices `0..vertex_count()`.
    pub fn edges(self) -> &'static [(usize, usize)] {
        match self {
            Pattern::TwoK2 => &[(0, 1), (2, 3)],
            Pattern::P4 => &[(0, 1), (1, 2), (2, 3)],
            Pattern::C4 => &[(0, 1), (1, 2), (2, 3), (0, 3)],
            Pattern::C5 => &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)],
            // square 0-1-2-3 with roof 4 over the edge 0-1
            Pattern::House => &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4)],
            // P4 plus a vertex adjacent to all of it
            Pattern::Gem => &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)],
            // triangle with one pendant per corner
            Pattern::Net => &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)],
            // diamond with chord 0-1, pendants on both chord ends
            Pattern::DiamondTwoPendants => {
                &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 5)]
            }
            // wheel on the 4-cycle 0-1-2-3 with hub 4, pendant on the hub
            Pattern::W4Pendant => &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (0, 4),
                (1, 4),
                (2, 4),
                (3, 4),
                (4, 5),
            ],
            // K_{2,2,2}: all pairs except 0-1, 2-3, 4-5
            Pattern::Octahedron => &[
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 4),
                (2, 5),
                (3, 4),
                (3, 5),
            ],
        }
    }

    /// The pattern as a [`Graph`] on `1..=vertex_count()`.
    pub fn graph(self) -> Graph {
        Graph::from_edges(
            self.vertex_count(),
            self.edges().iter().map(|&(a, b)| (a + 1, b + 1)),
        )
        .expect("pattern edges are valid")
    }

    /// Adjacency masks of every labeling of the pattern.
    fn labelings(self) -> &'static HashSet<u16> {
        static TABLES: OnceLock<Vec<HashSet<u16>>> = OnceLock::new();
        let tables =
            TABLES.get_or_init(|| Pattern::ALL.iter().map(|p| p.compute_labelings()).collect());
        &tables[Pattern::ALL
            .iter()
            .position(|&p| p == self)
            .expect("listed")]
    }

    fn compute_labelings(self) -> HashSet<u16> {
        let k = self.vertex_count();
        let mut perm: Vec<usize> = (0..k).collect();
        let mut out = HashSet::new();
        loop {
            let mask = self
                .edges()
                .iter()
                .fold(0u16, |m, &(a, b)| m | 1 << pair_bit(perm[a], perm[b]));
            out.insert(mask);
            if !next_permutation(&mut perm) {
                break;
            }
        }
        out
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Pattern::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::NotApplicable(format!("unknown pattern {s:?}")))
    }
}

/// Bit position of the unordered pair `{i, j}` among vertices `0..6`.
fn pair_bit(i: usize, j: usize) -> u32 {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    (b * (b - 1) / 2 + a) as u32
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Graph families with a forbidden induced subgraph characterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Threshold,
    #[serde(rename = "special_2_threshold")]
    Special2Threshold,
    Ferrers,
}

impl Family {
    pub fn patterns(self) -> &'static [Pattern] {
        match self {
            Family::Threshold => &[Pattern::TwoK2, Pattern::P4, Pattern::C4],
            Family::Special2Threshold => &[
                Pattern::TwoK2,
                Pattern::C5,
                Pattern::House,
                Pattern::Gem,
                Pattern::Net,
                Pattern::DiamondTwoPendants,
                Pattern::W4Pendant,
                Pattern::Octahedron,
            ],
            Family::Ferrers => &[Pattern::TwoK2],
        }
    }
}

/// An induced copy of a forbidden pattern.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForbiddenWitness {
    pub pattern: Pattern,
    /// Ascending.
    pub vertices: Vec<Vertex>,
}

impl fmt::Display for ForbiddenWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(ToString::to_string).collect();
        write!(f, "{} on {{{}}}", self.pattern, vs.join(", "))
    }
}

/// Returns the induced subgraph pattern, if any, that `vertices` (at most six,
/// in any order) forms among `patterns`.
pub fn match_pattern(g: &Graph, vertices: &[Vertex], patterns: &[Pattern]) -> Option<Pattern> {
    let k = vertices.len();
    if k > 6 {
        return None;
    }
    let mut mask = 0u16;
    for j in 1..k {
        for i in 0..j {
            if g.has_edge(vertices[i], vertices[j]) {
                mask |= 1 << pair_bit(i, j);
            }
        }
    }
    patterns
        .iter()
        .copied()
        .find(|p| p.vertex_count() == k && p.labelings().contains(&mask))
}

/// Searches induced subgraphs on 4, 5 and 6 vertices (each size in
/// lexicographic subset order) for a pattern forbidden in `family`.
/// The Ferrers family requires a connected bipartite input.
pub fn forbidden_subgraph_check(g: &Graph, family: Family) -> Result<Option<ForbiddenWitness>> {
    if family == Family::Ferrers && (!g.is_connected() || g.bipartition().is_none()) {
        return Err(Error::Precondition(
            "the Ferrers characterization applies to connected bipartite graphs".into(),
        ));
    }
    let patterns = family.patterns();
    let n = g.vertex_count();
    let max_k = patterns.iter().map(|p| p.vertex_count()).max().unwrap_or(0);
    for k in 4..=max_k.min(n) {
        if !patterns.iter().any(|p| p.vertex_count() == k) {
            continue;
        }
        let mut subset: Vec<Vertex> = (1..=k).collect();
        loop {
            if let Some(pattern) = match_pattern(g, &subset, patterns) {
                return Ok(Some(ForbiddenWitness {
                    pattern,
                    vertices: subset,
                }));
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    }
    Ok(None)
}

/// Advances an ascending `k`-subset of `1..=n` to its lexicographic successor.
pub(crate) fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let Some(i) = (0..k).rev().find(|&i| c[i] < n - (k - 1 - i)) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..k {
        c[j] = c[j - 1] + 1;
    }
    true
}
