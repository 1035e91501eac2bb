//! Simple undirected graphs on vertices `1..=n`, the graph families used
//! throughout the crate, and the plain-text edge-list format.
//!
//! Graphs are immutable once built. Operations that restrict or relabel a
//! graph return a new value together with the label map they used.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Vertex labels are 1-based.
pub type Vertex = usize;

/// A simple undirected graph: no loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    // adj[v - 1] holds the sorted neighbours of v
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Edges may be given in
    /// either orientation; loops and repeated edges are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            if adj[u - 1].contains(&v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u - 1].push(v);
            adj[v - 1].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj })
    }

    /// `n` isolated vertices.
    pub fn edgeless(n: usize) -> Result<Self> {
        Self::from_edges(n, std::iter::empty())
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        Self::from_edges(n, edges)
    }

    /// Complete multipartite graph. Parts are laid out contiguously in input
    /// order: the first part is `1..=sizes[0]`, and so on.
    pub fn complete_multipartite(sizes: &[usize]) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::Precondition(
                "complete multipartite graph needs at least one part".into(),
            ));
        }
        if sizes.contains(&0) {
            return Err(Error::Precondition("part sizes must be positive".into()));
        }
        let n: usize = sizes.iter().sum();
        let mut part = Vec::with_capacity(n);
        for (i, &s) in sizes.iter().enumerate() {
            part.extend(std::iter::repeat_n(i, s));
        }
        let edges = (1..=n).flat_map(|u| {
            let part = &part;
            (u + 1..=n)
                .filter(move |&v| part[u - 1] != part[v - 1])
                .map(move |v| (u, v))
        });
        Self::from_edges(n, edges.collect::<Vec<_>>())
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Result<Self> {
        Self::from_edges(n, (1..n).map(|v| (v, v + 1)))
    }

    /// The cycle `1 - 2 - ... - n - 1`, for `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Precondition(
                "a cycle needs at least 3 vertices".into(),
            ));
        }
        Self::from_edges(n, (1..n).map(|v| (v, v + 1)).chain([(n, 1)]))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.adj.len()
    }

    /// Sorted neighbourhood `N(v)`. Panics if `v` is not a vertex.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u >= 1 && u <= self.adj.len() && self.adj[u - 1].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, list)| {
            let u = i + 1;
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        check_vertex(v, self.adj.len())
    }

    /// Membership mask indexed by vertex label (slot 0 unused). Rejects
    /// labels outside the graph.
    pub fn vertex_mask(&self, set: &[Vertex]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.adj.len() + 1];
        for &v in set {
            self.check_vertex(v)?;
            mask[v] = true;
        }
        Ok(mask)
    }

    /// `|N(v) ∩ W|` where `W` is given as a mask.
    pub fn degree_into(&self, v: Vertex, mask: &[bool]) -> usize {
        self.adj[v - 1].iter().filter(|&&w| mask[w]).count()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([1]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u - 1] {
                if !seen[w - 1] {
                    seen[w - 1] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == n
    }

    /// True if no edge has both ends in `set`.
    pub fn is_independent(&self, set: &[Vertex]) -> Result<bool> {
        let mask = self.vertex_mask(set)?;
        Ok(set
            .iter()
            .all(|&v| self.adj[v - 1].iter().all(|&w| !mask[w])))
    }

    /// Proper 2-colouring as a side mask indexed by vertex label, slot 0
    /// unused (`true` = same side as the smallest vertex of
    /// its component), or `None` if the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.adj.len();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for start in 1..=n {
            if color[start - 1].is_some() {
                continue;
            }
            color[start - 1] = Some(true);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u - 1].unwrap();
                for &w in &self.adj[u - 1] {
                    match color[w - 1] {
                        None => {
                            color[w - 1] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(
            std::iter::once(false)
                .chain(color.into_iter().map(Option::unwrap))
                .collect(),
        )
    }

    /// The induced subgraph `G[W]`, relabelled `1..=|W|` in increasing order
    /// of the original labels. Duplicates in `w` are ignored.
    pub fn induced_subgraph(&self, w: &[Vertex]) -> Result<InducedSubgraph> {
        let mask = self.vertex_mask(w)?;
        let labels: Vec<Vertex> = self.vertices().filter(|&v| mask[v]).collect();
        if labels.is_empty() {
            return Err(Error::NoVertices);
        }
        let mut position = vec![0; self.adj.len()];
        for (i, &v) in labels.iter().enumerate() {
            position[v - 1] = i + 1;
        }
        let edges: Vec<_> = self
            .edges()
            .filter(|&(u, v)| mask[u] && mask[v])
            .map(|(u, v)| (position[u - 1], position[v - 1]))
            .collect();
        let graph = Graph::from_edges(labels.len(), edges)?;
        Ok(InducedSubgraph { graph, labels })
    }

    /// Relabels vertices so that `order[i]` becomes vertex `i + 1`.
    pub fn relabeled(&self, order: &[Vertex]) -> Result<Graph> {
        let position = permutation_positions(order, self.vertex_count())?;
        let edges: Vec<_> = self
            .edges()
            .map(|(u, v)| (position[u - 1] + 1, position[v - 1] + 1))
            .collect();
        Graph::from_edges(self.vertex_count(), edges)
    }

    /// Checks the structural invariants: sorted symmetric adjacency, no loops,
    /// no repeated neighbours.
    pub fn validate(&self) -> Result<()> {
        let n = self.adj.len();
        if n == 0 {
            return Err(Error::NoVertices);
        }
        for (i, list) in self.adj.iter().enumerate() {
            let v = i + 1;
            for pair in list.windows(2) {
                if pair[0] >= pair[1] {
                    return Err(Error::DuplicateEdge(v, pair[1]));
                }
            }
            for &w in list {
                check_vertex(w, n)?;
                if w == v {
                    return Err(Error::Loop(v));
                }
                if self.adj[w - 1].binary_search(&v).is_err() {
                    return Err(Error::Precondition(format!(
                        "adjacency not symmetric at {{{v}, {w}}}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Parses the edge-list format: a header line `n m`, then `m` lines
    /// `u v` with `1 <= u < v <= n`. `#` starts a comment; blank lines are
    /// skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut rows = text.lines().enumerate().filter_map(|(i, line)| {
            let content = line.split('#').next().unwrap_or("").trim();
            (!content.is_empty()).then_some((i + 1, content))
        });
        let (header_line, header) = rows
            .next()
            .ok_or_else(|| Error::parse(1, "missing header line `n m`"))?;
        let (n, m) = parse_pair(header_line, header)?;
        if n == 0 {
            return Err(Error::parse(header_line, "vertex count must be positive"));
        }
        let mut edges = Vec::with_capacity(m);
        let mut seen = std::collections::HashSet::with_capacity(m);
        for (line, content) in rows {
            let (u, v) = parse_pair(line, content)?;
            if u < 1 || v > n {
                return Err(Error::parse(line, format!("vertex out of range 1..={n}")));
            }
            if u == v {
                return Err(Error::parse(line, format!("loop at vertex {u}")));
            }
            if u > v {
                return Err(Error::parse(
                    line,
                    "edges must be written as `u v` with u < v",
                ));
            }
            if !seen.insert((u, v)) {
                return Err(Error::parse(line, format!("duplicate edge {u} {v}")));
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::parse(
                header_line,
                format!("header declares {m} edges, found {}", edges.len()),
            ));
        }
        Graph::from_edges(n, edges)
    }

    /// Writes the graph in the edge-list format.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::parse_edge_list(s)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

fn check_vertex(v: Vertex, n: usize) -> Result<()> {
    if v == 0 || v > n {
        Err(Error::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

fn parse_pair(line: usize, content: &str) -> Result<(usize, usize)> {
    let mut fields = content.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let field = fields
            .next()
            .ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
        field
            .parse()
            .map_err(|_| Error::parse(line, format!("`{field}` is not a non-negative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(Error::parse(line, "expected exactly two fields"));
    }
    Ok((a, b))
}

/// `position[v - 1]` = index of `v` in `order`. Fails unless `order` is a
/// permutation of `1..=n`.
pub(crate) fn permutation_positions(order: &[Vertex], n: usize) -> Result<Vec<usize>> {
    if order.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: order.len(),
        });
    }
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        check_vertex(v, n)?;
        if position[v - 1] != usize::MAX {
            return Err(Error::Precondition(format!(
                "vertex {v} repeated in ordering"
            )));
        }
        position[v - 1] = i;
    }
    Ok(position)
}

/// An induced subgraph together with the map back to the parent's labels:
/// vertex `i` of `graph` is `labels[i - 1]` in the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub labels: Vec<Vertex>,
}

impl InducedSubgraph {
    pub fn parent_label(&self, v: Vertex) -> Vertex {
        self.labels[v - 1]
    }

    /// Local label of a parent vertex, if it was kept.
    pub fn local_label(&self, parent: Vertex) -> Option<Vertex> {
        self.labels.binary_search(&parent).ok().map(|i| i + 1)
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionShape(Vec<usize>);

impl PartitionShape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(PartitionShape(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of rows `m`.
    pub fn rows(&self) -> usize {
        self.0.len()
    }

    /// Number of columns, `λ_1`.
    pub fn columns(&self) -> usize {
        self.0[0]
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Column lengths of the diagram.
    pub fn conjugate(&self) -> PartitionShape {
        let conj = (1..=self.columns())
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        PartitionShape(conj)
    }

    /// Ferrers graph: rows are vertices `1..=m`, columns `m+1..=m+λ_1`; row
    /// `i` is adjacent to column `j` iff `j <= λ_i`.
    pub fn ferrers_graph(&self) -> FerrersGraph {
        let m = self.rows();
        let rows: Vec<Vertex> = (1..=m).collect();
        let cols: Vec<Vertex> = (m + 1..=m + self.columns()).collect();
        let edges: Vec<_> = self
            .0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| cols[..len].iter().map(move |&c| (i + 1, c)))
            .collect();
        let graph = Graph::from_edges(m + self.columns(), edges)
            .expect("ferrers construction yields a simple graph");
        FerrersGraph { graph, rows, cols }
    }
}

impl FromStr for PartitionShape {
    type Err = Error;

    /// Parses `3,2,2,1`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidPartition(format!("`{}` is not a positive integer", p.trim()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        PartitionShape::new(parts)
    }
}

impl fmt::Display for PartitionShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A Ferrers graph with its labelled bipartition; `rows[i]` is `r_{i+1}` and
/// `cols[j]` is `c_{j+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FerrersGraph {
    pub graph: Graph,
    pub rows: Vec<Vertex>,
    pub cols: Vec<Vertex>,
}
