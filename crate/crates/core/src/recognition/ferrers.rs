//! Ferrers graph recognition and the diagram-boundary traversal.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{Graph, PartitionShape, Vertex};
use crate::recognition::order::ConstructionOrder;

/// A Ferrers graph's bipartition, shape and traversal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FerrersStructure {
    /// `r_1, r_2, ...` by weakly decreasing degree.
    pub rows: Vec<Vertex>,
    /// `c_1, c_2, ...` by weakly decreasing degree.
    pub cols: Vec<Vertex>,
    #[serde(serialize_with = "serialize_shape")]
    pub shape: PartitionShape,
    /// `c_1`, then the rows of length 1 (highest index first), `c_2`, the
    /// rows of length 2, and so on.
    pub traversal: Vec<Vertex>,
}

fn serialize_shape<S: serde::Serializer>(shape: &PartitionShape, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(shape.parts())
}

impl FerrersStructure {
    /// The structure of `shape.ferrers_graph()` (rows `1..=m`, then columns).
    pub fn from_shape(shape: &PartitionShape) -> Self {
        let fg = shape.ferrers_graph();
        Self::assemble(fg.rows, fg.cols, shape.clone())
    }

    fn assemble(rows: Vec<Vertex>, cols: Vec<Vertex>, shape: PartitionShape) -> Self {
        let mut traversal = Vec::with_capacity(rows.len() + cols.len());
        for (k, &c) in cols.iter().enumerate() {
            traversal.push(c);
            for i in (0..rows.len()).rev() {
                if shape.parts()[i] == k + 1 {
                    traversal.push(rows[i]);
                }
            }
        }
        FerrersStructure {
            rows,
            cols,
            shape,
            traversal,
        }
    }

    /// The traversal as a construction order with `U` = columns.
    pub fn construction_order(&self, g: &Graph) -> Result<ConstructionOrder> {
        ConstructionOrder::from_order(g, &self.traversal, &self.cols)
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols.len()
    }
}

/// Recognizes a Ferrers graph, taking the side that contains vertex 1 as
/// the columns.
pub fn ferrers_recognize(g: &Graph) -> Option<FerrersStructure> {
    ferrers_recognize_oriented(g, 1)
}

/// Recognizes a Ferrers graph with the side containing `column_vertex` as
/// the columns. Requires a connected bipartite graph with at least one edge
/// whose row neighborhoods are nested.
pub fn ferrers_recognize_oriented(g: &Graph, column_vertex: Vertex) -> Option<FerrersStructure> {
    g.check_vertex(column_vertex).ok()?;
    if g.edge_count() == 0 || !g.is_connected() {
        return None;
    }
    let side = g.bipartition()?;
    let col_side = side[column_vertex];
    let by_degree = |mut vs: Vec<Vertex>| {
        vs.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
        vs
    };
    let cols = by_degree(g.vertices().filter(|&v| side[v] == col_side).collect());
    let rows = by_degree(g.vertices().filter(|&v| side[v] != col_side).collect());

    let mut col_index = vec![usize::MAX; g.vertex_count() + 1];
    for (j, &c) in cols.iter().enumerate() {
        col_index[c] = j;
    }
    for &r in &rows {
        let d = g.degree(r);
        if !g.neighbors(r).iter().all(|&c| col_index[c] < d) {
            return None;
        }
    }
    let parts = rows.iter().map(|&r| g.degree(r)).collect();
    let shape = PartitionShape::new(parts).ok()?;
    Some(FerrersStructure::assemble(rows, cols, shape))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1f() -> Graph {
        Graph::from_edges(
            7,
            [
                (1, 4),
                (1, 5),
                (1, 6),
                (1, 7),
                (2, 4),
                (2, 5),
                (2, 6),
                (3, 4),
            ],
        )
        .unwrap()
    }

    #[test]
    fn fig1f_structure() {
        let g = fig1f();
        let fs = ferrers_recognize(&g).unwrap();
        assert_eq!(fs.shape.parts(), &[3, 2, 2, 1]);
        assert_eq!(fs.cols, vec![1, 2, 3]);
        assert_eq!(fs.rows, vec![4, 5, 6, 7]);
        assert_eq!(fs.traversal, vec![1, 7, 2, 6, 5, 3, 4]);
        fs.construction_order(&g).unwrap();
    }

    #[test]
    fn orientation() {
        let g = fig1f();
        let fs = ferrers_recognize_oriented(&g, 4).unwrap();
        assert_eq!(fs.shape.parts(), &[4, 3, 1]);
        assert_eq!(fs.rows, vec![1, 2, 3]);
    }

    #[test]
    fn star_has_its_center_as_the_row() {
        let star = Graph::complete_multipartite(&[3, 1]).unwrap();
        let fs = ferrers_recognize(&star).unwrap();
        assert_eq!(fs.shape.parts(), &[3]);
        assert_eq!(fs.rows, vec![4]);
    }

    #[test]
    fn non_ferrers() {
        assert!(ferrers_recognize(&Graph::from_edges(4, [(1, 2), (3, 4)]).unwrap()).is_none());
        assert!(ferrers_recognize(&Graph::path(5).unwrap()).is_none());
        assert!(ferrers_recognize(&Graph::complete(3).unwrap()).is_none());
        assert!(ferrers_recognize(&Graph::edgeless(1).unwrap()).is_none());
    }

    #[test]
    fn from_shape_matches_recognition_up_to_conjugation() {
        let shape = PartitionShape::new(vec![3, 2, 2, 1]).unwrap();
        let fg = shape.ferrers_graph();
        let fs = FerrersStructure::from_shape(&shape);
        assert_eq!(fs.rows, fg.rows);
        fs.construction_order(&fg.graph).unwrap();
        // vertex 1 is a row of the generated graph, so default recognition
        // swaps the roles
        assert_eq!(
            ferrers_recognize(&fg.graph).unwrap().shape,
            shape.conjugate()
        );
        let oriented = ferrers_recognize_oriented(&fg.graph, fg.cols[0]).unwrap();
        assert_eq!(oriented.shape, shape);
    }
}
