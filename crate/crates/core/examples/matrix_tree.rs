//! Count spanning trees with the Matrix-Tree theorem and check the count
//! against explicit enumeration.

use spantree::count::{matrix_tree_count, spanning_trees, ORACLE_EDGE_LIMIT};
use spantree::linalg::laplacian;
use spantree::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g: Graph = "6 7\n1 2\n1 4\n2 3\n2 5\n2 6\n4 5\n5 6\n".parse()?;
    let l = laplacian(&g);
    println!("Laplacian:\n{l}");
    println!("cofactor (1,1): {}", l.minor_determinant(0, 0)?);
    println!("matrix-tree count: {}", matrix_tree_count(&g));

    let trees = spanning_trees(&g, ORACLE_EDGE_LIMIT)?;
    println!("enumerated {} trees:", trees.len());
    for t in &trees {
        let edges: Vec<String> = t.iter().map(|(u, v)| format!("{u}{v}")).collect();
        println!("  {}", edges.join(" "));
    }
    Ok(())
}
