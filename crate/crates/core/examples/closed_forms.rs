//! Closed-form counts for complete, complete bipartite and complete
//! multipartite graphs, checked against Matrix-Tree.

use spantree::count::{count_bipartite, count_complete, count_multipartite, matrix_tree_count};
use spantree::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=8 {
        println!(
            "K{n}: {} (matrix-tree {})",
            count_complete(n)?,
            matrix_tree_count(&Graph::complete(n)?)
        );
    }
    for (m, n) in [(1, 4), (2, 3), (3, 3), (3, 5)] {
        let g = Graph::complete_multipartite(&[m, n])?;
        println!(
            "K_{{{m},{n}}}: {} (matrix-tree {})",
            count_bipartite(m, n)?,
            matrix_tree_count(&g)
        );
    }
    for sizes in [
        vec![1, 1, 1],
        vec![2, 2, 2],
        vec![1, 2, 3],
        vec![3, 3, 2, 1],
    ] {
        let g = Graph::complete_multipartite(&sizes)?;
        println!(
            "K_{sizes:?}: {} (matrix-tree {})",
            count_multipartite(&sizes)?,
            matrix_tree_count(&g)
        );
    }
    println!("K50: {}", count_complete(50)?);
    Ok(())
}
