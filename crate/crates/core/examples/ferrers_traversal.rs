//! Build a Ferrers graph from a partition, recover its structure from the
//! bare graph, and count its spanning trees.

use spantree::count::{count_ferrers, matrix_tree_count};
use spantree::recognition::ferrers_recognize;
use spantree::PartitionShape;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let shape: PartitionShape = "4,3,1".parse()?;
    let fg = shape.ferrers_graph();
    println!("shape {shape}, conjugate {}", shape.conjugate());
    println!("rows {:?}, columns {:?}", fg.rows, fg.cols);
    print!("{}", fg.graph.to_edge_list());

    let fs = ferrers_recognize(&fg.graph).ok_or("not Ferrers")?;
    println!("recognized shape {} with columns {:?}", fs.shape, fs.cols);
    println!("traversal: {:?}", fs.traversal);
    let co = fs.construction_order(&fg.graph)?;
    println!("as a U-threshold order with U = columns: {co}");
    println!("closed form: {}", count_ferrers(&fs)?);
    println!("matrix-tree: {}", matrix_tree_count(&fg.graph));
    Ok(())
}
