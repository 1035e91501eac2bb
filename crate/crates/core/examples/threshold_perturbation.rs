//! Turn the Laplacian of a threshold graph into an upper triangular matrix
//! with a rank-one update, and read the tree count off its diagonal.

use spantree::count::{build_perturbation, count_threshold};
use spantree::recognition::is_threshold;
use spantree::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Graph::from_edges(5, [(3, 4), (4, 5), (2, 5), (1, 2), (1, 4), (2, 4)])?;
    let co = is_threshold(&g).into_order().ok_or("not threshold")?;
    println!("construction order: {co}");

    let p = build_perturbation(&g, &co)?;
    println!(
        "a = {:?}",
        p.a.iter().map(ToString::to_string).collect::<Vec<_>>()
    );
    println!(
        "b = {:?}",
        p.b.iter().map(ToString::to_string).collect::<Vec<_>>()
    );
    println!("L + a b^T (rows in construction order):\n{}", p.matrix);
    println!("upper triangular: {}", p.matrix.is_upper_triangular()?);
    println!("determinant = product of diagonal = {}", p.determinant());
    println!("spanning trees = det / (|D| |U|) = {}", p.tree_count()?);
    println!("closed form: {}", count_threshold(&g, &co)?);
    Ok(())
}
