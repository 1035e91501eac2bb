//! Search for a set U making a graph U-threshold, then count spanning trees
//! with the special 2-threshold formula and the triangular perturbation.

use spantree::count::{build_perturbation, count_special_2threshold, matrix_tree_count};
use spantree::recognition::{find_special_2threshold_u, is_threshold};
use spantree::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Graph::from_edges(5, [(3, 4), (1, 2), (2, 5), (4, 5), (1, 4), (1, 5)])?;
    println!("threshold: {}", is_threshold(&g).is_success());
    let co = find_special_2threshold_u(&g)?.ok_or("not special 2-threshold")?;
    println!("U = {:?}", co.u_set());
    println!("construction order: {co}");
    println!("D = {:?}, I = {:?}", co.u_dominating(), co.isolated());

    let p = build_perturbation(&g, &co)?;
    println!(
        "diagonal of L + a b^T: {:?}",
        p.diagonal()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    println!("perturbation count: {}", p.tree_count()?);
    println!("formula count: {}", count_special_2threshold(&g, &co)?);
    println!("matrix-tree count: {}", matrix_tree_count(&g));
    Ok(())
}
