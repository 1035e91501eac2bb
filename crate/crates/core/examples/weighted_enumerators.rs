//! Weighted spanning tree enumerators with edge weight x_i x_j, computed by
//! closed form, Matrix-Tree over polynomials and brute force.

use spantree::count::CountConfig;
use spantree::count::Method;
use spantree::recognition::ferrers_recognize;
use spantree::weighted::{
    weighted_cayley_prufer, weighted_count_ferrers, weighted_enumerator, weighted_oracle,
};
use spantree::{Graph, PartitionShape};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("K4: {}", weighted_cayley_prufer(4)?);

    let g = Graph::from_edges(5, [(3, 4), (1, 2), (2, 5), (4, 5), (1, 4), (1, 5)])?;
    let cfg = CountConfig::default();
    let auto = weighted_enumerator(&g, Method::Auto, &cfg)?;
    let mt = weighted_enumerator(&g, Method::MatrixTree, &cfg)?;
    println!(
        "special 2-threshold example ({:?}): {}",
        auto.formula, auto.polynomial
    );
    println!("matches matrix-tree: {}", auto.polynomial == mt.polynomial);
    println!(
        "matches brute force: {}",
        auto.polynomial == weighted_oracle(&g)?
    );
    println!(
        "value at all ones: {}",
        auto.polynomial.substitute_all_ones()
    );

    let shape: PartitionShape = "2,1".parse()?;
    let fg = shape.ferrers_graph();
    let fs = ferrers_recognize(&fg.graph).ok_or("not Ferrers")?;
    println!("Ferrers {shape}: {}", weighted_count_ferrers(&fs));
    Ok(())
}
