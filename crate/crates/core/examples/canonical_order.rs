//! Group the vertices of a U-threshold graph into degree classes, order the
//! classes, and check the nesting properties of the neighborhoods.

use spantree::recognition::{canonical_order, nesting_report};
use spantree::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = Graph::from_edges(
        8,
        [
            (1, 2),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 6),
            (4, 5),
            (3, 8),
            (4, 8),
            (4, 7),
            (5, 7),
            (5, 8),
            (6, 8),
        ],
    )?;
    let u = [1, 2, 3, 4, 5, 6];
    let c = canonical_order(&g, &u)?;
    let names = |vs: &[usize]| {
        vs.iter()
            .map(|&v| char::from(b'a' + v as u8 - 1))
            .collect::<String>()
    };
    let chain: Vec<String> = c
        .classes
        .iter()
        .map(|cl| format!("{{{}}}", names(cl)))
        .collect();
    println!("classes: {}", chain.join(" < "));
    println!("construction order: {}", names(c.order.order()));

    let report = nesting_report(&g, &u)?;
    println!("all nesting properties hold: {}", report.all_hold());
    for (clause, v) in report.violations() {
        println!("  ({clause}) fails on {:?}: {}", v.vertices, v.detail);
    }
    Ok(())
}
