//! Find induced forbidden subgraphs certifying that a graph is outside a
//! family.

use spantree::recognition::{forbidden_subgraph_check, Family, Pattern};
use spantree::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let families = [
        Family::Threshold,
        Family::Special2Threshold,
        Family::Ferrers,
    ];
    let mut cases: Vec<(String, Graph)> = Pattern::ALL
        .iter()
        .map(|p| (p.name().to_string(), p.graph()))
        .collect();
    cases.push(("C6".into(), Graph::cycle(6)?));
    cases.push(("K_{2,3}".into(), Graph::complete_multipartite(&[2, 3])?));
    for (name, g) in &cases {
        let mut line = format!("{name:>12}:");
        for family in families {
            if family == Family::Ferrers && (!g.is_connected() || g.bipartition().is_none()) {
                line.push_str(&format!("  {family:?}=n/a"));
                continue;
            }
            match forbidden_subgraph_check(g, family)? {
                Some(w) => line.push_str(&format!("  {family:?}: {w}")),
                None => line.push_str(&format!("  {family:?}: member")),
            }
        }
        println!("{line}");
    }
    Ok(())
}
