//! Sweep all graphs on up to seven vertices (up to isomorphism) and compare
//! every applicable counting method.

use std::time::Instant;

use spantree::count::{count_spanning_trees, CountConfig, Method};
use spantree::generate::graphs_up_to_isomorphism;
use spantree::recognition::{classify, SearchConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = CountConfig::default();
    for n in 1..=7 {
        let start = Instant::now();
        let graphs = graphs_up_to_isomorphism(n);
        let (mut threshold, mut s2t, mut ferrers, mut mismatches) = (0, 0, 0, 0);
        for g in &graphs {
            let c = classify(g, SearchConfig::default())?;
            threshold += usize::from(c.is_threshold());
            s2t += usize::from(c.is_special_2_threshold());
            ferrers += usize::from(c.is_ferrers());
            let reference = count_spanning_trees(g, Method::MatrixTree, &cfg)?.count;
            for m in [Method::Auto, Method::Perturbation, Method::Oracle] {
                if count_spanning_trees(g, m, &cfg)?.count != reference {
                    mismatches += 1;
                }
            }
        }
        println!(
            "n={n}: {} graphs, {threshold} threshold, {s2t} special 2-threshold, {ferrers} Ferrers, \
             {mismatches} mismatches ({:.2?})",
            graphs.len(),
            start.elapsed()
        );
    }
    Ok(())
}
