//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use spantree::count::{
    build_perturbation, count_bipartite, count_complete, count_ferrers, count_spanning_trees,
    count_special_2threshold, count_threshold, matrix_tree_count, oracle_count, CountConfig,
    Method,
};
use spantree::generate::{
    connected_graphs_up_to_isomorphism, graphs_up_to_isomorphism, partitions, random_graph,
    random_u_threshold,
};
use spantree::linalg::{int_vector, laplacian};
use spantree::recognition::{
    canonical_order, ferrers_recognize, find_special_2threshold_u, forbidden_subgraph_check,
    is_threshold, nesting_report, ConstructionOrder, Family, FerrersStructure,
};
use spantree::weighted::{
    weighted_cayley_prufer, weighted_count_ferrers, weighted_count_special_2threshold,
    weighted_count_threshold, weighted_enumerator, weighted_oracle, MultiPoly,
};
use spantree::{Graph, PartitionShape};

use common::{fixture, is_triangular_perturbation, triangular_perturbation_exists};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn golden() -> Vec<(&'static str, Graph, u64)> {
    vec![
        ("fig1a", fixture("fig1a.txt"), 11),
        ("K4", fixture("fig1b.txt"), 16),
        ("K_{2,3}", fixture("fig1c.txt"), 12),
        ("fig1d threshold", fixture("fig1d.txt"), 8),
        ("Ferrers (3,2,2,1)", fixture("fig1f.txt"), 12),
        ("fig1e special 2-threshold", fixture("fig1e.txt"), 8),
    ]
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let cfg = CountConfig::default();
    let mut notes = Vec::new();
    for (name, g, expected) in golden() {
        let expected = BigInt::from(expected);
        let mt = matrix_tree_count(&g);
        let oracle = oracle_count(&g).map_err(err)?;
        ensure!(mt == expected, "{name}: matrix-tree gave {mt}");
        ensure!(oracle == expected, "{name}: oracle gave {oracle}");
        match count_spanning_trees(&g, Method::Formula, &cfg) {
            Ok(out) => ensure!(out.count == expected, "{name}: formula gave {}", out.count),
            Err(_) => notes.push(format!("{name} has no closed form")),
        }
    }
    ensure!(
        count_complete(4).map_err(err)? == BigInt::from(16),
        "Cayley K4"
    );
    ensure!(
        count_bipartite(2, 3).map_err(err)? == BigInt::from(12),
        "K_{{2,3}} closed form"
    );
    let shape: PartitionShape = "3,2,2,1".parse().map_err(err)?;
    let fs = FerrersStructure::from_shape(&shape);
    ensure!(
        count_ferrers(&fs).map_err(err)? == BigInt::from(12),
        "Ferrers (3,2,2,1)"
    );
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!(
        "six golden counts exact; {}; {elapsed:.2?}",
        notes.join(", ")
    ))
}

fn criterion_2() -> Outcome {
    let g = fixture("fig1d.txt");
    let co = is_threshold(&g).into_order().ok_or("fig1d not threshold")?;
    let p = build_perturbation(&g, &co).map_err(err)?;
    ensure!(
        p.matrix.is_upper_triangular().map_err(err)?,
        "threshold example not triangular"
    );
    ensure!(
        p.diagonal() == int_vector(&[2, 2, 4, 1, 5]),
        "threshold diagonal {:?}",
        p.diagonal()
    );
    ensure!(
        p.determinant() == BigInt::from(80),
        "threshold det {}",
        p.determinant()
    );
    ensure!(
        p.matrix.determinant().map_err(err)? == BigInt::from(80),
        "threshold Bareiss det"
    );
    ensure!(
        p.tree_count().map_err(err)? == BigInt::from(8),
        "threshold count"
    );

    let shape: PartitionShape = "3,2,2,1".parse().map_err(err)?;
    let fg = shape.ferrers_graph();
    let fs = FerrersStructure::from_shape(&shape);
    let co = fs.construction_order(&fg.graph).map_err(err)?;
    let p = build_perturbation(&fg.graph, &co).map_err(err)?;
    ensure!(
        p.matrix.is_upper_triangular().map_err(err)?,
        "Ferrers example not triangular"
    );
    ensure!(
        p.diagonal() == int_vector(&[4, 1, 3, 2, 2, 1, 3]),
        "Ferrers diagonal {:?}",
        p.diagonal()
    );
    ensure!(
        p.determinant() == BigInt::from(144),
        "Ferrers det {}",
        p.determinant()
    );
    ensure!(
        p.matrix.determinant().map_err(err)? == BigInt::from(144),
        "Ferrers Bareiss det"
    );
    ensure!(
        p.tree_count().map_err(err)? == BigInt::from(12),
        "Ferrers count"
    );
    Ok("diagonals (2,2,4,1,5) det 80 and (4,1,3,2,2,1,3) det 144".into())
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    let mut members = 0;
    for n in 1..=7 {
        for g in connected_graphs_up_to_isomorphism(n) {
            total += 1;
            let by_order = find_special_2threshold_u(&g).map_err(err)?;
            if let Some(co) = &by_order {
                co.validate(&g).map_err(err)?;
            }
            let clean = forbidden_subgraph_check(&g, Family::Special2Threshold)
                .map_err(err)?
                .is_none();
            let tri = triangular_perturbation_exists(&g);
            if let Some((order, a, b)) = &tri {
                ensure!(
                    is_triangular_perturbation(&g, order, a, b),
                    "bogus perturbation for {g}"
                );
            }
            let (x, y, z) = (by_order.is_some(), clean, tri.is_some());
            ensure!(
                x == y && y == z,
                "disagreement on {}: order {x}, forbidden-free {y}, triangular {z}",
                g.to_edge_list().replace('\n', " ")
            );
            members += usize::from(x);
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    Ok(format!("{total} connected graphs, {members} special 2-threshold, all three tests agree; {elapsed:.2?}"))
}

fn criterion_4() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    let mut done = 0;
    while done < 500 {
        let n = rng.gen_range(1..=7);
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(n, p, &mut rng);
        let a: Vec<BigInt> = (0..n)
            .map(|_| BigInt::from(rng.gen_range(-4..=4)))
            .collect();
        let b: Vec<BigInt> = (0..n)
            .map(|_| BigInt::from(rng.gen_range(-4..=4)))
            .collect();
        let (sa, sb): (BigInt, BigInt) = (a.iter().sum(), b.iter().sum());
        if sa == BigInt::from(0) || sb == BigInt::from(0) {
            continue;
        }
        let tau = if g.edge_count() <= 20 {
            oracle_count(&g).map_err(err)?
        } else {
            matrix_tree_count(&g)
        };
        let det = laplacian(&g)
            .rank_one_update(&a, &b)
            .map_err(err)?
            .determinant()
            .map_err(err)?;
        ensure!(
            det == &sa * &sb * &tau,
            "identity fails on {g} with a={a:?} b={b:?}"
        );
        done += 1;
    }
    Ok("500 random triples satisfy det(L + a b^T) = (sum a)(sum b) tau".into())
}

fn criterion_5() -> Outcome {
    let g = fixture("fig8.txt");
    let u = [1, 2, 3, 4, 5, 6];
    let c = canonical_order(&g, &u).map_err(err)?;
    let expected = vec![vec![4, 5], vec![7], vec![3, 6], vec![8], vec![1], vec![2]];
    ensure!(c.classes == expected, "chain {:?}", c.classes);
    let mut refinements = vec![Vec::new()];
    for class in &c.classes {
        let mut next = Vec::new();
        for prefix in &refinements {
            let mut perm = class.clone();
            perm.sort_unstable();
            loop {
                let mut r: Vec<usize> = prefix.clone();
                r.extend(&perm);
                next.push(r);
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
        refinements = next;
    }
    for r in &refinements {
        ConstructionOrder::from_order(&g, r, &u).map_err(|e| format!("{r:?}: {e}"))?;
    }
    Ok(format!(
        "chain {{d,e}} {{g}} {{c,f}} {{h}} {{a}} {{b}}; {} refinements validate",
        refinements.len()
    ))
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn criterion_6() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    for k in 0..200 {
        let n = rng.gen_range(1..=12);
        let p_u = rng.gen_range(0.1..0.9);
        let (g, u, _) = random_u_threshold(n, p_u, &mut rng);
        let report = nesting_report(&g, &u).map_err(err)?;
        let first = report
            .violations()
            .next()
            .map(|(c, v)| format!("clause ({c}) fails on {:?}: {}", v.vertices, v.detail));
        if let Some(msg) = first {
            return Err(format!("instance {k}: {msg}"));
        }
    }
    Ok("200 random U-threshold graphs satisfy all four clauses".into())
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    for n in 1..=6 {
        for g in graphs_up_to_isomorphism(n) {
            if let Some(co) = is_threshold(&g).into_order() {
                let oracle = weighted_oracle(&g).map_err(err)?;
                if g.edge_count() > 0 {
                    let f = weighted_count_threshold(&g, &co).map_err(err)?;
                    ensure!(f == oracle, "threshold formula differs on {g}");
                    checked += 1;
                }
            }
            if let Some(co) = find_special_2threshold_u(&g).map_err(err)? {
                if !co.u_dominating().is_empty() {
                    let f = weighted_count_special_2threshold(&g, &co).map_err(err)?;
                    ensure!(
                        f == weighted_oracle(&g).map_err(err)?,
                        "special 2-threshold formula differs on {g}"
                    );
                    checked += 1;
                }
            }
        }
    }
    for size in 1..=8 {
        for shape in partitions(size) {
            let fg = shape.ferrers_graph();
            let fs = FerrersStructure::from_shape(&shape);
            ensure!(
                weighted_count_ferrers(&fs) == weighted_oracle(&fg.graph).map_err(err)?,
                "Ferrers {shape}"
            );
            checked += 1;
        }
    }
    for n in 1..=5 {
        let cp = weighted_cayley_prufer(n).map_err(err)?;
        ensure!(
            cp == weighted_oracle(&Graph::complete(n).map_err(err)?).map_err(err)?,
            "K{n}"
        );
        checked += 1;
    }
    let cfg = CountConfig::default();
    for (name, g, expected) in golden() {
        let w = weighted_enumerator(&g, Method::Auto, &cfg).map_err(err)?;
        ensure!(
            w.polynomial.substitute_all_ones() == BigInt::from(expected),
            "{name} at ones"
        );
    }
    let expected = MultiPoly::from_terms(
        3,
        [(1, vec![2, 1, 1]), (1, vec![1, 2, 1]), (1, vec![1, 1, 2])],
    )
    .map_err(err)?;
    let got = weighted_cayley_prufer(3).map_err(err)?;
    let got_terms: Vec<_> = got.terms().collect();
    let expected_terms: Vec<_> = expected.terms().collect();
    ensure!(got_terms == expected_terms, "K3 enumerator {got}");
    Ok(format!("{checked} closed forms equal the brute-force enumerator; golden values at x = 1; K3 = {got}"))
}

fn criterion_8() -> Outcome {
    let mut checked = Vec::new();
    for name in common::FIXTURES {
        let g = fixture(name);
        if let Some(co) = is_threshold(&g).into_order() {
            let s = count_special_2threshold(&g, &co).map_err(err)?;
            ensure!(s == count_threshold(&g, &co).map_err(err)?, "{name}: U = V");
            let ws = weighted_count_special_2threshold(&g, &co).map_err(err)?;
            ensure!(
                ws == weighted_count_threshold(&g, &co).map_err(err)?,
                "{name}: weighted U = V"
            );
            checked.push(format!("{name} (U = V)"));
        }
        if let Some(fs) = ferrers_recognize(&g) {
            let co = fs.construction_order(&g).map_err(err)?;
            let s = count_special_2threshold(&g, &co).map_err(err)?;
            ensure!(s == count_ferrers(&fs).map_err(err)?, "{name}: U = C");
            let ws = weighted_count_special_2threshold(&g, &co).map_err(err)?;
            ensure!(ws == weighted_count_ferrers(&fs), "{name}: weighted U = C");
            checked.push(format!("{name} (U = C)"));
        }
    }
    ensure!(checked.len() >= 4, "only {checked:?}");
    Ok(checked.join(", "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("golden counts", criterion_1),
        ("perturbation examples", criterion_2),
        ("special 2-threshold sweep", criterion_3),
        ("rank-one identity", criterion_4),
        ("canonical order", criterion_5),
        ("nesting clauses", criterion_6),
        ("weighted enumerators", criterion_7),
        ("reduction identities", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        match result {
            Ok(detail) => println!("criterion {}: PASS {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name} ({elapsed:.2?}): {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
