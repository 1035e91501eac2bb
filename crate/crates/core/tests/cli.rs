mod common;

use std::process::Command;

use serde_json::Value;
use spantree::cli::run_with;
use spantree::recognition::ConstructionOrder;

use common::{fixture, fixture_path, FIXTURES};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("spantree").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn fx(name: &str) -> String {
    fixture_path(name).display().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn counts_fig1a() {
    let (code, out, _) = run(&["count", &fx("fig1a.txt")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("spanning trees: 11\n"), "{out}");
}

#[test]
fn counts_ferrers_shape_by_formula() {
    let v = json(&["count", "--ferrers", "3,2,2,1", "--verify"]);
    assert_eq!(v["count"], "12");
    assert_eq!(v["method"], "formula");
    assert_eq!(v["formula"], "ferrers");
    assert_eq!(v["verify"]["agrees"], true);
}

#[test]
fn family_flags() {
    assert_eq!(json(&["count", "--complete", "5"])["count"], "125");
    assert_eq!(json(&["count", "--multipartite", "2,3"])["count"], "12");
    let v = json(&["count", "--complete", "5", "--method", "matrix-tree"]);
    assert_eq!(
        (v["count"].as_str(), v["method"].as_str()),
        (Some("125"), Some("matrix-tree"))
    );
}

#[test]
fn classify_reports_2k2_witness() {
    let (code, out, _) = run(&["classify", &fx("two_k2.txt")]);
    assert_eq!(code, 0);
    assert!(
        out.contains("threshold: no, induced 2K2 on {1, 2, 3, 4}"),
        "{out}"
    );
    let v = json(&["classify", &fx("two_k2.txt")]);
    let w = &v["witnesses"][0];
    assert_eq!(w["pattern"], "2K2");
    assert_eq!(w["vertices"], serde_json::json!([1, 2, 3, 4]));
}

#[test]
fn formula_and_matrix_tree_agree_on_fixtures() {
    for name in FIXTURES {
        let mt = json(&["count", "--method", "matrix-tree", &fx(name)]);
        let auto = json(&["count", "--verify", &fx(name)]);
        assert_eq!(mt["count"], auto["count"], "{name}");
        assert_eq!(auto["verify"]["agrees"], true, "{name}");
        let (code, _, _) = run(&["count", "--method", "formula", &fx(name)]);
        if code == 0 {
            let f = json(&["count", "--method", "formula", &fx(name)]);
            assert_eq!(f["count"], mt["count"], "{name}");
        } else {
            assert_eq!(code, 1, "{name}");
        }
    }
}

#[test]
fn json_construction_orders_revalidate() {
    for name in FIXTURES {
        let v = json(&["classify", &fx(name)]);
        let co = &v["construction_order"];
        if co.is_null() {
            assert_eq!(v["classification"]["special_2_threshold"], false);
            continue;
        }
        let ints = |key: &str| -> Vec<usize> {
            co[key]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap() as usize)
                .collect()
        };
        let g = fixture(name);
        let fresh = ConstructionOrder::from_order(&g, &ints("order"), &ints("u")).unwrap();
        assert_eq!(serde_json::to_value(&fresh).unwrap(), *co, "{name}");
    }
}

#[test]
fn weighted_polynomials() {
    let v = json(&["weighted", "--complete", "3"]);
    assert_eq!(v["polynomial"], "x1^2*x2*x3 + x1*x2^2*x3 + x1*x2*x3^2");
    let v = json(&["weighted", "--verify", &fx("fig1e.txt")]);
    assert_eq!(v["count"], "8");
    assert_eq!(v["verify"]["agrees"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["count", "/nonexistent/graph.txt"]).0, 2);
    assert_eq!(run(&["count"]).0, 2);
    assert_eq!(run(&["count", "--ferrers", "2,3"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(
        run(&["count", "--method", "formula", &fx("fig1a.txt")]).0,
        1
    );
    assert_eq!(run(&["--help"]).0, 0);

    let dir = std::env::temp_dir().join(format!("spantree-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("loop.txt");
    std::fs::write(&bad, "2 1\n1 1\n").unwrap();
    assert_eq!(run(&["classify", bad.to_str().unwrap()]).0, 2);
    let big = dir.join("k30.txt");
    std::fs::write(&big, spantree::Graph::complete(30).unwrap().to_edge_list()).unwrap();
    assert_eq!(
        run(&["count", "--method", "oracle", big.to_str().unwrap()]).0,
        3
    );
    let c30 = dir.join("c30.txt");
    std::fs::write(&c30, spantree::Graph::cycle(30).unwrap().to_edge_list()).unwrap();
    let (code, out, _) = run(&["--json", "classify", c30.to_str().unwrap()]);
    assert_eq!(code, 3);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["exit_code"], 3);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_spantree"))
        .args(["count", &fx("fig1b.txt")])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("spanning trees: 16"));

    let out = Command::new(env!("CARGO_BIN_EXE_spantree"))
        .args(["count", "--method", "oracle", &fx("fig1a.txt")])
        .env("SPANTREE_ORACLE_LIMIT", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}
