//! Shared helpers and independent oracles for the integration tests.

#![allow(dead_code)]

use std::path::PathBuf;

use num_bigint::BigInt;
use spantree::Graph;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn fixture(name: &str) -> Graph {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    Graph::parse_edge_list(&text).expect("fixture parses")
}

pub const FIXTURES: [&str; 9] = [
    "fig1a.txt",
    "fig1b.txt",
    "fig1c.txt",
    "fig1d.txt",
    "fig1e.txt",
    "fig1f.txt",
    "fig8.txt",
    "two_k2.txt",
    "c5.txt",
];

/// Determinant by the Leibniz permutation sum. Only for tiny matrices.
pub fn leibniz_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = BigInt::from(0);
    permute(&mut perm, 0, m, &mut total);
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, m: &[Vec<BigInt>], total: &mut BigInt) {
    let n = perm.len();
    if k == n {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let mut term = BigInt::from(if inversions % 2 == 0 { 1 } else { -1 });
        for (i, &p) in perm.iter().enumerate() {
            term *= &m[i][p];
        }
        *total += term;
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(perm, k + 1, m, total);
        perm.swap(k, i);
    }
}

/// Dense integer Laplacian, 0-based rows and columns.
pub fn plain_laplacian(g: &Graph) -> Vec<Vec<BigInt>> {
    let n = g.vertex_count();
    let mut l = vec![vec![BigInt::from(0); n]; n];
    for (u, v) in g.edges() {
        l[u - 1][v - 1] -= 1;
        l[v - 1][u - 1] -= 1;
        l[u - 1][u - 1] += 1;
        l[v - 1][v - 1] += 1;
    }
    l
}

/// Looks for a vertex ordering `p` and 0/1 vectors `a`, `b` with
/// `L[p][p] + a bᵀ` upper triangular. Row `i` can only be appended when
/// every entry left of the diagonal cancels, which depends on the set of
/// vertices placed so far and which of them carry `b = 1`, so the search
/// memoizes those two masks.
pub fn triangular_perturbation_exists(g: &Graph) -> Option<(Vec<usize>, Vec<u8>, Vec<u8>)> {
    let n = g.vertex_count();
    assert!(n <= 16);
    let l = plain_laplacian(g);
    let mut dead = std::collections::HashSet::new();
    let mut order = Vec::new();
    let mut a = Vec::new();
    let mut b = Vec::new();
    if dfs(&l, 0, 0, &mut order, &mut a, &mut b, &mut dead) {
        Some((order, a, b))
    } else {
        None
    }
}

fn dfs(
    l: &[Vec<BigInt>],
    placed: u32,
    b_mask: u32,
    order: &mut Vec<usize>,
    a: &mut Vec<u8>,
    b: &mut Vec<u8>,
    dead: &mut std::collections::HashSet<(u32, u32)>,
) -> bool {
    let n = l.len();
    if order.len() == n {
        return true;
    }
    if dead.contains(&(placed, b_mask)) {
        return false;
    }
    for v in 0..n {
        if placed & (1 << v) != 0 {
            continue;
        }
        for av in [0u8, 1] {
            let ok = order
                .iter()
                .zip(b.iter())
                .all(|(&w, &bw)| &l[v][w] + BigInt::from(av * bw) == BigInt::from(0));
            if !ok {
                continue;
            }
            for bv in [0u8, 1] {
                order.push(v);
                a.push(av);
                b.push(bv);
                let nb = if bv == 1 { b_mask | (1 << v) } else { b_mask };
                if dfs(l, placed | (1 << v), nb, order, a, b, dead) {
                    return true;
                }
                order.pop();
                a.pop();
                b.pop();
            }
        }
    }
    dead.insert((placed, b_mask));
    false
}

/// Builds `L[p][p] + a bᵀ` for a 0-based ordering and checks it is upper
/// triangular.
pub fn is_triangular_perturbation(g: &Graph, order: &[usize], a: &[u8], b: &[u8]) -> bool {
    let l = plain_laplacian(g);
    let n = order.len();
    (0..n).all(|i| {
        (0..i).all(|j| &l[order[i]][order[j]] + BigInt::from(a[i] * b[j]) == BigInt::from(0))
    })
}
