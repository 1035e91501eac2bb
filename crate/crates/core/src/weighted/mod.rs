//! Weighted spanning tree enumerators with edge weights `ω(v_i v_j) = x_i x_j`.
//!
//! Vertex `v` carries the indeterminate `x_v` (polynomial variable index
//! `v - 1`), so every enumerator lives in the ring `Z[x_1, ..., x_n]`.

mod poly;

use num_bigint::BigInt;
use serde::Serialize;

pub use poly::{Monomial, MultiPoly};

use crate::count::{CountConfig, FormulaFamily, Method, ORACLE_EDGE_LIMIT};
use crate::error::{Error, Result};
use crate::graph::{permutation_positions, Graph, Vertex};
use crate::linalg::Matrix;
use crate::recognition::{
    ferrers_recognize, find_special_2threshold_u_with, is_threshold, ConstructionOrder,
    FerrersStructure,
};

/// Polynomial-valued Laplacian.
pub type WeightedLaplacian = Matrix<MultiPoly>;

fn x(n: usize, v: Vertex) -> MultiPoly {
    MultiPoly::var(n, v - 1)
}

fn sum_x(n: usize, vs: impl IntoIterator<Item = Vertex>) -> MultiPoly {
    MultiPoly::sum_of_vars(n, vs.into_iter().map(|v| v - 1))
}

fn product_x(n: usize, vs: impl IntoIterator<Item = Vertex>) -> MultiPoly {
    MultiPoly::product_of_vars(n, vs.into_iter().map(|v| v - 1))
}

fn product(n: usize, ps: impl IntoIterator<Item = MultiPoly>) -> MultiPoly {
    ps.into_iter().fold(MultiPoly::one(n), |acc, p| &acc * &p)
}

/// `L(G; ω)`: off-diagonal `-x_i x_j` on edges, diagonal the weighted degree
/// `x_i Σ_{j ∈ N(i)} x_j`.
pub fn weighted_laplacian(g: &Graph) -> WeightedLaplacian {
    let n = g.vertex_count();
    let mut l = WeightedLaplacian::zeros(n, n, n);
    for v in g.vertices() {
        l[(v - 1, v - 1)] = &x(n, v) * &sum_x(n, g.neighbors(v).iter().copied());
        for &w in g.neighbors(v) {
            l[(v - 1, w - 1)] = -&(&x(n, v) * &x(n, w));
        }
    }
    l
}

/// `L(G; ω)` with rows and columns in the given vertex order.
pub fn weighted_laplacian_in_order(g: &Graph, order: &[Vertex]) -> Result<WeightedLaplacian> {
    permutation_positions(order, g.vertex_count())?;
    let perm: Vec<usize> = order.iter().map(|&v| v - 1).collect();
    weighted_laplacian(g).permuted(&perm)
}

/// Sum over spanning trees of the product of edge weights, by enumeration.
pub fn weighted_oracle(g: &Graph) -> Result<MultiPoly> {
    weighted_oracle_with(g, ORACLE_EDGE_LIMIT)
}

pub fn weighted_oracle_with(g: &Graph, edge_limit: usize) -> Result<MultiPoly> {
    let n = g.vertex_count();
    let mut terms: Vec<(BigInt, Vec<u32>)> = Vec::new();
    crate::count::for_each_spanning_tree(g, edge_limit, |tree| {
        let mut exps = vec![0u32; n];
        for &(u, v) in tree {
            exps[u - 1] += 1;
            exps[v - 1] += 1;
        }
        terms.push((BigInt::from(1), exps));
    })?;
    MultiPoly::from_terms(n, terms)
}

/// Weighted Matrix-Tree: the `(1,1)` minor of `L(G; ω)`.
pub fn weighted_matrix_tree(g: &Graph) -> Result<MultiPoly> {
    let n = g.vertex_count();
    let minor = weighted_laplacian(g).minor(0, 0)?;
    if minor.rows() == 0 {
        return Ok(MultiPoly::one(n));
    }
    minor.determinant()
}

fn vector_sum(n: usize, v: &[MultiPoly]) -> MultiPoly {
    v.iter().fold(MultiPoly::zero(n), |acc, p| &acc + p)
}

/// `det(L(G; ω) + a bᵀ) / ((Σa)(Σb))`, divided exactly in the polynomial
/// ring. Uses the diagonal product when the perturbed matrix is already
/// upper triangular.
pub fn weighted_perturbation_count(
    g: &Graph,
    a: &[MultiPoly],
    b: &[MultiPoly],
) -> Result<MultiPoly> {
    let n = g.vertex_count();
    if let Some(p) = a.iter().chain(b).find(|p| p.nvars() != n) {
        return Err(Error::VariableCountMismatch {
            left: n,
            right: p.nvars(),
        });
    }
    let (sa, sb) = (vector_sum(n, a), vector_sum(n, b));
    if sa.is_zero() || sb.is_zero() {
        return Err(Error::ZeroSum);
    }
    let m = weighted_laplacian(g).rank_one_update(a, b)?;
    let det = if m.is_upper_triangular()? {
        m.diagonal_product()
    } else {
        m.determinant()?
    };
    det.checked_div_exact(&(&sa * &sb))
}

/// A triangular rank-one perturbation of the reordered weighted Laplacian.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedPerturbation {
    pub order: Vec<Vertex>,
    /// `x_v` at U-dominating positions, else zero.
    pub a: Vec<MultiPoly>,
    /// `x_v` at positions in `U`, else zero.
    pub b: Vec<MultiPoly>,
    pub matrix: WeightedLaplacian,
}

impl WeightedPerturbation {
    pub fn diagonal(&self) -> Vec<MultiPoly> {
        self.matrix.diagonal()
    }

    pub fn determinant(&self) -> MultiPoly {
        self.matrix.diagonal_product()
    }

    /// `det / ((Σa)(Σb))`.
    pub fn enumerator(&self) -> Result<MultiPoly> {
        let n = self.matrix.rows();
        let (sa, sb) = (vector_sum(n, &self.a), vector_sum(n, &self.b));
        if sa.is_zero() || sb.is_zero() {
            return Err(Error::ZeroSum);
        }
        self.determinant().checked_div_exact(&(&sa * &sb))
    }
}

/// Weighted counterpart of [`crate::count::build_perturbation`].
pub fn weighted_build_perturbation(
    g: &Graph,
    co: &ConstructionOrder,
) -> Result<WeightedPerturbation> {
    co.validate(g)?;
    let n = g.vertex_count();
    let order = co.order().to_vec();
    let d = co.u_dominating();
    let pick = |keep: &dyn Fn(Vertex) -> bool| -> Vec<MultiPoly> {
        order
            .iter()
            .map(|&v| if keep(v) { x(n, v) } else { MultiPoly::zero(n) })
            .collect()
    };
    let a = pick(&|v| d.contains(&v));
    let b = pick(&|v| co.in_u(v));
    let matrix = weighted_laplacian_in_order(g, &order)?.rank_one_update(&a, &b)?;
    if let Some((row, col)) = matrix.first_below_diagonal()? {
        return Err(Error::NotTriangular { row, col });
    }
    Ok(WeightedPerturbation {
        order,
        a,
        b,
        matrix,
    })
}

/// `τ(K_n; ω) = (Π x_k)(Σ x_k)^{n-2}`; `1` for `n = 1`.
pub fn weighted_cayley_prufer(n: usize) -> Result<MultiPoly> {
    match n {
        0 => Err(Error::NoVertices),
        1 => Ok(MultiPoly::one(1)),
        _ => {
            let all = 1..=n;
            Ok(&product_x(n, all.clone()) * &sum_x(n, all).pow((n - 2) as u32))
        }
    }
}

/// Weighted threshold formula:
/// `(Π_V x_k)(Π_D (x_i + Σ_{N(i)} x_k))(Π_I Σ_{N(j)} x_k) / Σ_V x_k`.
pub fn weighted_count_threshold(g: &Graph, co: &ConstructionOrder) -> Result<MultiPoly> {
    co.validate(g)?;
    let n = g.vertex_count();
    if co.u_set().len() != n {
        return Err(Error::Precondition(
            "a threshold construction order has U = V".into(),
        ));
    }
    let nbhd = |v: Vertex| sum_x(n, g.neighbors(v).iter().copied());
    let num = &(&product_x(n, g.vertices())
        * &product(
            n,
            co.u_dominating().into_iter().map(|v| &x(n, v) + &nbhd(v)),
        ))
        * &product(n, co.isolated().into_iter().map(nbhd));
    num.checked_div_exact(&sum_x(n, g.vertices()))
}

/// Weighted Ferrers formula in the structure's own vertex variables (row
/// `r_i` ↦ `x_{r_i}`, column `c_j` ↦ `x_{c_j}`):
/// `(Π rows)(Π cols)(Π_{i≥2} Σ_{k≤λ_i} c_k)(Π_{j≥2} Σ_{k≤λ'_j} r_k)`.
pub fn weighted_count_ferrers(fs: &FerrersStructure) -> MultiPoly {
    let n = fs.rows.len() + fs.cols.len();
    let lambda = fs.shape.parts();
    let conj = fs.shape.conjugate();
    let row_sums = lambda[1..]
        .iter()
        .map(|&l| sum_x(n, fs.cols[..l].iter().copied()));
    let col_sums = conj.parts()[1..]
        .iter()
        .map(|&l| sum_x(n, fs.rows[..l].iter().copied()));
    &(&(&product_x(n, fs.rows.iter().copied()) * &product_x(n, fs.cols.iter().copied()))
        * &product(n, row_sums))
        * &product(n, col_sums)
}

/// Weighted special 2-threshold formula:
/// `(Π_V x)(Π_{D_U}(x_i + Σ_N x))(Π_{V∖D_U} Σ_N x) / ((Σ_D x)(Σ_U x))`.
pub fn weighted_count_special_2threshold(g: &Graph, co: &ConstructionOrder) -> Result<MultiPoly> {
    co.validate(g)?;
    let n = g.vertex_count();
    let d = co.u_dominating();
    if d.is_empty() || co.u_set().is_empty() {
        return Err(Error::DegenerateFormula(
            "the special 2-threshold formula needs nonempty D and U".into(),
        ));
    }
    let factors = g.vertices().map(|v| {
        let s = sum_x(n, g.neighbors(v).iter().copied());
        if co.in_u(v) && d.contains(&v) {
            &x(n, v) + &s
        } else {
            s
        }
    });
    let num = &product_x(n, g.vertices()) * &product(n, factors);
    let den = &sum_x(n, d.iter().copied()) * &sum_x(n, co.u_set().iter().copied());
    num.checked_div_exact(&den)
}

/// Weighted closed form, trying Ferrers, threshold and special 2-threshold.
pub fn weighted_formula(
    g: &Graph,
    config: &CountConfig,
) -> Result<Option<(MultiPoly, FormulaFamily)>> {
    if let Some(fs) = ferrers_recognize(g) {
        return Ok(Some((weighted_count_ferrers(&fs), FormulaFamily::Ferrers)));
    }
    if let Some(co) = is_threshold(g).into_order() {
        return Ok(Some((
            weighted_count_threshold(g, &co)?,
            FormulaFamily::Threshold,
        )));
    }
    if let Some(co) = find_special_2threshold_u_with(g, config.search)? {
        if !co.u_dominating().is_empty() && !co.u_set().is_empty() {
            return Ok(Some((
                weighted_count_special_2threshold(g, &co)?,
                FormulaFamily::Special2Threshold,
            )));
        }
    }
    Ok(None)
}

/// A weighted enumerator and how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightedOutcome {
    #[serde(serialize_with = "serialize_display")]
    pub polynomial: MultiPoly,
    pub method: Method,
    pub formula: Option<FormulaFamily>,
}

fn serialize_display<S: serde::Serializer>(p: &MultiPoly, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

/// `τ(G; ω)` with the requested method; mirrors
/// [`crate::count::count_spanning_trees`].
pub fn weighted_enumerator(
    g: &Graph,
    method: Method,
    config: &CountConfig,
) -> Result<WeightedOutcome> {
    let plain = |polynomial, method| WeightedOutcome {
        polynomial,
        method,
        formula: None,
    };
    match method {
        Method::Auto => match weighted_formula(g, config) {
            Ok(Some((p, family))) => Ok(WeightedOutcome {
                polynomial: p,
                method: Method::Formula,
                formula: Some(family),
            }),
            Ok(None) | Err(Error::CapabilityExceeded { .. }) => {
                Ok(plain(weighted_matrix_tree(g)?, Method::MatrixTree))
            }
            Err(e) => Err(e),
        },
        Method::Formula => match weighted_formula(g, config)? {
            Some((p, family)) => Ok(WeightedOutcome {
                polynomial: p,
                method,
                formula: Some(family),
            }),
            None => Err(Error::NotApplicable(
                "no weighted closed form applies".into(),
            )),
        },
        Method::MatrixTree => Ok(plain(weighted_matrix_tree(g)?, method)),
        Method::Oracle => Ok(plain(
            weighted_oracle_with(g, config.oracle_edge_limit)?,
            method,
        )),
        Method::Perturbation => {
            let order = match is_threshold(g).into_order() {
                Some(co) => Some(co),
                None => match find_special_2threshold_u_with(g, config.search) {
                    Ok(co) => co,
                    Err(Error::CapabilityExceeded { .. }) => None,
                    Err(e) => return Err(e),
                },
            };
            let triangular = match order {
                Some(co) => weighted_build_perturbation(g, &co)?.enumerator().ok(),
                None => None,
            };
            let p = match triangular {
                Some(p) => p,
                None => {
                    let n = g.vertex_count();
                    let ones = vec![MultiPoly::one(n); n];
                    weighted_perturbation_count(g, &ones, &ones)?
                }
            };
            Ok(plain(p, method))
        }
    }
}
