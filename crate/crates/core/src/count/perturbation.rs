//! Matrix-Tree counting and rank-one Laplacian perturbations.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::count::formulas::exact_div;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::linalg::{laplacian, laplacian_in_order, ExactMatrix, IntVector};
use crate::recognition::ConstructionOrder;

/// `τ(G) = det L_{1,1}`; the one-vertex graph has the empty minor, so 1.
pub fn matrix_tree_count(g: &Graph) -> BigInt {
    laplacian(g)
        .minor_determinant(0, 0)
        .expect("a Laplacian is square with at least one row")
}

/// `det(L + a bᵀ) / (Σa · Σb)`.
pub fn perturbation_count(g: &Graph, a: &[BigInt], b: &[BigInt]) -> Result<BigInt> {
    let (sa, sb) = (a.iter().sum::<BigInt>(), b.iter().sum::<BigInt>());
    if sa.is_zero() || sb.is_zero() {
        return Err(Error::ZeroSum);
    }
    let det = laplacian(g).rank_one_update(a, b)?.determinant()?;
    exact_div(&det, &(sa * sb), "rank-one perturbation")
}

/// An upper triangular rank-one perturbation of a reordered Laplacian.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Perturbation {
    /// Vertex order of the rows and columns.
    pub order: Vec<Vertex>,
    /// Indicator of the U-dominating vertices, in `order`.
    #[serde(serialize_with = "serialize_ints")]
    pub a: IntVector,
    /// Indicator of `U`, in `order`.
    #[serde(serialize_with = "serialize_ints")]
    pub b: IntVector,
    #[serde(skip)]
    pub matrix: ExactMatrix,
}

fn serialize_ints<S: serde::Serializer>(v: &IntVector, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

impl Perturbation {
    pub fn diagonal(&self) -> IntVector {
        self.matrix.diagonal()
    }

    /// Determinant as the diagonal product.
    pub fn determinant(&self) -> BigInt {
        self.matrix.diagonal_product()
    }

    /// `det / (Σa · Σb)`; fails when either vector is zero (for instance
    /// edgeless graphs, which have no U-dominating vertex).
    pub fn tree_count(&self) -> Result<BigInt> {
        let sa: BigInt = self.a.iter().sum();
        let sb: BigInt = self.b.iter().sum();
        if sa.is_zero() || sb.is_zero() {
            return Err(Error::ZeroSum);
        }
        exact_div(&self.determinant(), &(sa * sb), "triangular perturbation")
    }
}

/// Reorders `L(G)` by a construction order and adds `a bᵀ` with `a` the
/// indicator of `D` and `b` the indicator of `U`; the result is upper
/// triangular.
pub fn build_perturbation(g: &Graph, co: &ConstructionOrder) -> Result<Perturbation> {
    co.validate(g)?;
    let order = co.order().to_vec();
    let indicator = |keep: &dyn Fn(Vertex) -> bool| -> IntVector {
        order
            .iter()
            .map(|&v| {
                if keep(v) {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            })
            .collect()
    };
    let d = co.u_dominating();
    let a = indicator(&|v| d.contains(&v));
    let b = indicator(&|v| co.in_u(v));
    let matrix = laplacian_in_order(g, &order)?.rank_one_update(&a, &b)?;
    if let Some((row, col)) = matrix.first_below_diagonal()? {
        return Err(Error::NotTriangular { row, col });
    }
    Ok(Perturbation {
        order,
        a,
        b,
        matrix,
    })
}
