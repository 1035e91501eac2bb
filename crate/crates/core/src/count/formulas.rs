//! Closed-form spanning tree counts.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::{ConstructionOrder, FerrersStructure};

pub(crate) fn exact_div(num: &BigInt, den: &BigInt, what: &str) -> Result<BigInt> {
    if den.is_zero() {
        return Err(Error::InexactDivision(format!("{what}: division by zero")));
    }
    let q = num / den;
    if &q * den != *num {
        return Err(Error::InexactDivision(format!(
            "{what}: {num} is not divisible by {den}"
        )));
    }
    Ok(q)
}

fn pow(base: usize, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}

fn positive(sizes: &[usize]) -> Result<()> {
    if sizes.is_empty() || sizes.contains(&0) {
        return Err(Error::InvalidPartition("sizes must be positive".into()));
    }
    Ok(())
}

/// `τ(K_n) = n^{n-2}`, with `τ(K_1) = τ(K_2) = 1`.
pub fn count_complete(n: usize) -> Result<BigInt> {
    positive(&[n])?;
    Ok(if n <= 2 { BigInt::one() } else { pow(n, n - 2) })
}

/// `τ(K_{m,n}) = m^{n-1} n^{m-1}`.
pub fn count_bipartite(m: usize, n: usize) -> Result<BigInt> {
    positive(&[m, n])?;
    Ok(pow(m, n - 1) * pow(n, m - 1))
}

/// `τ(K_{n_1,...,n_k}) = n^{k-2} Π (n - n_i)^{n_i - 1}` with `n = Σ n_i`.
/// A single part is an edgeless graph: one tree on one vertex, none
/// otherwise.
pub fn count_multipartite(sizes: &[usize]) -> Result<BigInt> {
    positive(sizes)?;
    let n: usize = sizes.iter().sum();
    let k = sizes.len();
    if k == 1 {
        return Ok(if n == 1 {
            BigInt::one()
        } else {
            BigInt::zero()
        });
    }
    Ok(sizes
        .iter()
        .fold(pow(n, k - 2), |acc, &ni| acc * pow(n - ni, ni - 1)))
}

/// `Π_{D}(deg + 1) · Π_{I} deg / n` for a threshold construction order
/// (`U = V`); the initial vertex appears in neither product.
pub fn count_threshold(g: &Graph, co: &ConstructionOrder) -> Result<BigInt> {
    co.validate(g)?;
    if co.u_set().len() != g.vertex_count() {
        return Err(Error::Precondition(
            "a threshold construction order has U = V".into(),
        ));
    }
    let num = co
        .u_dominating()
        .iter()
        .map(|&v| BigInt::from(g.degree(v) + 1))
        .chain(co.isolated().iter().map(|&v| BigInt::from(g.degree(v))))
        .product::<BigInt>();
    exact_div(&num, &BigInt::from(g.vertex_count()), "threshold formula")
}

/// `Π λ_i · Π λ'_j / (m n)` for a Ferrers graph of shape `λ` with `m` rows
/// and `n` columns.
pub fn count_ferrers(fs: &FerrersStructure) -> Result<BigInt> {
    let shape = &fs.shape;
    let num: BigInt = shape
        .parts()
        .iter()
        .chain(shape.conjugate().parts())
        .map(|&p| BigInt::from(p))
        .product();
    exact_div(
        &num,
        &BigInt::from(shape.rows() * shape.columns()),
        "Ferrers formula",
    )
}

/// `Π_{D_U}(deg + 1) · Π_{V ∖ D_U} deg / (|D| |U|)` for a U-threshold
/// construction order. Undefined (an error) when `D` or `U` is empty.
pub fn count_special_2threshold(g: &Graph, co: &ConstructionOrder) -> Result<BigInt> {
    co.validate(g)?;
    let d = co.u_dominating();
    let u = co.u_set();
    if d.is_empty() || u.is_empty() {
        return Err(Error::DegenerateFormula(
            "the special 2-threshold formula needs nonempty D and U".into(),
        ));
    }
    let num: BigInt = g
        .vertices()
        .map(|v| {
            if co.in_u(v) && d.contains(&v) {
                BigInt::from(g.degree(v) + 1)
            } else {
                BigInt::from(g.degree(v))
            }
        })
        .product();
    exact_div(
        &num,
        &BigInt::from(d.len() * u.len()),
        "special 2-threshold formula",
    )
}
