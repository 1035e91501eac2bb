//! Exact dense linear algebra over integral domains.
//!
//! [`Matrix`] is generic over a [`Ring`] so the same fraction-free
//! elimination serves both integer Laplacians and the polynomial-valued
//! weighted Laplacians. Matrix indices are 0-based.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{permutation_positions, Graph, Vertex};

/// A commutative integral domain with exact division.
///
/// `Context` carries whatever is needed to build constants (the number of
/// indeterminates for polynomials, nothing for integers).
pub trait Ring: Clone + PartialEq + fmt::Debug
where
    for<'a> &'a Self: Add<&'a Self, Output = Self>
        + Sub<&'a Self, Output = Self>
        + Mul<&'a Self, Output = Self>
        + Neg<Output = Self>,
{
    type Context: Copy + PartialEq + fmt::Debug;

    fn context(&self) -> Self::Context;
    fn zero_in(ctx: Self::Context) -> Self;
    fn one_in(ctx: Self::Context) -> Self;
    fn is_zero_element(&self) -> bool;
    /// `self / divisor` when the division is exact, `None` otherwise.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

impl Ring for BigInt {
    type Context = ();

    fn context(&self) {}

    fn zero_in(_: ()) -> Self {
        BigInt::zero()
    }

    fn one_in(_: ()) -> Self {
        BigInt::one()
    }

    fn is_zero_element(&self) -> bool {
        self.is_zero()
    }

    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T: Ring>
where
    for<'a> &'a T:
        Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T> + Neg<Output = T>,
{
    rows: usize,
    cols: usize,
    ctx: T::Context,
    data: Vec<T>,
}

/// Integer matrix.
pub type ExactMatrix = Matrix<BigInt>;

/// Integer column vector.
pub type IntVector = Vec<BigInt>;

impl<T: Ring> Matrix<T>
where
    for<'a> &'a T:
        Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T> + Neg<Output = T>,
{
    pub fn zeros(ctx: T::Context, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            ctx,
            data: vec![T::zero_in(ctx); rows * cols],
        }
    }

    pub fn identity(ctx: T::Context, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m[(i, i)] = T::one_in(ctx);
        }
        m
    }

    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows(ctx: T::Context, rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            ctx,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn context(&self) -> T::Context {
        self.ctx
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// `M + a bᵀ`.
    pub fn rank_one_update(&self, a: &[T], b: &[T]) -> Result<Self> {
        if a.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: a.len(),
            });
        }
        if b.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: b.len(),
            });
        }
        let mut out = self.clone();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero_element() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                let prod = ai * bj;
                out[(i, j)] = &out[(i, j)] + &prod;
            }
        }
        Ok(out)
    }

    /// True iff every entry strictly below the diagonal is zero.
    pub fn is_upper_triangular(&self) -> Result<bool> {
        Ok(self.first_below_diagonal()?.is_none())
    }

    /// First nonzero entry below the diagonal, scanning row by row.
    pub fn first_below_diagonal(&self) -> Result<Option<(usize, usize)>> {
        self.require_square()?;
        for i in 0..self.rows {
            for j in 0..i {
                if !self[(i, j)].is_zero_element() {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    /// Product of the diagonal entries (the empty product is one).
    pub fn diagonal_product(&self) -> T {
        self.diagonal()
            .iter()
            .fold(T::one_in(self.ctx), |acc, d| &acc * d)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination. Every
    /// intermediate division is exact; the 0x0 determinant is one.
    pub fn determinant(&self) -> Result<T> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(T::one_in(self.ctx));
        }
        let mut a = self.data.clone();
        let at = |i: usize, j: usize| i * n + j;
        let mut negate = false;
        let mut prev = T::one_in(self.ctx);
        for k in 0..n - 1 {
            let Some(p) = (k..n).find(|&r| !a[at(r, k)].is_zero_element()) else {
                return Ok(T::zero_in(self.ctx));
            };
            if p != k {
                for j in 0..n {
                    a.swap(at(p, j), at(k, j));
                }
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[at(i, j)] * &a[at(k, k)]) - &(&a[at(i, k)] * &a[at(k, j)]);
                    a[at(i, j)] = num.div_exact(&prev).ok_or_else(|| {
                        Error::InexactDivision(format!(
                            "fraction-free elimination step ({k}, {i}, {j})"
                        ))
                    })?;
                }
                a[at(i, k)] = T::zero_in(self.ctx);
            }
            prev = a[at(k, k)].clone();
        }
        let det = a[at(n - 1, n - 1)].clone();
        Ok(if negate { -&det } else { det })
    }

    /// Determinant by Laplace expansion along the first row. Exponential;
    /// intended as an independent check on small matrices.
    pub fn laplace_determinant(&self) -> Result<T> {
        self.require_square()?;
        Ok(laplace(self))
    }

    /// The matrix with row `i` and column `j` removed.
    pub fn minor(&self, i: usize, j: usize) -> Result<Self> {
        if i >= self.rows {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.rows,
            });
        }
        if j >= self.cols {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.cols,
            });
        }
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in (0..self.rows).filter(|&r| r != i) {
            for c in (0..self.cols).filter(|&c| c != j) {
                data.push(self[(r, c)].clone());
            }
        }
        Ok(Matrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            ctx: self.ctx,
            data,
        })
    }

    /// `det` of the `(i, j)` deletion; the `(-1)^{i+j}` sign is left to the
    /// caller.
    pub fn minor_determinant(&self, i: usize, j: usize) -> Result<T> {
        self.require_square()?;
        self.minor(i, j)?.determinant()
    }

    /// Simultaneous row and column permutation: entry `(i, j)` of the result
    /// is entry `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        self.require_square()?;
        if perm.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: perm.len(),
            });
        }
        let mut out = Self::zeros(self.ctx, self.rows, self.cols);
        for (i, &pi) in perm.iter().enumerate() {
            for (j, &pj) in perm.iter().enumerate() {
                out[(i, j)] = self[(pi, pj)].clone();
            }
        }
        Ok(out)
    }
}

fn laplace<T: Ring>(m: &Matrix<T>) -> T
where
    for<'a> &'a T:
        Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T> + Neg<Output = T>,
{
    let n = m.rows;
    match n {
        0 => T::one_in(m.ctx),
        1 => m[(0, 0)].clone(),
        _ => {
            let mut acc = T::zero_in(m.ctx);
            for j in 0..n {
                if m[(0, j)].is_zero_element() {
                    continue;
                }
                let term = &m[(0, j)] * &laplace(&m.minor(0, j).expect("in range"));
                acc = if j % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
    }
}

impl<T: Ring> Index<(usize, usize)> for Matrix<T>
where
    for<'a> &'a T:
        Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T> + Neg<Output = T>,
{
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(
            i < self.rows && j < self.cols,
            "matrix index ({i}, {j}) out of range"
        );
        &self.data[i * self.cols + j]
    }
}

impl<T: Ring> IndexMut<(usize, usize)> for Matrix<T>
where
    for<'a> &'a T:
        Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T> + Neg<Output = T>,
{
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(
            i < self.rows && j < self.cols,
            "matrix index ({i}, {j}) out of range"
        );
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Matrix<T>
where
    for<'a> &'a T:
        Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T> + Neg<Output = T>,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            writeln!(f, "[ {} ]", row.join("  "))?;
        }
        Ok(())
    }
}

/// Builds an integer matrix from small literals; handy in tests and examples.
pub fn int_matrix(rows: &[&[i64]]) -> ExactMatrix {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    Matrix::from_rows((), rows).expect("rows have equal length")
}

pub fn int_vector(entries: &[i64]) -> IntVector {
    entries.iter().map(|&x| BigInt::from(x)).collect()
}

/// `L(G)` with rows and columns in vertex order `1..=n`.
pub fn laplacian(g: &Graph) -> ExactMatrix {
    let n = g.vertex_count();
    let mut l = ExactMatrix::zeros((), n, n);
    for v in g.vertices() {
        l[(v - 1, v - 1)] = BigInt::from(g.degree(v));
        for &w in g.neighbors(v) {
            l[(v - 1, w - 1)] = BigInt::from(-1);
        }
    }
    l
}

/// `L(G)` with rows and columns in the given vertex order.
pub fn laplacian_in_order(g: &Graph, order: &[Vertex]) -> Result<ExactMatrix> {
    permutation_positions(order, g.vertex_count())?;
    let perm: Vec<usize> = order.iter().map(|&v| v - 1).collect();
    laplacian(g).permuted(&perm)
}

/// `M + a bᵀ` for integer matrices.
pub fn rank_one_update(m: &ExactMatrix, a: &[BigInt], b: &[BigInt]) -> Result<ExactMatrix> {
    m.rank_one_update(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1a() -> Graph {
        Graph::from_edges(6, [(1, 2), (1, 4), (2, 3), (2, 5), (2, 6), (4, 5), (5, 6)]).unwrap()
    }

    #[test]
    fn laplacian_of_fig1a() {
        let expected = int_matrix(&[
            &[2, -1, 0, -1, 0, 0],
            &[-1, 4, -1, 0, -1, -1],
            &[0, -1, 1, 0, 0, 0],
            &[-1, 0, 0, 2, -1, 0],
            &[0, -1, 0, -1, 3, -1],
            &[0, -1, 0, 0, -1, 2],
        ]);
        assert_eq!(laplacian(&fig1a()), expected);
    }

    #[test]
    fn small_laplacians() {
        assert_eq!(
            laplacian(&Graph::edgeless(3).unwrap()),
            ExactMatrix::zeros((), 3, 3)
        );
        assert_eq!(
            laplacian(&Graph::complete(2).unwrap()),
            int_matrix(&[&[1, -1], &[-1, 1]])
        );
    }

    fn threshold_example_laplacian() -> ExactMatrix {
        int_matrix(&[
            &[2, 0, -1, 0, -1],
            &[0, 2, -1, 0, -1],
            &[-1, -1, 3, 0, -1],
            &[0, 0, 0, 1, -1],
            &[-1, -1, -1, -1, 4],
        ])
    }

    fn ferrers_example_laplacian() -> ExactMatrix {
        int_matrix(&[
            &[4, -1, 0, -1, -1, 0, -1],
            &[-1, 1, 0, 0, 0, 0, 0],
            &[0, 0, 3, -1, -1, 0, -1],
            &[-1, 0, -1, 2, 0, 0, 0],
            &[-1, 0, -1, 0, 2, 0, 0],
            &[0, 0, 0, 0, 0, 1, -1],
            &[-1, 0, -1, 0, 0, -1, 3],
        ])
    }

    #[test]
    fn threshold_perturbation_example() {
        let p = threshold_example_laplacian()
            .rank_one_update(&int_vector(&[0, 0, 1, 0, 1]), &int_vector(&[1; 5]))
            .unwrap();
        assert!(p.is_upper_triangular().unwrap());
        assert_eq!(p.diagonal(), int_vector(&[2, 2, 4, 1, 5]));
        assert_eq!(p.determinant().unwrap(), BigInt::from(80));
        assert_eq!(
            p,
            int_matrix(&[
                &[2, 0, -1, 0, -1],
                &[0, 2, -1, 0, -1],
                &[0, 0, 4, 1, 0],
                &[0, 0, 0, 1, -1],
                &[0, 0, 0, 0, 5],
            ])
        );
    }

    #[test]
    fn ferrers_perturbation_example() {
        let p = ferrers_example_laplacian()
            .rank_one_update(
                &int_vector(&[0, 1, 0, 1, 1, 0, 1]),
                &int_vector(&[1, 0, 1, 0, 0, 1, 0]),
            )
            .unwrap();
        assert!(p.is_upper_triangular().unwrap());
        assert_eq!(p.diagonal(), int_vector(&[4, 1, 3, 2, 2, 1, 3]));
        assert_eq!(p.determinant().unwrap(), BigInt::from(144));
    }

    #[test]
    fn zero_update_is_identity() {
        let m = threshold_example_laplacian();
        assert_eq!(
            m.rank_one_update(&int_vector(&[0; 5]), &int_vector(&[3; 5]))
                .unwrap(),
            m
        );
        assert!(matches!(
            m.rank_one_update(&int_vector(&[0; 4]), &int_vector(&[3; 5])),
            Err(Error::DimensionMismatch {
                expected: 5,
                found: 4
            })
        ));
    }

    #[test]
    fn determinants() {
        assert_eq!(
            ExactMatrix::identity((), 3).determinant().unwrap(),
            BigInt::one()
        );
        assert_eq!(
            ExactMatrix::zeros((), 0, 0).determinant().unwrap(),
            BigInt::one()
        );
        let swap = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(swap.determinant().unwrap(), BigInt::from(-1));
        let singular = int_matrix(&[&[0, 1, 2], &[0, 3, 4], &[0, 5, 6]]);
        assert_eq!(singular.determinant().unwrap(), BigInt::zero());
        assert!(matches!(
            ExactMatrix::zeros((), 2, 3).determinant(),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn matrix_tree_minor_of_fig1a() {
        let l = laplacian(&fig1a());
        assert_eq!(l.minor_determinant(0, 0).unwrap(), BigInt::from(11));
        assert_eq!(l.laplace_determinant().unwrap(), BigInt::zero());
        let one = int_matrix(&[&[7]]);
        assert_eq!(one.minor_determinant(0, 0).unwrap(), BigInt::one());
        let k2 = laplacian(&Graph::complete(2).unwrap());
        assert_eq!(k2.minor_determinant(0, 0).unwrap(), BigInt::one());
        assert!(matches!(
            k2.minor_determinant(2, 0),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        ));
    }

    #[test]
    fn triangularity() {
        assert!(!laplacian(&fig1a()).is_upper_triangular().unwrap());
        assert!(ExactMatrix::zeros((), 4, 4).is_upper_triangular().unwrap());
        assert!(ExactMatrix::zeros((), 2, 4).is_upper_triangular().is_err());
    }

    #[test]
    fn permuted_laplacian_matches_relabeling() {
        let g = fig1a();
        let order = [3, 1, 6, 2, 5, 4];
        let direct = laplacian(&g.relabeled(&order).unwrap());
        assert_eq!(laplacian_in_order(&g, &order).unwrap(), direct);
    }
}
