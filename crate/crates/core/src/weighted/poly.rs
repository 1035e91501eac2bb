//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Ring;

/// Exponent vector with trailing zeros trimmed, so equal monomials compare
/// equal regardless of how they were built.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// `x_{index+1}` (variables are 0-indexed internally).
    pub fn var(index: usize) -> Self {
        let mut e = vec![0; index + 1];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0.get(index).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of variables actually present (index of last nonzero + 1).
    pub fn support_len(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.0.len().max(other.0.len());
        let exps = (0..len)
            .map(|i| self.exponent(i) + other.exponent(i))
            .collect();
        Monomial(exps)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut exps = Vec::with_capacity(self.0.len());
        for i in 0..self.0.len() {
            exps.push(self.exponent(i).checked_sub(other.exponent(i))?);
        }
        Some(Monomial::from_exponents(exps))
    }
}

/// Graded lexicographic order: total degree first, then lexicographic with
/// `x1 > x2 > ...`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let len = self.0.len().max(other.0.len());
            (0..len)
                .map(|i| self.exponent(i).cmp(&other.exponent(i)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `nvars` indeterminates `x1..x_nvars` over the integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(), c.into());
        p
    }

    /// The indeterminate `x_{index+1}`.
    ///
    /// # Panics
    /// If `index >= nvars`.
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(
            index < nvars,
            "variable index {index} out of range for {nvars} variables"
        );
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(index), BigInt::one());
        p
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs; like terms
    /// are merged and zero terms dropped.
    pub fn from_terms<I, C>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (C, Vec<u32>)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(nvars);
        for (c, exps) in terms {
            if exps.len() > nvars && exps[nvars..].iter().any(|&e| e > 0) {
                return Err(Error::VariableCountMismatch {
                    left: nvars,
                    right: exps.len(),
                });
            }
            p.add_term(Monomial::from_exponents(exps), c.into());
        }
        Ok(p)
    }

    /// Sum of the given variables.
    pub fn sum_of_vars(nvars: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        indices
            .into_iter()
            .fold(Self::zero(nvars), |acc, i| &acc + &Self::var(nvars, i))
    }

    /// Product of the given variables.
    pub fn product_of_vars(nvars: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        indices
            .into_iter()
            .fold(Self::one(nvars), |acc, i| &acc * &Self::var(nvars, i))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// True when every term has the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: other.nvars,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, k) in &self.terms {
            out.add_term(m.clone(), k * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.nvars), |acc, _| &acc * self)
    }

    /// Exact quotient over the integers, or `None` if `divisor` does not
    /// divide `self` (or is zero).
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if self.nvars != divisor.nvars {
            return None;
        }
        let (lm, lc) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(lm)?;
            let (qc, r) = c.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            let mut t = Self::zero(self.nvars);
            t.add_term(qm, qc);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Checked form of [`MultiPoly::div_exact`].
    pub fn checked_div_exact(&self, divisor: &Self) -> Result<Self> {
        self.check(divisor)?;
        self.div_exact(divisor).ok_or_else(|| {
            Error::InexactDivision(format!("({self}) is not divisible by ({divisor})"))
        })
    }

    /// Evaluates at an integer point.
    pub fn evaluate(&self, point: &[BigInt]) -> Result<BigInt> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                t *= num_traits::pow(point[i].clone(), e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Value at `x_i = 1` for every `i`: the sum of the coefficients.
    pub fn substitute_all_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Renames variables: `x_{i+1}` becomes `x_{map[i]+1}` in a ring with
    /// `nvars` indeterminates.
    pub fn rename_vars(&self, nvars: usize, map: &[usize]) -> Result<Self> {
        if map.len() < self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&t| t >= nvars) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                len: nvars,
            });
        }
        let mut out = Self::zero(nvars);
        for (m, c) in &self.terms {
            let mut exps = vec![0; nvars];
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[map[i]] += e;
            }
            out.add_term(Monomial::from_exponents(exps), c.clone());
        }
        Ok(out)
    }
}

fn same_ring(a: &MultiPoly, b: &MultiPoly) {
    assert_eq!(
        a.nvars, b.nvars,
        "polynomials over {} and {} variables cannot be combined",
        a.nvars, b.nvars
    );
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        same_ring(self, rhs);
        self.checked_add(rhs).expect("same ring")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        same_ring(self, rhs);
        self.checked_sub(rhs).expect("same ring")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        same_ring(self, rhs);
        self.checked_mul(rhs).expect("same ring")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        self.scale(&BigInt::from(-1))
    }
}

impl Ring for MultiPoly {
    type Context = usize;

    fn context(&self) -> usize {
        self.nvars
    }

    fn zero_in(nvars: usize) -> Self {
        MultiPoly::zero(nvars)
    }

    fn one_in(nvars: usize) -> Self {
        MultiPoly::one(nvars)
    }

    fn is_zero_element(&self) -> bool {
        self.is_zero()
    }

    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        MultiPoly::div_exact(self, divisor)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let vars: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, e)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::from_exponents(vec![2, 1]);
        let b = Monomial::from_exponents(vec![0, 0, 3]);
        let c = Monomial::from_exponents(vec![1]);
        assert!(b < a);
        assert!(c < b);
        assert!(Monomial::var(0) > Monomial::var(1));
        assert_eq!(Monomial::from_exponents(vec![1, 0, 0]), Monomial::var(0));
    }

    #[test]
    fn display() {
        let p = MultiPoly::from_terms(2, [(3, vec![2, 1]), (1, vec![1, 0]), (-2, vec![])]).unwrap();
        assert_eq!(p.to_string(), "3*x1^2*x2 + x1 - 2");
        assert_eq!(MultiPoly::zero(3).to_string(), "0");
        assert_eq!((-&x(2, 1)).to_string(), "-x2");
    }

    #[test]
    fn arithmetic() {
        let s = &(&x(3, 0) + &x(3, 1)) + &x(3, 2);
        let sq = &s * &s;
        assert_eq!(sq.term_count(), 6);
        assert_eq!(sq.substitute_all_ones(), BigInt::from(9));
        assert!(sq.is_homogeneous());
        assert_eq!((&sq - &sq), MultiPoly::zero(3));
        assert_eq!(s.pow(0), MultiPoly::one(3));
        assert_eq!(s.pow(3).total_degree(), Some(3));
    }

    #[test]
    fn exact_division() {
        let s = &x(2, 0) + &x(2, 1);
        let d = &x(2, 0) - &x(2, 1);
        let p = &s * &d;
        assert_eq!(p.div_exact(&s), Some(d.clone()));
        assert_eq!(p.div_exact(&d), Some(s.clone()));
        assert_eq!(s.div_exact(&d), None);
        assert_eq!(s.div_exact(&MultiPoly::zero(2)), None);
        let two = MultiPoly::constant(2, 2);
        assert_eq!(s.div_exact(&two), None);
        assert_eq!(s.scale(&BigInt::from(2)).div_exact(&two), Some(s));
    }

    #[test]
    fn mismatched_rings() {
        assert!(matches!(
            x(2, 0).checked_add(&x(3, 0)),
            Err(Error::VariableCountMismatch { left: 2, right: 3 })
        ));
        assert!(MultiPoly::from_terms(2, [(1, vec![0, 0, 1])]).is_err());
    }

    #[test]
    #[should_panic(expected = "cannot be combined")]
    fn operator_mismatch_panics() {
        let _ = &x(2, 0) * &x(3, 0);
    }

    #[test]
    fn evaluation_and_renaming() {
        let p = &(&x(3, 0) * &x(3, 1)) + &MultiPoly::constant(3, 5);
        let pt = [2, 3, 7].map(BigInt::from);
        assert_eq!(p.evaluate(&pt).unwrap(), BigInt::from(11));
        let r = p.rename_vars(4, &[3, 2, 1]).unwrap();
        assert_eq!(r, &(&x(4, 3) * &x(4, 2)) + &MultiPoly::constant(4, 5));
    }
}
