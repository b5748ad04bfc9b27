//! Sparse multivariate polynomials with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::{format_monomial, ExponentVector};

/// Coefficient rings usable in [`Polynomial`].
pub trait Coefficient: Num + Clone + FromPrimitive + Neg<Output = Self> {}

impl<T: Num + Clone + FromPrimitive + Neg<Output = T>> Coefficient for T {}

/// A polynomial in `z_1, ..., z_n` as a map from exponents to nonzero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<C> {
    n: usize,
    terms: BTreeMap<ExponentVector, C>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(coeff: C, exponent: ExponentVector) -> Self {
        let mut p = Self::zero(exponent.dim());
        if !coeff.is_zero() {
            p.terms.insert(exponent, coeff);
        }
        p
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, C)>,
    {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            p.check_dim(&e)?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn check_dim(&self, e: &ExponentVector) -> Result<()> {
        if e.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: e.dim(),
            });
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    fn add_term(&mut self, e: ExponentVector, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(e, sum);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut out = Self::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2)?, c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * k.clone());
        }
        out
    }

    /// `∂/∂z_j` (zero-based `j`).
    pub fn derivative(&self, j: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            if j >= self.n || e[j] == 0 {
                continue;
            }
            let mut v = e.as_slice().to_vec();
            let k = C::from_u32(v[j]).expect("exponent fits the coefficient ring");
            v[j] -= 1;
            out.add_term(ExponentVector::new(v), c.clone() * k);
        }
        out
    }
}

impl<C: Coefficient> Neg for Polynomial<C> {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            n: self.n,
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<C: Coefficient + Signed + fmt::Display> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest exponent first
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let is_const = e.iter().all(|&x| x == 0);
            if is_const {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", format_monomial(e))?;
            } else {
                write!(f, "{abs}*{}", format_monomial(e))?;
            }
        }
        Ok(())
    }
}

/// Serializes as `[[exponent, coefficient], ...]`, coefficients as JSON
/// integers when they fit in 64 bits and as decimal strings otherwise.
impl Serialize for Polynomial<BigInt> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<(&ExponentVector, BigCoeff<'_>)> =
            self.terms.iter().map(|(e, c)| (e, BigCoeff(c))).collect();
        terms.serialize(s)
    }
}

/// Serializes a `BigInt` as a JSON integer when it fits in `i64`.
pub struct BigCoeff<'a>(pub &'a BigInt);

impl Serialize for BigCoeff<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Polynomial<i64>;

    fn ev<const N: usize>(a: [u32; N]) -> ExponentVector {
        ExponentVector::from(a)
    }

    #[test]
    fn power_rule() {
        let p = P::monomial(1, ev([3]));
        assert_eq!(p.derivative(0), P::monomial(3, ev([2])));
        let q = P::monomial(-1, ev([0, 4]));
        assert_eq!(q.derivative(1), P::monomial(-4, ev([0, 3])));
        let r = P::monomial(1, ev([2, 1, 0]));
        assert!(r.derivative(2).is_zero());
    }

    #[test]
    fn product_rule_on_monomials() {
        let f = P::from_terms(2, [(ev([2, 1]), 3), (ev([0, 1]), -1)]).unwrap();
        let g = P::from_terms(2, [(ev([1, 3]), 2), (ev([0, 0]), 5)]).unwrap();
        for j in 0..2 {
            let lhs = f.mul(&g).unwrap().derivative(j);
            let rhs = f
                .derivative(j)
                .mul(&g)
                .unwrap()
                .add(&f.mul(&g.derivative(j)).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn cancellation_drops_terms() {
        let f = P::monomial(2, ev([1, 1]));
        let sum = f.add(&-f.clone()).unwrap();
        assert!(sum.is_zero());
        assert_eq!(sum.num_terms(), 0);
        assert_eq!(P::monomial(0, ev([1])).num_terms(), 0);
    }

    #[test]
    fn display() {
        let f = P::from_terms(2, [(ev([2, 0]), 3), (ev([0, 1]), -1), (ev([0, 0]), 1)]).unwrap();
        assert_eq!(f.to_string(), "3*x1^2 - x2 + 1");
        assert_eq!(P::zero(2).to_string(), "0");
    }

    #[test]
    fn big_serialization() {
        let p = Polynomial::<BigInt>::monomial(BigInt::from(3), ev([2]));
        assert_eq!(serde_json::to_string(&p).unwrap(), "[[[2],3]]");
        let huge: BigInt = BigInt::from(i64::MAX) * 4;
        let q = Polynomial::monomial(huge.clone(), ev([0]));
        assert_eq!(
            serde_json::to_string(&q).unwrap(),
            format!("[[[0],\"{huge}\"]]")
        );
    }
}
