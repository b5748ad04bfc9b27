//! Exponent vectors and monomial ideals.
//!
//! A monomial `z^a` is identified with its exponent vector `a` in `N^n`.
//! Ideals are stored by their minimal generators, sorted lexicographically
//! ascending; every index handed out by downstream modules (Scarf vertices,
//! basis elements of the resolution) refers to that order.

use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of `N^n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        Self(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// The exponent of `z_i^k`.
    pub fn pure_power(n: usize, i: usize, k: u32) -> Self {
        let mut e = vec![0; n];
        e[i] = k;
        Self(e)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u32> {
        self.0.iter()
    }

    /// Total degree.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    /// Componentwise maximum, i.e. the exponent of `lcm(z^a, z^b)`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(self.join_unchecked(other))
    }

    pub(crate) fn join_unchecked(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    /// `z^self | z^other`, i.e. `self <= other` componentwise.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `z^self` divides `z^m / z_l` for every variable `z_l` dividing `z^m`.
    ///
    /// Coordinates where `m` vanishes must vanish in `self` as well.
    pub fn strictly_divides(&self, m: &Self) -> Result<bool> {
        self.check_dim(m)?;
        Ok(self.strictly_divides_unchecked(m))
    }

    pub(crate) fn strictly_divides_unchecked(&self, m: &Self) -> bool {
        self.0
            .iter()
            .zip(&m.0)
            .all(|(&c, &mm)| if mm > 0 { c < mm } else { c == 0 })
    }

    /// `self - other`, or `None` if some coordinate would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if self.dim() != other.dim() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    /// `self - (1, ..., 1)`; `None` unless every coordinate is positive.
    pub fn minus_ones(&self) -> Option<Self> {
        self.0
            .iter()
            .map(|&a| a.checked_sub(1))
            .collect::<Option<Vec<_>>>()
            .map(Self)
    }

    pub fn plus_ones(&self) -> Self {
        Self(self.0.iter().map(|&a| a + 1).collect())
    }

    /// Single-variable support, if any: `Some(i)` when only coordinate `i` is nonzero.
    pub fn pure_power_variable(&self) -> Option<usize> {
        let mut support = self.0.iter().enumerate().filter(|(_, &a)| a > 0);
        match (support.next(), support.next()) {
            (Some((i, _)), None) => Some(i),
            _ => None,
        }
    }
}

impl Index<usize> for ExponentVector {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        Self(v.to_vec())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Writes `z^a` in the `x1^3*x2` text format; the zero vector prints as `1`.
pub fn format_monomial(a: &ExponentVector) -> String {
    let factors: Vec<String> = a
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
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// A pair of generators sharing a positive degree in some variable whose lcm
/// has no strict divisor among the generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericityWitness {
    /// Indices into the sorted generator list, `first < second`.
    pub pair: (usize, usize),
    pub generators: (ExponentVector, ExponentVector),
    /// Zero-based variable index.
    pub variable: usize,
}

impl fmt::Display for GenericityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} and {} share degree {} in x{} and no generator strictly divides their lcm",
            format_monomial(&self.generators.0),
            format_monomial(&self.generators.1),
            self.generators.0[self.variable],
            self.variable + 1
        )
    }
}

/// A monomial ideal given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealRepr", into = "IdealRepr")]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<ExponentVector>,
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    n: usize,
    gens: Vec<ExponentVector>,
}

impl TryFrom<IdealRepr> for MonomialIdeal {
    type Error = Error;

    fn try_from(r: IdealRepr) -> Result<Self> {
        let ideal = MonomialIdeal::minimalize(r.gens)?;
        if ideal.n != r.n {
            return Err(Error::DimensionMismatch {
                expected: r.n,
                found: ideal.n,
            });
        }
        Ok(ideal)
    }
}

impl From<MonomialIdeal> for IdealRepr {
    fn from(m: MonomialIdeal) -> Self {
        IdealRepr {
            n: m.n,
            gens: m.gens,
        }
    }
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, discarding every generator
    /// divisible by another one.
    pub fn minimalize<I>(gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        let mut gens: Vec<ExponentVector> = gens.into_iter().collect();
        let n = match gens.first() {
            Some(g) => g.dim(),
            None => return Err(Error::EmptyIdeal),
        };
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        if let Some(bad) = gens.iter().find(|g| g.dim() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.dim(),
            });
        }
        gens.sort();
        gens.dedup();
        // After sorting, a divisor of g is lexicographically smaller, so it
        // suffices to compare against the survivors seen so far.
        let mut minimal: Vec<ExponentVector> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|m| m.divides_unchecked(&g)) {
                minimal.push(g);
            }
        }
        Ok(Self { n, gens: minimal })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    /// `z^a` lies in the ideal iff some generator divides it.
    pub fn contains(&self, a: &ExponentVector) -> Result<bool> {
        if a.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: a.dim(),
            });
        }
        Ok(self.contains_unchecked(a))
    }

    pub(crate) fn contains_unchecked(&self, a: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(a))
    }

    /// Every variable has a pure-power generator.
    pub fn is_artinian(&self) -> bool {
        self.missing_pure_power().is_none()
    }

    fn missing_pure_power(&self) -> Option<usize> {
        (0..self.n).find(|&i| {
            !self
                .gens
                .iter()
                .any(|g| g[i] > 0 && g.pure_power_variable() == Some(i))
        })
    }

    pub fn require_artinian(&self) -> Result<()> {
        match self.missing_pure_power() {
            None => Ok(()),
            Some(i) => Err(Error::NotArtinian(i + 1)),
        }
    }

    /// Degree of the pure-power generator in variable `i`, if present.
    pub fn pure_power_degree(&self, i: usize) -> Option<u32> {
        self.gens
            .iter()
            .find(|g| g[i] > 0 && g.pure_power_variable() == Some(i))
            .map(|g| g[i])
    }

    pub fn is_generic(&self) -> bool {
        self.genericity_witness().is_none()
    }

    /// First violation of genericity, scanning pairs `(i, j)` with `i < j`
    /// and variables in ascending order.
    pub fn genericity_witness(&self) -> Option<GenericityWitness> {
        for (i, a) in self.gens.iter().enumerate() {
            for (j, b) in self.gens.iter().enumerate().skip(i + 1) {
                for l in 0..self.n {
                    if a[l] == 0 || a[l] != b[l] {
                        continue;
                    }
                    let lcm = a.join_unchecked(b);
                    if !self.gens.iter().any(|c| c.strictly_divides_unchecked(&lcm)) {
                        return Some(GenericityWitness {
                            pair: (i, j),
                            generators: (a.clone(), b.clone()),
                            variable: l,
                        });
                    }
                }
            }
        }
        None
    }

    pub fn require_generic(&self) -> Result<()> {
        match self.genericity_witness() {
            None => Ok(()),
            Some(w) => Err(Error::NotGeneric(w)),
        }
    }

    /// Componentwise maximum of the generators.
    pub fn bounding_box(&self) -> ExponentVector {
        let mut b = ExponentVector::zeros(self.n);
        for g in &self.gens {
            b = b.join_unchecked(g);
        }
        b
    }

    /// Index of a generator in the canonical order.
    pub fn index_of(&self, g: &ExponentVector) -> Option<usize> {
        self.gens.binary_search(g).ok()
    }

    /// Applies a relabeling of the variables: coordinate `i` moves to `perm[i]`.
    pub fn permute_variables(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        Self::minimalize(self.gens.iter().map(|g| {
            let mut e = vec![0; self.n];
            for (i, &to) in perm.iter().enumerate() {
                e[to] = g[i];
            }
            ExponentVector::new(e)
        }))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(format_monomial).collect();
        write!(f, "{}", parts.join(", "))
    }
}
