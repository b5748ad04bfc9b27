use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{0, ..., n-1}`, stored as its image list.
///
/// Displayed and parsed one-based, so `(3,1,2)` is the permutation with
/// `sigma(1) = 3`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[i] = true;
        }
        Ok(Self(images))
    }

    /// From one-based images such as `[3, 1, 2]`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let zero: Option<Vec<usize>> = images.iter().map(|&i| i.checked_sub(1)).collect();
        match zero {
            Some(z) => Self::new(z),
            None => Err(Error::InvalidPermutation(format!("{images:?}"))),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// All permutations of `{0..n}` in lexicographic order of their image lists.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n).permutations(n).map(Permutation)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different size"
        );
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    /// +1 for even, -1 for odd permutations.
    pub fn sign(&self) -> i64 {
        let inversions = (0..self.len())
            .tuple_combinations()
            .filter(|&(i, j)| self.0[i] > self.0[j])
            .count();
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.one_based().iter().join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `3,1,2`, `(3,1,2)` or `312` (the last only for n <= 9).
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let bad = || Error::InvalidPermutation(s.to_string());
        let images: Vec<usize> = if trimmed.contains(',') {
            trimmed
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            trimmed
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        if images.is_empty() {
            return Err(bad());
        }
        Self::from_one_based(&images)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p: Permutation = "(3,1,2)".parse().unwrap();
        assert_eq!(p.images(), &[2, 0, 1]);
        assert_eq!(p.to_string(), "(3,1,2)");
        assert_eq!("312".parse::<Permutation>().unwrap(), p);
        assert!("1,1,2".parse::<Permutation>().is_err());
        assert!("0,1".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
    }

    #[test]
    fn signs_and_composition() {
        assert_eq!(Permutation::identity(4).sign(), 1);
        assert_eq!("2,1".parse::<Permutation>().unwrap().sign(), -1);
        assert_eq!("3,1,2".parse::<Permutation>().unwrap().sign(), 1);
        assert_eq!("3,2,1".parse::<Permutation>().unwrap().sign(), -1);
        for p in Permutation::all(4) {
            assert_eq!(p.compose(&p.inverse()), Permutation::identity(4));
            for q in Permutation::all(4) {
                assert_eq!(p.compose(&q).sign(), p.sign() * q.sign());
            }
        }
        assert_eq!(Permutation::all(3).count(), 6);
    }
}
