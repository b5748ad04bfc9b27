//! Differentials of a labeled complex and the checks that make it a
//! (minimal) free resolution.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::complex::LabeledComplex;
use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::monomial::ExponentVector;

/// One nonzero entry `sign * z^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoEntry {
    pub row: usize,
    pub col: usize,
    pub sign: i8,
    pub exponent: ExponentVector,
}

impl Serialize for MonoEntry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.row, self.col, self.sign, &self.exponent).serialize(s)
    }
}

/// A sparse matrix whose entries are signed monomials. Entries are stored
/// column by column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SparseMonoMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<MonoEntry>,
}

impl SparseMonoMatrix {
    pub fn entry(&self, row: usize, col: usize) -> Option<&MonoEntry> {
        self.entries.iter().find(|e| e.row == row && e.col == col)
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = &MonoEntry> {
        self.entries.iter().filter(move |e| e.col == col)
    }

    /// Dense evaluation at an integer point.
    pub fn evaluate(&self, point: &[BigInt]) -> Vec<Vec<BigRational>> {
        let mut m = vec![vec![BigRational::default(); self.cols]; self.rows];
        for e in &self.entries {
            let mut v = BigInt::one();
            for (p, &k) in point.iter().zip(e.exponent.iter()) {
                v *= Pow::pow(p, k);
            }
            if e.sign < 0 {
                v = -v;
            }
            m[e.row][e.col] = BigRational::from_integer(v);
        }
        m
    }
}

/// `φ_1, ..., φ_{d+1}`. `φ_1` is the `1 × |vertices|` row of generators;
/// `φ_{k+1}` has entry `sgn(δ,γ) z^{label(γ) - label(δ)}` for each
/// `k`-cell `γ` and boundary cell `δ`.
pub fn differentials(x: &LabeledComplex) -> Result<Vec<SparseMonoMatrix>> {
    let mut mats = Vec::with_capacity(x.cells.len());
    let vertices = x.vertices();
    mats.push(SparseMonoMatrix {
        rows: 1,
        cols: vertices.len(),
        entries: vertices
            .iter()
            .enumerate()
            .map(|(v, c)| MonoEntry {
                row: 0,
                col: v,
                sign: 1,
                exponent: c.label.clone(),
            })
            .collect(),
    });
    for k in 1..x.cells.len() {
        let below = &x.cells[k - 1];
        let mut entries = Vec::new();
        for (g, cell) in x.cells[k].iter().enumerate() {
            for &(d, sign) in &cell.boundary {
                let exponent = cell.label.checked_sub(&below[d].label).ok_or_else(|| {
                    Error::InvalidComplex(format!(
                        "label of cell {d} in dimension {} does not divide cell {g} in dimension {k}",
                        k - 1
                    ))
                })?;
                entries.push(MonoEntry {
                    row: d,
                    col: g,
                    sign,
                    exponent,
                });
            }
        }
        mats.push(SparseMonoMatrix {
            rows: below.len(),
            cols: x.cells[k].len(),
            entries,
        });
    }
    Ok(mats)
}

/// `φ_k ∘ φ_{k+1} = 0` for all consecutive pairs, by symbolic cancellation.
pub fn check_complex(mats: &[SparseMonoMatrix]) -> bool {
    mats.windows(2).all(|w| {
        let (a, b) = (&w[0], &w[1]);
        if a.cols != b.rows {
            return false;
        }
        let mut by_row: Vec<Vec<&MonoEntry>> = vec![Vec::new(); a.cols];
        for e in &a.entries {
            by_row[e.col].push(e);
        }
        let mut product: BTreeMap<(usize, usize, ExponentVector), i64> = BTreeMap::new();
        for eb in &b.entries {
            for ea in &by_row[eb.row] {
                let Ok(exp) = ea.exponent.add(&eb.exponent) else {
                    return false;
                };
                *product.entry((ea.row, eb.col, exp)).or_default() +=
                    i64::from(ea.sign) * i64::from(eb.sign);
            }
        }
        product.values().all(|&c| c == 0)
    })
}

/// No entry is a unit (a constant `±1`).
pub fn check_minimal(mats: &[SparseMonoMatrix]) -> bool {
    mats.iter()
        .flat_map(|m| &m.entries)
        .all(|e| e.exponent.iter().any(|&k| k > 0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub exact: bool,
    /// Evaluation points tried, in order.
    pub points: Vec<Vec<u32>>,
    /// Ranks of `φ_1, ..., φ_{d+1}` at the last point tried.
    pub ranks: Vec<usize>,
}

const MAX_ATTEMPTS: usize = 3;

/// Exactness away from the origin: at a random point with coordinates in
/// `[2, 97]`, `rank φ_1 = 1` and `rank φ_k + rank φ_{k+1} = rank E_k` for
/// `k >= 1` (with `φ_{d+2} = 0`). An unlucky point can only lower ranks, so
/// a failing point is retried up to three times; `exact == true` is certain.
pub fn check_generic_exactness(mats: &[SparseMonoMatrix], n: usize, seed: u64) -> ExactnessReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::new();
    let mut ranks = Vec::new();
    for _ in 0..MAX_ATTEMPTS {
        let point: Vec<u32> = (0..n).map(|_| rng.gen_range(2..=97)).collect();
        let big: Vec<BigInt> = point.iter().map(|&p| BigInt::from(p)).collect();
        points.push(point);
        ranks = mats.iter().map(|m| rank(m.evaluate(&big))).collect();
        let exact = !mats.is_empty()
            && ranks[0] == 1
            && (0..mats.len()).all(|k| {
                let next = ranks.get(k + 1).copied().unwrap_or(0);
                ranks[k] + next == mats[k].cols
            });
        if exact {
            return ExactnessReport {
                exact: true,
                points,
                ranks,
            };
        }
    }
    ExactnessReport {
        exact: false,
        points,
        ranks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::scarf_to_complex;
    use crate::parse::parse_ideal;
    use crate::scarf::build_scarf;

    fn scarf_mats(text: &str) -> (usize, Vec<SparseMonoMatrix>) {
        let m = parse_ideal(text).unwrap();
        let x = scarf_to_complex(&build_scarf(&m).unwrap());
        (m.dim(), differentials(&x).unwrap())
    }

    #[test]
    fn one_variable() {
        let (n, mats) = scarf_mats("x1^4");
        assert_eq!(mats.len(), 1);
        assert_eq!(mats[0].entries[0].exponent, ExponentVector::from([4]));
        assert!(check_complex(&mats) && check_minimal(&mats));
        assert!(check_generic_exactness(&mats, n, 1).exact);
    }

    #[test]
    fn koszul() {
        let (n, mats) = scarf_mats("x1, x2");
        assert_eq!((mats[0].rows, mats[0].cols), (1, 2));
        assert_eq!((mats[1].rows, mats[1].cols), (2, 1));
        assert!(check_complex(&mats) && check_minimal(&mats));
        assert!(check_generic_exactness(&mats, n, 7).exact);
    }

    #[test]
    fn genex_scarf_resolution() {
        let (n, mats) = scarf_mats("x1^3, x1^2*x2, x1*x2^2*x3^2, x2^4, x2^3*x3, x3^3");
        assert_eq!(mats.len(), 3);
        assert!(check_complex(&mats));
        assert!(check_minimal(&mats));
        let report = check_generic_exactness(&mats, n, 42);
        assert!(report.exact, "{report:?}");
        assert_eq!(report.ranks, vec![1, 5, 5]);
    }

    #[test]
    fn corrupted_sign_is_caught() {
        let (n, mut mats) = scarf_mats("x1^3, x1^2*x2, x1*x2^2*x3^2, x2^4, x2^3*x3, x3^3");
        mats[1].entries[0].sign *= -1;
        assert!(!check_complex(&mats));
        assert!(!check_generic_exactness(&mats, n, 42).exact);
    }

    #[test]
    fn unit_entry_is_not_minimal() {
        let (_, mut mats) = scarf_mats("x1^2, x2^2");
        mats[1].entries[0].exponent = ExponentVector::zeros(2);
        assert!(!check_minimal(&mats));
    }

    #[test]
    fn triplet_serialization() {
        let (_, mats) = scarf_mats("x1^2");
        assert_eq!(
            serde_json::to_string(&mats[0]).unwrap(),
            r#"{"rows":1,"cols":1,"entries":[[0,0,1,[2]]]}"#
        );
    }
}
