//! Staircase geometry on the unit-cell lattice.
//!
//! The staircase of an Artinian ideal `M` is the union of the unit cells
//! `(a, a+1]` over the standard monomials `z^a` not in `M`. A cell is named by
//! its lower lattice point `a`. Outer corners are the maximal points of the
//! staircase; `z^(alpha-1)` is then a maximal standard monomial.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::perm::Permutation;
use crate::scarf::{ScarfComplex, ScarfFace};

const DEFAULT_SCAN_LIMIT: u128 = 10_000_000;

/// Largest number of lattice cells a brute-force scan may visit.
///
/// Read from `SCARF_MAX_BOX`, default `10^7`.
pub fn scan_limit() -> u128 {
    std::env::var("SCARF_MAX_BOX")
        .ok()
        .and_then(|v| v.trim().parse::<u128>().ok())
        .unwrap_or(DEFAULT_SCAN_LIMIT)
}

pub(crate) fn check_scan(upper: &ExponentVector) -> Result<()> {
    let cells = upper
        .iter()
        .try_fold(1u128, |acc, &x| acc.checked_mul(u128::from(x)))
        .unwrap_or(u128::MAX);
    let limit = scan_limit();
    if cells > limit {
        return Err(Error::ScanLimit { cells, limit });
    }
    Ok(())
}

/// All lattice points `a` with `0 <= a < upper`, in lexicographic order.
pub(crate) fn lattice_points(upper: &ExponentVector) -> impl Iterator<Item = ExponentVector> {
    let upper = upper.as_slice().to_vec();
    let empty = upper.contains(&0);
    let mut next = if empty {
        None
    } else {
        Some(vec![0u32; upper.len()])
    };
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        for i in (0..succ.len()).rev() {
            succ[i] += 1;
            if succ[i] < upper[i] {
                next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(ExponentVector::new(current))
    })
}

/// A set of unit cells, each named by its lower corner.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CellSet(BTreeSet<ExponentVector>);

impl CellSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, cell: ExponentVector) -> bool {
        self.0.insert(cell)
    }

    pub fn contains(&self, cell: &ExponentVector) -> bool {
        self.0.contains(cell)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ExponentVector> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn volume(&self) -> u64 {
        self.0.len() as u64
    }

    /// The cuboid this set fills exactly, if it is one.
    pub fn as_cuboid(&self) -> Option<Cuboid> {
        let first = self.0.iter().next()?;
        let n = first.dim();
        let mut lo: Vec<u32> = first.as_slice().to_vec();
        let mut hi: Vec<u32> = lo.iter().map(|x| x + 1).collect();
        for c in &self.0 {
            for i in 0..n {
                lo[i] = lo[i].min(c[i]);
                hi[i] = hi[i].max(c[i] + 1);
            }
        }
        let cuboid = Cuboid::new(lo.into_iter().zip(hi).collect()).ok()?;
        (cuboid.volume() == self.volume()).then_some(cuboid)
    }
}

impl FromIterator<ExponentVector> for CellSet {
    fn from_iter<I: IntoIterator<Item = ExponentVector>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// A product of half-open integer intervals `(lo, hi]`, one per coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cuboid {
    intervals: Vec<(u32, u32)>,
}

impl Cuboid {
    pub fn new(intervals: Vec<(u32, u32)>) -> Result<Self> {
        if let Some(&(lo, hi)) = intervals.iter().find(|(lo, hi)| lo >= hi) {
            return Err(Error::InvalidComplex(format!(
                "degenerate cuboid interval ({lo},{hi}]"
            )));
        }
        Ok(Self { intervals })
    }

    pub fn intervals(&self) -> &[(u32, u32)] {
        &self.intervals
    }

    pub fn side_lengths(&self) -> Vec<u64> {
        self.intervals
            .iter()
            .map(|&(lo, hi)| u64::from(hi - lo))
            .collect()
    }

    pub fn volume(&self) -> u64 {
        self.side_lengths().iter().product()
    }

    pub fn cells(&self) -> CellSet {
        let lo = ExponentVector::new(self.intervals.iter().map(|i| i.0).collect());
        let extent = ExponentVector::new(self.intervals.iter().map(|i| i.1 - i.0).collect());
        lattice_points(&extent)
            .map(|p| p.add(&lo).expect("same dimension"))
            .collect()
    }
}

impl fmt::Display for Cuboid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (lo, hi)) in self.intervals.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "]{lo},{hi}]")?;
        }
        Ok(())
    }
}

/// Outer corners of the staircase, sorted ascending.
///
/// Computed by splitting irreducible components: starting from
/// `m^d = (z_1^{d_1}, ..., z_n^{d_n})` (the pure powers), adding a generator
/// `z^g` replaces each component `m^alpha` with `g < alpha` strictly by the
/// components `m^{alpha with alpha_i := g_i}` for `i` in the support of `g`.
/// Non-maximal components are dropped at the end.
pub fn outer_corners(ideal: &MonomialIdeal) -> Result<Vec<ExponentVector>> {
    ideal.require_artinian()?;
    let n = ideal.dim();
    let start: Vec<u32> = (0..n)
        .map(|i| ideal.pure_power_degree(i).expect("artinian"))
        .collect();
    let mut components: BTreeSet<ExponentVector> = BTreeSet::from([ExponentVector::new(start)]);
    for g in ideal.generators() {
        if g.pure_power_variable().is_some() {
            continue;
        }
        let mut next = BTreeSet::new();
        for alpha in components {
            if g.iter().zip(alpha.iter()).all(|(gi, ai)| gi < ai) {
                for i in (0..n).filter(|&i| g[i] > 0) {
                    let mut split = alpha.as_slice().to_vec();
                    split[i] = g[i];
                    next.insert(ExponentVector::new(split));
                }
            } else {
                next.insert(alpha);
            }
        }
        components = next;
    }
    let all: Vec<ExponentVector> = components.into_iter().collect();
    Ok(all
        .iter()
        .filter(|a| !all.iter().any(|b| b != *a && a.divides_unchecked(b)))
        .cloned()
        .collect())
}

/// Number of standard monomials, `dim_C A/M`.
///
/// Sums the colengths of the slices `x_n = k` for `k` below the pure power
/// degree in the last variable.
pub fn colength(ideal: &MonomialIdeal) -> Result<u64> {
    ideal.require_artinian()?;
    let gens: Vec<Vec<u32>> = ideal
        .generators()
        .iter()
        .map(|g| g.as_slice().to_vec())
        .collect();
    Ok(slice_colength(&gens, ideal.dim()))
}

fn slice_colength(gens: &[Vec<u32>], n: usize) -> u64 {
    if n == 1 {
        return gens.iter().map(|g| u64::from(g[0])).min().unwrap_or(0);
    }
    let last = n - 1;
    let top = gens
        .iter()
        .filter(|g| g[..last].iter().all(|&x| x == 0))
        .map(|g| g[last])
        .min()
        .expect("artinian");
    (0..top)
        .map(|k| {
            let slice: Vec<Vec<u32>> = gens
                .iter()
                .filter(|g| g[last] <= k)
                .map(|g| g[..last].to_vec())
                .collect();
            slice_colength(&slice, last)
        })
        .sum()
}

/// Sorts corners descending in the lexicographic order induced by `sigma`:
/// coordinate `sigma(1)` is compared first.
pub fn lex_order(corners: &[ExponentVector], sigma: &Permutation) -> Vec<ExponentVector> {
    let mut sorted = corners.to_vec();
    sorted.sort_by(|a, b| {
        let ka = sigma.images().iter().map(|&i| a[i]);
        let kb = sigma.images().iter().map(|&i| b[i]);
        kb.cmp(ka)
    });
    sorted
}

/// Staircase of an Artinian ideal with its corner data.
#[derive(Clone, Debug)]
pub struct Staircase {
    ideal: MonomialIdeal,
    outer_corners: Vec<ExponentVector>,
    bounding_box: ExponentVector,
}

impl Staircase {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        let outer_corners = outer_corners(ideal)?;
        Ok(Self {
            ideal: ideal.clone(),
            outer_corners,
            bounding_box: ideal.bounding_box(),
        })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    /// The minimal generators.
    pub fn inner_corners(&self) -> &[ExponentVector] {
        self.ideal.generators()
    }

    pub fn outer_corners(&self) -> &[ExponentVector] {
        &self.outer_corners
    }

    pub fn bounding_box(&self) -> &ExponentVector {
        &self.bounding_box
    }

    /// All cells of the staircase.
    pub fn cells(&self) -> Result<CellSet> {
        check_scan(&self.bounding_box)?;
        Ok(lattice_points(&self.bounding_box)
            .filter(|a| !self.ideal.contains_unchecked(a))
            .collect())
    }

    pub fn colength(&self) -> Result<u64> {
        colength(&self.ideal)
    }

    pub fn partition(&self, sigma: &Permutation) -> Result<Partition> {
        if sigma.len() != self.ideal.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ideal.dim(),
                found: sigma.len(),
            });
        }
        let order = lex_order(&self.outer_corners, sigma);
        let mut parts: Vec<PartitionPart> = order
            .into_iter()
            .map(|corner| PartitionPart {
                corner,
                cells: CellSet::new(),
            })
            .collect();
        for cell in self.cells()?.iter() {
            let upper = cell.plus_ones();
            let part = parts
                .iter_mut()
                .find(|p| upper.divides_unchecked(&p.corner))
                .expect("every standard cell lies under some outer corner");
            part.cells.insert(cell.clone());
        }
        Ok(Partition {
            sigma: sigma.clone(),
            parts,
        })
    }
}

/// One piece `S_{sigma,alpha}` of a partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionPart {
    pub corner: ExponentVector,
    pub cells: CellSet,
}

impl PartitionPart {
    pub fn volume(&self) -> u64 {
        self.cells.volume()
    }
}

/// The lexicographic partition of a staircase, pieces in `>=_sigma` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub sigma: Permutation,
    pub parts: Vec<PartitionPart>,
}

impl Partition {
    pub fn part(&self, corner: &ExponentVector) -> Option<&PartitionPart> {
        self.parts.iter().find(|p| &p.corner == corner)
    }

    pub fn volume_of(&self, corner: &ExponentVector) -> Option<u64> {
        self.part(corner).map(PartitionPart::volume)
    }

    pub fn total_volume(&self) -> u64 {
        self.parts.iter().map(PartitionPart::volume).sum()
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Part<'a> {
            corner: &'a ExponentVector,
            cells: &'a CellSet,
            volume: u64,
        }
        #[derive(Serialize)]
        struct Repr<'a> {
            sigma: &'a Permutation,
            parts: Vec<Part<'a>>,
        }
        Repr {
            sigma: &self.sigma,
            parts: self
                .parts
                .iter()
                .map(|p| Part {
                    corner: &p.corner,
                    cells: &p.cells,
                    volume: p.volume(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

/// Greedy assignment of every staircase cell to the first outer corner (in
/// `>=_sigma` order) whose box contains it.
pub fn partition_bruteforce(ideal: &MonomialIdeal, sigma: &Permutation) -> Result<Partition> {
    Staircase::new(ideal)?.partition(sigma)
}

/// The piece `S_{sigma,alpha}` of a generic ideal for the top face labeled
/// `alpha`, as a cuboid.
///
/// With `tau = eta ∘ sigma`, the `l`-th added vertex is the
/// `x_{sigma(l)}`-vertex, and coordinate `sigma(l)` ranges over
/// `((a^{tau(1)} ∨ ... ∨ a^{tau(l-1)})_{sigma(l)}, (a^{tau(1)} ∨ ... ∨ a^{tau(l)})_{sigma(l)}]`.
pub fn partition_cuboid(
    scarf: &ScarfComplex,
    sigma: &Permutation,
    face: &ScarfFace,
) -> Result<Cuboid> {
    let ideal = scarf.ideal();
    ideal.require_generic()?;
    let n = ideal.dim();
    if sigma.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: sigma.len(),
        });
    }
    let (eta, _) = scarf.eta(face)?;
    let tau = eta.compose(sigma);
    let gens = ideal.generators();
    let mut intervals = vec![(0u32, 0u32); n];
    let mut acc = ExponentVector::zeros(n);
    for l in 0..n {
        let coord = sigma.apply(l);
        let vertex = face.vertices()[tau.apply(l)];
        let next = acc.join_unchecked(&gens[vertex]);
        intervals[coord] = (acc[coord], next[coord]);
        acc = next;
    }
    Cuboid::new(intervals)
}
