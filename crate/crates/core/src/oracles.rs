//! Brute-force reference implementations for testing.
//!
//! These deliberately share no logic with the production modules beyond the
//! monomial types: subsets are enumerated exhaustively and the staircase is
//! found by scanning the bounding box.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::perm::Permutation;

/// Largest generator count [`oracle_scarf`] accepts.
pub const MAX_ORACLE_GENERATORS: usize = 20;

/// Largest box [`box_points`] will enumerate.
const MAX_BOX: u64 = 50_000_000;

fn in_ideal(gens: &[ExponentVector], a: &[u32]) -> bool {
    gens.iter().any(|g| g.iter().zip(a).all(|(x, y)| x <= y))
}

fn box_points(upper: &[u32]) -> Result<Vec<Vec<u32>>> {
    let size: u64 = upper.iter().map(|&u| u64::from(u)).product();
    if size > MAX_BOX {
        return Err(Error::ScanLimit {
            cells: u128::from(size),
            limit: u128::from(MAX_BOX),
        });
    }
    let mut out = vec![Vec::new()];
    for &u in upper {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..u).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    Ok(out)
}

/// Per variable, the degree of its pure power generator.
fn pure_degrees(m: &MonomialIdeal) -> Result<Vec<u32>> {
    (0..m.dim())
        .map(|i| {
            m.generators()
                .iter()
                .filter(|g| g.iter().enumerate().all(|(j, &e)| (j == i) == (e > 0)))
                .map(|g| g[i])
                .min()
                .ok_or(Error::NotArtinian(i + 1))
        })
        .collect()
}

/// Standard monomials: the lattice points of the pure-power box outside `M`.
fn standard(m: &MonomialIdeal) -> Result<Vec<Vec<u32>>> {
    let upper = pure_degrees(m)?;
    Ok(box_points(&upper)?
        .into_iter()
        .filter(|a| !in_ideal(m.generators(), a))
        .collect())
}

/// All subsets with a uniquely attained lcm, as sorted index lists, found by
/// grouping every nonempty subset by its lcm.
pub fn oracle_scarf(m: &MonomialIdeal) -> Result<BTreeSet<Vec<usize>>> {
    let gens = m.generators();
    let r = gens.len();
    if r > MAX_ORACLE_GENERATORS {
        return Err(Error::TooManyGenerators {
            found: r,
            max: MAX_ORACLE_GENERATORS,
        });
    }
    let mut groups: BTreeMap<Vec<u32>, Vec<Vec<usize>>> = BTreeMap::new();
    for mask in 1u32..(1 << r) {
        let subset: Vec<usize> = (0..r).filter(|&i| mask & (1 << i) != 0).collect();
        let mut lcm = vec![0u32; m.dim()];
        for &i in &subset {
            for (l, &e) in lcm.iter_mut().zip(gens[i].iter()) {
                *l = (*l).max(e);
            }
        }
        groups.entry(lcm).or_default().push(subset);
    }
    Ok(groups
        .into_values()
        .filter(|g| g.len() == 1)
        .map(|mut g| g.remove(0))
        .collect())
}

/// `α` such that `z^{α-1}` is standard and every `z^{α-1+e_i}` lies in `M`.
pub fn oracle_outer_corners(m: &MonomialIdeal) -> Result<BTreeSet<ExponentVector>> {
    let gens = m.generators();
    Ok(standard(m)?
        .into_iter()
        .filter(|a| {
            (0..a.len()).all(|i| {
                let mut b = a.clone();
                b[i] += 1;
                in_ideal(gens, &b)
            })
        })
        .map(|a| ExponentVector::new(a.into_iter().map(|x| x + 1).collect()))
        .collect())
}

/// Number of standard monomials.
pub fn oracle_colength(m: &MonomialIdeal) -> Result<u64> {
    Ok(standard(m)?.len() as u64)
}

/// Maps each outer corner to its cells: a standard cell `a` belongs to the
/// `>=_σ`-largest corner `α` with `a < α` componentwise.
pub fn oracle_partition(
    m: &MonomialIdeal,
    sigma: &Permutation,
) -> Result<BTreeMap<ExponentVector, BTreeSet<ExponentVector>>> {
    let corners = oracle_outer_corners(m)?;
    let key = |a: &ExponentVector| -> Vec<u32> { sigma.images().iter().map(|&i| a[i]).collect() };
    let mut out: BTreeMap<ExponentVector, BTreeSet<ExponentVector>> = corners
        .iter()
        .map(|c| (c.clone(), BTreeSet::new()))
        .collect();
    for a in standard(m)? {
        let owner = corners
            .iter()
            .filter(|c| c.iter().zip(&a).all(|(ci, ai)| ai < ci))
            .max_by_key(|c| key(c))
            .expect("every standard monomial lies below an outer corner");
        out.get_mut(owner)
            .expect("owner is a corner")
            .insert(ExponentVector::new(a));
    }
    Ok(out)
}
