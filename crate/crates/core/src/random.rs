//! Seeded generators for property tests and mutation experiments.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::LabeledComplex;
use crate::monomial::{ExponentVector, MonomialIdeal};

/// A random generic Artinian ideal in `n` variables with exponents at most
/// `max_exp` (at least 2) and at most `max_gens` generators (at least `n`).
///
/// Starts from pure powers `z_i^{d_i}` with `2 <= d_i <= max_exp` and adds
/// random mixed monomials below the pure-power box, keeping a candidate only
/// if the ideal stays generic and the candidate stays a minimal generator.
pub fn random_generic_ideal<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_exp: u32,
    max_gens: usize,
) -> MonomialIdeal {
    assert!(
        n >= 1 && max_exp >= 2 && max_gens >= n,
        "degenerate parameters"
    );
    let degrees: Vec<u32> = (0..n).map(|_| rng.gen_range(2..=max_exp)).collect();
    let mut gens: Vec<ExponentVector> = (0..n)
        .map(|i| ExponentVector::pure_power(n, i, degrees[i]))
        .collect();
    if n == 1 {
        return MonomialIdeal::minimalize(gens).expect("valid ideal");
    }
    let target = rng.gen_range(n..=max_gens);
    let mut attempts = 0;
    while gens.len() < target && attempts < 20 * max_gens {
        attempts += 1;
        let cand: Vec<u32> = degrees.iter().map(|&d| rng.gen_range(0..d)).collect();
        if cand.iter().filter(|&&e| e > 0).count() < 2 {
            continue;
        }
        let cand = ExponentVector::new(cand);
        let mut trial = gens.clone();
        trial.push(cand.clone());
        let ideal = MonomialIdeal::minimalize(trial).expect("valid ideal");
        if ideal.num_generators() == gens.len() + 1 && ideal.is_generic() {
            gens.push(cand);
        }
    }
    MonomialIdeal::minimalize(gens).expect("valid ideal")
}

/// Every incidence entry as `(dimension, cell, boundary position)`.
pub fn incidence_sites(x: &LabeledComplex) -> Vec<(usize, usize, usize)> {
    let mut sites = Vec::new();
    for (k, level) in x.cells.iter().enumerate().skip(1) {
        for (c, cell) in level.iter().enumerate() {
            for p in 0..cell.boundary.len() {
                sites.push((k, c, p));
            }
        }
    }
    sites
}

/// A copy of `x` with one incidence sign negated.
pub fn flip_sign(x: &LabeledComplex, site: (usize, usize, usize)) -> LabeledComplex {
    let mut y = x.clone();
    let (k, c, p) = site;
    y.cells[k][c].boundary[p].1 *= -1;
    y
}

/// `count` distinct single-sign mutations of `x`, chosen with `rng`.
pub fn sign_mutations<R: Rng + ?Sized>(
    rng: &mut R,
    x: &LabeledComplex,
    count: usize,
) -> Vec<((usize, usize, usize), LabeledComplex)> {
    incidence_sites(x)
        .choose_multiple(rng, count)
        .map(|&site| (site, flip_sign(x, site)))
        .collect()
}
