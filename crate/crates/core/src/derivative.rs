//! The form `d_σφ`: the product of the differentials differentiated
//! entrywise by `z_{σ(1)}, ..., z_{σ(n)}`, its comparison with the signed
//! partition volumes, and the fundamental-class pairing.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::complex::{scarf_to_complex, LabeledComplex};
use crate::error::{Error, Result};
use crate::matrix::{differentials, SparseMonoMatrix};
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::perm::Permutation;
use crate::poly::{BigCoeff, Polynomial};
use crate::scarf::{build_scarf, ScarfComplex};
use crate::staircase::{partition_cuboid, Staircase};

pub type IntPolynomial = Polynomial<BigInt>;

/// A sparse matrix of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: BTreeMap<(usize, usize), IntPolynomial>,
}

/// `(-1)^(n(n-1)/2)`, the sign of the order reversal `(n, ..., 1)`.
pub fn reversal_sign(n: usize) -> i64 {
    if (n * n.saturating_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Entrywise `∂/∂z_j` of a monomial matrix: `±z^γ ↦ ±γ_j z^{γ-e_j}`.
pub fn derivative_matrix(m: &SparseMonoMatrix, j: usize) -> PolyMatrix {
    let entries = m
        .entries
        .iter()
        .filter_map(|e| {
            let p = Polynomial::monomial(BigInt::from(e.sign), e.exponent.clone()).derivative(j);
            (!p.is_zero()).then_some(((e.row, e.col), p))
        })
        .collect();
    PolyMatrix {
        rows: m.rows,
        cols: m.cols,
        entries,
    }
}

/// `d_σφ` as a row vector over the top cells.
///
/// `coeffs[t]` is the coefficient of `dz_{σ(1)} ∧ ... ∧ dz_{σ(n)} e*_t`;
/// rewriting the wedge in the basis `dz = dz_n ∧ ... ∧ dz_1` multiplies by
/// `orientation_sign = sgn(σ)·(-1)^(n(n-1)/2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivativeForm {
    pub sigma: Permutation,
    pub coeffs: Vec<IntPolynomial>,
    pub orientation_sign: i64,
}

impl DerivativeForm {
    /// Coefficient of `dz e*_t`.
    pub fn relative_to_dz(&self, t: usize) -> IntPolynomial {
        self.coeffs[t].scale(&BigInt::from(self.orientation_sign))
    }
}

/// Multiplies `(∂φ_1/∂z_{σ(1)}) ⋯ (∂φ_n/∂z_{σ(n)})` left to right,
/// starting from the `1 × 1` identity.
pub fn d_sigma_phi(mats: &[SparseMonoMatrix], sigma: &Permutation) -> Result<DerivativeForm> {
    let n = sigma.len();
    if mats.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: mats.len(),
        });
    }
    let mut row: Vec<IntPolynomial> = vec![Polynomial::monomial(
        BigInt::one(),
        ExponentVector::zeros(n),
    )];
    for (k, m) in mats.iter().enumerate() {
        if m.rows != row.len() {
            return Err(Error::InvalidComplex(format!(
                "differential {} has {} rows, expected {}",
                k + 1,
                m.rows,
                row.len()
            )));
        }
        let d = derivative_matrix(m, sigma.apply(k));
        let mut next = vec![Polynomial::zero(n); m.cols];
        for (&(r, c), p) in &d.entries {
            if row[r].is_zero() {
                continue;
            }
            next[c] = next[c].add(&row[r].mul(p)?)?;
        }
        row = next;
    }
    Ok(DerivativeForm {
        sigma: sigma.clone(),
        coeffs: row,
        orientation_sign: sigma.sign() * reversal_sign(n),
    })
}

/// Predicted coefficients relative to `dz` for a generic ideal:
/// `sgn(η)·Vol(S_{σ,α})·z^{α-1}` for each top face `α` of the Scarf complex.
pub fn theorem_main_predicted(
    scarf: &ScarfComplex,
    sigma: &Permutation,
) -> Result<Vec<IntPolynomial>> {
    scarf.ideal().require_generic()?;
    scarf
        .top_faces()
        .iter()
        .map(|face| {
            let (_, sign) = scarf.eta(face)?;
            let vol = partition_cuboid(scarf, sigma, face)?.volume();
            Ok(point_mass(
                face.label(),
                BigInt::from(sign) * BigInt::from(vol),
            ))
        })
        .collect()
}

fn point_mass(alpha: &ExponentVector, coeff: BigInt) -> IntPolynomial {
    match alpha.minus_ones() {
        Some(e) => Polynomial::monomial(coeff, e),
        None => Polynomial::zero(alpha.dim()),
    }
}

/// Coefficient of `z^{α-1}` after dropping terms annihilated by the residue
/// factor (`b_i >= α_i` for some `i`); the other surviving terms are
/// returned as residual.
pub fn point_mass_coefficient(
    p: &IntPolynomial,
    alpha: &ExponentVector,
) -> (BigInt, Vec<(ExponentVector, BigInt)>) {
    let target = alpha.minus_ones();
    let mut coeff = BigInt::zero();
    let mut residual = Vec::new();
    for (b, c) in p.terms() {
        if b.iter().zip(alpha.iter()).any(|(bi, ai)| bi >= ai) {
            continue;
        }
        if Some(b) == target.as_ref() {
            coeff = c.clone();
        } else {
            residual.push((b.clone(), c.clone()));
        }
    }
    (coeff, residual)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingResult {
    pub multiplicity: BigInt,
    /// Per top cell: `sgn(cell)·coefficient of z^{α-1}`.
    pub contributions: Vec<BigInt>,
    /// Per top cell: surviving terms other than `z^{α-1}`.
    pub residual: Vec<Vec<(ExponentVector, BigInt)>>,
}

/// `Σ_α sgn(α)·[z^{α-1}] (d_σφ)_α`, with coefficients taken relative to `dz`.
pub fn pairing_multiplicity(
    form: &DerivativeForm,
    x: &LabeledComplex,
    signs: &[i64],
) -> Result<PairingResult> {
    let top = x.top_cells();
    if form.coeffs.len() != top.len() || signs.len() != top.len() {
        return Err(Error::LengthMismatch {
            expected: top.len(),
            found: form.coeffs.len().min(signs.len()),
        });
    }
    let mut multiplicity = BigInt::zero();
    let mut contributions = Vec::with_capacity(top.len());
    let mut residual = Vec::with_capacity(top.len());
    for (t, cell) in top.iter().enumerate() {
        let (c, res) = point_mass_coefficient(&form.relative_to_dz(t), &cell.label);
        let contribution = c * BigInt::from(signs[t]);
        multiplicity += &contribution;
        contributions.push(contribution);
        residual.push(res);
    }
    Ok(PairingResult {
        multiplicity,
        contributions,
        residual,
    })
}

/// A cellular resolution of an Artinian ideal together with its
/// differentials and top-cell orientation signs.
#[derive(Clone, Debug)]
pub struct Resolution {
    complex: LabeledComplex,
    mats: Vec<SparseMonoMatrix>,
    ideal: MonomialIdeal,
    staircase: Staircase,
    signs: Vec<i64>,
    scarf: Option<ScarfComplex>,
}

impl Resolution {
    /// The Scarf resolution of a generic Artinian ideal.
    pub fn scarf(ideal: &MonomialIdeal) -> Result<Self> {
        ideal.require_artinian()?;
        ideal.require_generic()?;
        let scarf = build_scarf(ideal)?;
        let complex = scarf_to_complex(&scarf);
        let signs = scarf
            .top_faces()
            .iter()
            .map(|f| scarf.eta(f).map(|(_, s)| s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            mats: differentials(&complex)?,
            staircase: Staircase::new(ideal)?,
            ideal: ideal.clone(),
            complex,
            signs,
            scarf: Some(scarf),
        })
    }

    /// A user-supplied complex; its vertex labels must generate an Artinian
    /// ideal and its dimension must be `n - 1`.
    pub fn from_complex(complex: LabeledComplex) -> Result<Self> {
        complex.validate()?;
        let ideal = complex.ideal()?;
        ideal.require_artinian()?;
        if complex.dim() + 1 != complex.n {
            return Err(Error::LengthMismatch {
                expected: complex.n,
                found: complex.dim() + 1,
            });
        }
        let signs = complex.top_cell_signs()?;
        Ok(Self {
            mats: differentials(&complex)?,
            staircase: Staircase::new(&ideal)?,
            ideal,
            complex,
            signs,
            scarf: None,
        })
    }

    pub fn complex(&self) -> &LabeledComplex {
        &self.complex
    }

    pub fn differentials(&self) -> &[SparseMonoMatrix] {
        &self.mats
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn staircase(&self) -> &Staircase {
        &self.staircase
    }

    pub fn signs(&self) -> &[i64] {
        &self.signs
    }

    pub fn scarf_complex(&self) -> Option<&ScarfComplex> {
        self.scarf.as_ref()
    }

    pub fn n(&self) -> usize {
        self.ideal.dim()
    }

    pub fn d_sigma_phi(&self, sigma: &Permutation) -> Result<DerivativeForm> {
        if sigma.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: sigma.len(),
            });
        }
        d_sigma_phi(&self.mats, sigma)
    }

    /// Predicted coefficients relative to `dz`. For a Scarf resolution these
    /// come from the cuboid formula; otherwise each top cell labeled by an
    /// outer corner `α` is predicted `sgn·Vol(S_{σ,α})·z^{α-1}` using the
    /// greedy partition, and every other top cell is predicted zero.
    pub fn predicted(&self, sigma: &Permutation) -> Result<(Vec<IntPolynomial>, Vec<u64>)> {
        if let Some(scarf) = &self.scarf {
            let volumes = scarf
                .top_faces()
                .iter()
                .map(|f| partition_cuboid(scarf, sigma, f).map(|c| c.volume()))
                .collect::<Result<Vec<_>>>()?;
            return Ok((theorem_main_predicted(scarf, sigma)?, volumes));
        }
        let partition = self.staircase.partition(sigma)?;
        let mut polys = Vec::new();
        let mut volumes = Vec::new();
        for (cell, &s) in self.complex.top_cells().iter().zip(&self.signs) {
            let vol = partition.volume_of(&cell.label).unwrap_or(0);
            polys.push(point_mass(&cell.label, BigInt::from(s) * BigInt::from(vol)));
            volumes.push(vol);
        }
        Ok((polys, volumes))
    }

    pub fn verify(&self, sigma: &Permutation) -> Result<SigmaReport> {
        let form = self.d_sigma_phi(sigma)?;
        let (predicted, volumes) = self.predicted(sigma)?;
        let pairing = pairing_multiplicity(&form, &self.complex, &self.signs)?;
        let colength = self.staircase.colength()?;
        let mut faces = Vec::new();
        for (t, cell) in self.complex.top_cells().iter().enumerate() {
            let computed = form.relative_to_dz(t);
            let (coefficient, _) = point_mass_coefficient(&computed, &cell.label);
            faces.push(FaceReport {
                cell: t,
                label: cell.label.clone(),
                sign: self.signs[t],
                matches: computed == predicted[t],
                computed,
                predicted: predicted[t].clone(),
                coefficient,
                volume: volumes[t],
                contribution: pairing.contributions[t].clone(),
                residual: pairing.residual[t].clone(),
            });
        }
        Ok(SigmaReport {
            sigma: sigma.clone(),
            orientation_sign: form.orientation_sign,
            theorem_holds: faces.iter().all(|f| f.matches),
            pairing_matches: pairing.multiplicity == BigInt::from(colength),
            residual_empty: faces.iter().all(|f| f.residual.is_empty()),
            pairing: pairing.multiplicity,
            colength,
            faces,
        })
    }

    /// Reports for every `σ` plus the factorization check
    /// `Σ_σ pairing = n!·colength`.
    pub fn verify_all(&self) -> Result<FullReport> {
        let reports = Permutation::all(self.n())
            .map(|s| self.verify(&s))
            .collect::<Result<Vec<_>>>()?;
        Ok(FullReport::from_sigmas(reports, self.scarf.is_some()))
    }

    /// The `F_τ` terms of the chain sum for one top face of a Scarf
    /// resolution; see [`kivas_survivor_check`].
    pub fn survivor_check(&self, sigma: &Permutation, face: usize) -> Result<SurvivorReport> {
        let scarf = self.scarf.as_ref().ok_or_else(|| {
            Error::InvalidComplex("survivor check needs a Scarf resolution".into())
        })?;
        kivas_survivor_check(scarf, &self.complex, &self.mats, sigma, face)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceReport {
    pub cell: usize,
    pub label: ExponentVector,
    pub sign: i64,
    pub computed: IntPolynomial,
    pub predicted: IntPolynomial,
    #[serde(rename = "match")]
    pub matches: bool,
    #[serde(serialize_with = "ser_big")]
    pub coefficient: BigInt,
    pub volume: u64,
    #[serde(serialize_with = "ser_big")]
    pub contribution: BigInt,
    #[serde(serialize_with = "ser_residual")]
    pub residual: Vec<(ExponentVector, BigInt)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaReport {
    pub sigma: Permutation,
    pub orientation_sign: i64,
    pub faces: Vec<FaceReport>,
    pub theorem_holds: bool,
    #[serde(serialize_with = "ser_big")]
    pub pairing: BigInt,
    pub colength: u64,
    pub pairing_matches: bool,
    pub residual_empty: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FullReport {
    pub scarf: bool,
    pub sigmas: Vec<SigmaReport>,
    pub factorization: FactorizationReport,
}

impl FullReport {
    pub fn from_sigmas(sigmas: Vec<SigmaReport>, scarf: bool) -> Self {
        let factorization = FactorizationReport::from_reports(&sigmas);
        Self {
            scarf,
            sigmas,
            factorization,
        }
    }

    pub fn theorem_holds(&self) -> bool {
        self.sigmas.iter().all(|r| r.theorem_holds)
    }

    pub fn pairings_match(&self) -> bool {
        self.sigmas.iter().all(|r| r.pairing_matches)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationReport {
    pub permutations: usize,
    #[serde(serialize_with = "ser_big")]
    pub pairing_sum: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub expected: BigInt,
    pub holds: bool,
}

impl FactorizationReport {
    fn from_reports(reports: &[SigmaReport]) -> Self {
        let pairing_sum: BigInt = reports.iter().map(|r| &r.pairing).sum();
        let colength = reports.first().map_or(0, |r| r.colength);
        let expected = BigInt::from(reports.len()) * BigInt::from(colength);
        Self {
            permutations: reports.len(),
            holds: pairing_sum == expected,
            pairing_sum,
            expected,
        }
    }
}

/// `Σ_σ pairing = n!·colength` for the Scarf resolution of a generic ideal.
pub fn full_factorization_check(ideal: &MonomialIdeal) -> Result<FactorizationReport> {
    Ok(Resolution::scarf(ideal)?.verify_all()?.factorization)
}

/// Compares `d_σφ` with the prediction for every top face of the Scarf
/// resolution of a generic ideal.
pub fn verify_theorem_main(ideal: &MonomialIdeal, sigma: &Permutation) -> Result<SigmaReport> {
    Resolution::scarf(ideal)?.verify(sigma)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurvivorTerm {
    pub tau: Permutation,
    pub term: IntPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurvivorReport {
    pub sigma: Permutation,
    pub face: usize,
    pub expected_tau: Permutation,
    /// The `τ` with `F_τ ≠ 0`.
    pub survivors: Vec<SurvivorTerm>,
    /// The face's `d_σφ` entry relative to `dz`.
    pub entry: IntPolynomial,
    pub unique: bool,
    pub equals_entry: bool,
}

/// For a top face `{i_1 < ... < i_n}` and each `τ`, the chain
/// `I'_k = {i_{τ(1)}, ..., i_{τ(k)}}` contributes
/// `F_τ = Π_k ∂_{σ(k)} (φ_k)_{I'_{k-1}, I'_k}` (relative to `dz`). Only
/// `τ = η∘σ` should survive, and its term should be the whole entry.
pub fn kivas_survivor_check(
    scarf: &ScarfComplex,
    complex: &LabeledComplex,
    mats: &[SparseMonoMatrix],
    sigma: &Permutation,
    face: usize,
) -> Result<SurvivorReport> {
    let n = scarf.dim();
    let top = scarf
        .top_faces()
        .get(face)
        .ok_or_else(|| Error::InvalidComplex(format!("no top face with index {face}")))?;
    let index: Vec<HashMap<&[usize], usize>> = complex
        .cells
        .iter()
        .map(|level| {
            level
                .iter()
                .enumerate()
                .map(|(i, c)| (c.verts.as_slice(), i))
                .collect()
        })
        .collect();
    let orientation = BigInt::from(sigma.sign() * reversal_sign(n));
    let form = d_sigma_phi(mats, sigma)?;
    let (eta, _) = scarf.eta(top)?;
    let expected_tau = eta.compose(sigma);

    let mut survivors = Vec::new();
    for tau in Permutation::all(n) {
        let mut term = Polynomial::monomial(orientation.clone(), ExponentVector::zeros(n));
        let mut prev_row = 0;
        let mut chain: Vec<usize> = Vec::with_capacity(n);
        for k in 0..n {
            chain.push(top.vertices()[tau.apply(k)]);
            let mut key = chain.clone();
            key.sort_unstable();
            let col = index[k][key.as_slice()];
            let entry = mats[k]
                .entry(prev_row, col)
                .ok_or_else(|| Error::InvalidComplex("missing chain entry".into()))?;
            let d = Polynomial::monomial(BigInt::from(entry.sign), entry.exponent.clone())
                .derivative(sigma.apply(k));
            term = term.mul(&d)?;
            prev_row = col;
        }
        if !term.is_zero() {
            survivors.push(SurvivorTerm { tau, term });
        }
    }
    let entry = form.relative_to_dz(face);
    Ok(SurvivorReport {
        sigma: sigma.clone(),
        face,
        unique: survivors.len() == 1 && survivors[0].tau == expected_tau,
        equals_entry: survivors.len() == 1 && survivors[0].term == entry,
        expected_tau,
        survivors,
        entry,
    })
}

fn ser_big<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    BigCoeff(v).serialize(s)
}

fn ser_residual<S: serde::Serializer>(
    v: &[(ExponentVector, BigInt)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let terms: Vec<(&ExponentVector, BigCoeff<'_>)> =
        v.iter().map(|(e, c)| (e, BigCoeff(c))).collect();
    terms.serialize(s)
}
