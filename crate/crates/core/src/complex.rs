//! Labeled polyhedral cell complexes with incidence signs.
//!
//! The JSON schema is
//! `{"n": 3, "cells": [[{"verts": [...], "label": [...], "boundary": [[idx, sign], ...]}], ...]}`
//! with one list per cell dimension `0..=d`. Vertices (dimension 0) have an
//! empty boundary; `verts` of higher cells index into the vertex list.
//! Optional fields: `comment` and `top_signs`, the orientation sign of each
//! top-dimensional cell.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::scarf::ScarfComplex;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub verts: Vec<usize>,
    pub label: ExponentVector,
    #[serde(default)]
    pub boundary: Vec<(usize, i8)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledComplex {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top_signs: Option<Vec<i8>>,
    pub cells: Vec<Vec<Cell>>,
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidComplex(msg.into()))
}

impl LabeledComplex {
    pub fn from_json(text: &str) -> Result<Self> {
        let c: LabeledComplex = serde_json::from_str(text)?;
        c.validate()?;
        Ok(c)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("complex serializes")
    }

    /// Dimension of the complex (top cell dimension).
    pub fn dim(&self) -> usize {
        self.cells.len().saturating_sub(1)
    }

    pub fn vertices(&self) -> &[Cell] {
        self.cells.first().map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn top_cells(&self) -> &[Cell] {
        self.cells.last().map(Vec::as_slice).unwrap_or(&[])
    }

    /// Ranks of `E_0, E_1, ..., E_{d+1}`.
    pub fn ranks(&self) -> Vec<usize> {
        std::iter::once(1)
            .chain(self.cells.iter().map(Vec::len))
            .collect()
    }

    /// The ideal generated by the vertex labels.
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::minimalize(self.vertices().iter().map(|c| c.label.clone()))
    }

    /// Checks structure, labels and `∂∂ = 0` at the incidence level
    /// (including the augmentation for edges).
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::ZeroDimension);
        }
        if self.vertices().is_empty() {
            return invalid("complex has no vertices");
        }
        let vertices = self.vertices();
        for (k, level) in self.cells.iter().enumerate() {
            if level.is_empty() {
                return invalid(format!("no cells in dimension {k}"));
            }
            for (idx, cell) in level.iter().enumerate() {
                if cell.label.dim() != self.n {
                    return Err(Error::DimensionMismatch {
                        expected: self.n,
                        found: cell.label.dim(),
                    });
                }
                if k == 0 {
                    if cell.verts != [idx] || !cell.boundary.is_empty() {
                        return invalid(format!("vertex {idx} must list only itself"));
                    }
                    continue;
                }
                if cell.verts.len() < k + 1
                    || cell.verts.windows(2).any(|w| w[0] >= w[1])
                    || cell.verts.iter().any(|&v| v >= vertices.len())
                {
                    return invalid(format!("cell {idx} in dimension {k}: bad vertex list"));
                }
                let join = cell
                    .verts
                    .iter()
                    .fold(ExponentVector::zeros(self.n), |acc, &v| {
                        acc.join_unchecked(&vertices[v].label)
                    });
                if join != cell.label {
                    return invalid(format!(
                        "cell {idx} in dimension {k}: label {} is not the join {join} of its vertices",
                        cell.label
                    ));
                }
                if cell.boundary.is_empty() {
                    return invalid(format!("cell {idx} in dimension {k} has empty boundary"));
                }
                let below = &self.cells[k - 1];
                let mut seen = Vec::new();
                for &(b, s) in &cell.boundary {
                    if b >= below.len() || (s != 1 && s != -1) || seen.contains(&b) {
                        return invalid(format!(
                            "cell {idx} in dimension {k}: bad boundary entry [{b}, {s}]"
                        ));
                    }
                    seen.push(b);
                    if !below[b].verts.iter().all(|v| cell.verts.contains(v)) {
                        return invalid(format!(
                            "cell {idx} in dimension {k}: boundary cell {b} is not a face"
                        ));
                    }
                    if !below[b].label.divides_unchecked(&cell.label) {
                        return invalid(format!(
                            "cell {idx} in dimension {k}: face label does not divide"
                        ));
                    }
                }
                let mut dd: BTreeMap<usize, i64> = BTreeMap::new();
                for &(b, s) in &cell.boundary {
                    if k == 1 {
                        *dd.entry(usize::MAX).or_default() += i64::from(s);
                    } else {
                        for &(e, t) in &below[b].boundary {
                            *dd.entry(e).or_default() += i64::from(s) * i64::from(t);
                        }
                    }
                }
                if dd.values().any(|&v| v != 0) {
                    return invalid(format!(
                        "cell {idx} in dimension {k}: boundary of boundary does not cancel"
                    ));
                }
            }
        }
        if let Some(signs) = &self.top_signs {
            if signs.len() != self.top_cells().len() || signs.iter().any(|&s| s != 1 && s != -1) {
                return invalid("top_signs must hold one ±1 per top cell");
            }
        }
        Ok(())
    }

    fn index_by_vertices(&self) -> Vec<HashMap<&[usize], usize>> {
        self.cells
            .iter()
            .map(|level| {
                level
                    .iter()
                    .enumerate()
                    .map(|(i, c)| (c.verts.as_slice(), i))
                    .collect()
            })
            .collect()
    }

    /// Orientation signs of the top cells: the recorded `top_signs` if
    /// present, otherwise [`LabeledComplex::orientation_signs`].
    pub fn top_cell_signs(&self) -> Result<Vec<i64>> {
        match &self.top_signs {
            Some(s) => Ok(s.iter().map(|&x| i64::from(x)).collect()),
            None => self.orientation_signs(),
        }
    }

    /// Sign of each top cell relative to the orientation of the simplex.
    ///
    /// A top cell with `n` vertices whose `x_l`-vertices (the vertices
    /// attaining the label's degree in `z_l`) are unique is anchored by the
    /// flag `{x_1} ⊂ {x_1, x_2} ⊂ ... ⊂ cell`: its sign is
    /// `(-1)^(n(n-1)/2)` times the product of the incidence signs along the
    /// flag. On a Scarf complex this is `sgn(eta)`. All other top cells get
    /// their sign by coherence across interior codimension-one cells, where
    /// the two induced boundary signs must cancel.
    pub fn orientation_signs(&self) -> Result<Vec<i64>> {
        let n = self.n;
        if self.dim() + 1 != n {
            return Err(Error::Orientation(format!(
                "complex of dimension {} does not subdivide an ({})-simplex",
                self.dim(),
                n - 1
            )));
        }
        let top = self.top_cells();
        let mut signs: Vec<Option<i64>> = (0..top.len()).map(|t| self.anchor_sign(t)).collect();

        if n >= 2 {
            let mut cofaces: HashMap<usize, Vec<(usize, i64)>> = HashMap::new();
            for (t, cell) in top.iter().enumerate() {
                for &(b, s) in &cell.boundary {
                    cofaces.entry(b).or_default().push((t, i64::from(s)));
                }
            }
            let mut adjacency: Vec<Vec<(usize, i64)>> = vec![Vec::new(); top.len()];
            for pair in cofaces.values().filter(|v| v.len() == 2) {
                let ((t1, s1), (t2, s2)) = (pair[0], pair[1]);
                // s_t1 * s1 + s_t2 * s2 = 0
                adjacency[t1].push((t2, -s1 * s2));
                adjacency[t2].push((t1, -s1 * s2));
            }
            let mut queue: VecDeque<usize> =
                (0..top.len()).filter(|&t| signs[t].is_some()).collect();
            while let Some(t) = queue.pop_front() {
                let st = signs[t].expect("queued cells are signed");
                for &(u, rel) in &adjacency[t] {
                    match signs[u] {
                        None => {
                            signs[u] = Some(st * rel);
                            queue.push_back(u);
                        }
                        Some(su) if su != st * rel => {
                            return Err(Error::Orientation(format!(
                                "top cells {t} and {u} are incoherently oriented"
                            )));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        signs
            .into_iter()
            .enumerate()
            .map(|(t, s)| {
                s.ok_or_else(|| Error::Orientation(format!("no anchor reaches top cell {t}")))
            })
            .collect()
    }

    fn anchor_sign(&self, t: usize) -> Option<i64> {
        let n = self.n;
        let cell = &self.top_cells()[t];
        if cell.verts.len() != n {
            return None;
        }
        let vertices = self.vertices();
        let mut roles = Vec::with_capacity(n);
        for l in 0..n {
            let mut hits = cell
                .verts
                .iter()
                .filter(|&&v| vertices[v].label[l] == cell.label[l]);
            match (hits.next(), hits.next()) {
                (Some(&v), None) if !roles.contains(&v) => roles.push(v),
                _ => return None,
            }
        }
        let index = self.index_by_vertices();
        let mut eps = 1i64;
        let mut prev = roles[0];
        for k in 1..n {
            let mut verts = roles[..=k].to_vec();
            verts.sort_unstable();
            let cur = *index[k].get(verts.as_slice())?;
            let &(_, s) = self.cells[k][cur]
                .boundary
                .iter()
                .find(|(b, _)| *b == prev)?;
            eps *= i64::from(s);
            prev = cur;
        }
        let parity = if (n * (n - 1) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        };
        Some(parity * eps)
    }

    /// Whether `signs` make the top cells cancel on every codimension-one
    /// cell shared by exactly two of them.
    pub fn is_coherent(&self, signs: &[i64]) -> bool {
        let mut sums: HashMap<usize, (i64, usize)> = HashMap::new();
        for (t, cell) in self.top_cells().iter().enumerate() {
            for &(b, s) in &cell.boundary {
                let e = sums.entry(b).or_default();
                e.0 += signs[t] * i64::from(s);
                e.1 += 1;
            }
        }
        sums.values()
            .filter(|(_, count)| *count == 2)
            .all(|(sum, _)| *sum == 0)
    }
}

/// The Scarf complex as a labeled complex with simplicial incidence signs:
/// removing the `j`-th vertex (1-based, ascending) gives sign `(-1)^(j-1)`.
pub fn scarf_to_complex(scarf: &ScarfComplex) -> LabeledComplex {
    let mut cells: Vec<Vec<Cell>> = Vec::new();
    let mut index: Vec<HashMap<Vec<usize>, usize>> = Vec::new();
    for (k, level) in scarf.levels().iter().enumerate() {
        let mut out = Vec::with_capacity(level.len());
        let mut idx = HashMap::new();
        for (i, face) in level.iter().enumerate() {
            let verts = face.vertices().to_vec();
            let boundary = if k == 0 {
                Vec::new()
            } else {
                (0..verts.len())
                    .map(|j| {
                        let mut sub = verts.clone();
                        sub.remove(j);
                        let b = index[k - 1][&sub];
                        (b, if j % 2 == 0 { 1 } else { -1 })
                    })
                    .collect()
            };
            idx.insert(verts.clone(), i);
            out.push(Cell {
                verts: if k == 0 { vec![i] } else { verts },
                label: face.label().clone(),
                boundary,
            });
        }
        cells.push(out);
        index.push(idx);
    }
    LabeledComplex {
        n: scarf.dim(),
        comment: None,
        top_signs: None,
        cells,
    }
}
