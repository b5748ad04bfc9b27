//! The Scarf complex: generator subsets whose lcm is attained by no other subset.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScarfFace {
    vertices: Vec<usize>,
    label: ExponentVector,
}

impl ScarfFace {
    /// Generator indices, ascending.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Exponent of the lcm of the vertices.
    pub fn label(&self) -> &ExponentVector {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }
}

#[derive(Clone, Debug)]
pub struct ScarfComplex {
    ideal: MonomialIdeal,
    /// `levels[k - 1]` holds the faces with `k` vertices.
    levels: Vec<Vec<ScarfFace>>,
}

/// Builds the Scarf complex breadth-first.
///
/// A set `J` of generators has a unique lcm iff no generator outside `J`
/// divides `m_J` and no `J \ {v}` has the same lcm. Since faces are closed
/// under subsets, candidates at level `k + 1` are extensions of level-`k`
/// faces all of whose `k`-subsets are faces.
pub fn build_scarf(ideal: &MonomialIdeal) -> Result<ScarfComplex> {
    ideal.require_artinian()?;
    let gens = ideal.generators();
    let r = gens.len();

    let mut levels: Vec<Vec<ScarfFace>> = vec![(0..r)
        .map(|i| ScarfFace {
            vertices: vec![i],
            label: gens[i].clone(),
        })
        .collect()];

    loop {
        let current = levels.last().expect("non-empty");
        let labels: HashMap<&[usize], &ExponentVector> = current
            .iter()
            .map(|f| (f.vertices.as_slice(), &f.label))
            .collect();
        let mut next = Vec::new();
        for face in current {
            let last = *face.vertices.last().expect("non-empty face");
            for g in last + 1..r {
                let mut verts = face.vertices.clone();
                verts.push(g);
                let label = face.label.join_unchecked(&gens[g]);

                let mut unique = true;
                let mut sub = Vec::with_capacity(verts.len() - 1);
                for skip in 0..verts.len() {
                    sub.clear();
                    sub.extend(
                        verts
                            .iter()
                            .enumerate()
                            .filter(|&(p, _)| p != skip)
                            .map(|(_, &v)| v),
                    );
                    match labels.get(sub.as_slice()) {
                        Some(&l) if *l != label => {}
                        _ => {
                            unique = false;
                            break;
                        }
                    }
                }
                if !unique {
                    continue;
                }
                let member: HashSet<usize> = verts.iter().copied().collect();
                if (0..r).any(|h| !member.contains(&h) && gens[h].divides_unchecked(&label)) {
                    continue;
                }
                next.push(ScarfFace {
                    vertices: verts,
                    label,
                });
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }

    Ok(ScarfComplex {
        ideal: ideal.clone(),
        levels,
    })
}

impl ScarfComplex {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn dim(&self) -> usize {
        self.ideal.dim()
    }

    /// Number of vertices of the largest face.
    pub fn max_face_size(&self) -> usize {
        self.levels.len()
    }

    /// `Delta(k)`: faces with `k` vertices, `k >= 1`.
    pub fn faces(&self, k: usize) -> &[ScarfFace] {
        if k == 0 {
            return &[];
        }
        self.levels.get(k - 1).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn levels(&self) -> &[Vec<ScarfFace>] {
        &self.levels
    }

    /// `Delta(n)`.
    pub fn top_faces(&self) -> &[ScarfFace] {
        self.faces(self.dim())
    }

    pub fn all_faces(&self) -> impl Iterator<Item = &ScarfFace> {
        self.levels.iter().flatten()
    }

    pub fn face_by_label(&self, label: &ExponentVector) -> Option<&ScarfFace> {
        self.top_faces().iter().find(|f| &f.label == label)
    }

    /// `sum_k (-1)^(k-1) |Delta(k)|`.
    pub fn euler_characteristic(&self) -> i64 {
        self.levels
            .iter()
            .enumerate()
            .map(|(i, l)| {
                if i % 2 == 0 {
                    l.len() as i64
                } else {
                    -(l.len() as i64)
                }
            })
            .sum()
    }

    fn require_top(&self, face: &ScarfFace) -> Result<()> {
        if face.vertices.len() != self.dim() {
            return Err(Error::NotTopFace {
                vertices: face.vertices.len(),
                n: self.dim(),
            });
        }
        Ok(())
    }

    /// Position (within `face.vertices()`) of the unique vertex attaining the
    /// label's degree in variable `l`.
    pub fn x_vertex_position(&self, face: &ScarfFace, l: usize) -> Result<usize> {
        self.require_top(face)?;
        let gens = self.ideal.generators();
        let mut hits = face
            .vertices
            .iter()
            .enumerate()
            .filter(|(_, &v)| gens[v][l] == face.label[l])
            .map(|(p, _)| p);
        let first = hits.next();
        let rest = hits.count();
        match (first, rest) {
            (Some(p), 0) => Ok(p),
            (first, rest) => Err(Error::AmbiguousVertex {
                face: face.vertices.clone(),
                variable: l + 1,
                count: rest + usize::from(first.is_some()),
            }),
        }
    }

    /// The `x_l`-vertex of a top face, as a generator index.
    pub fn x_vertex(&self, face: &ScarfFace, l: usize) -> Result<usize> {
        Ok(face.vertices[self.x_vertex_position(face, l)?])
    }

    /// The permutation `eta` with `i_{eta(l)}` the `x_l`-vertex, and its sign.
    pub fn eta(&self, face: &ScarfFace) -> Result<(Permutation, i64)> {
        let images = (0..self.dim())
            .map(|l| self.x_vertex_position(face, l))
            .collect::<Result<Vec<_>>>()?;
        let eta = Permutation::new(images)?;
        let sign = eta.sign();
        Ok((eta, sign))
    }
}

impl Serialize for ScarfComplex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            generators: &'a [ExponentVector],
            faces: &'a [Vec<ScarfFace>],
        }
        Repr {
            n: self.dim(),
            generators: self.ideal.generators(),
            faces: &self.levels,
        }
        .serialize(s)
    }
}
