//! The Duskin nerve of a strict 2-category, up to dimension 4.
//!
//! A triangle on vertices `0, 1, 2` is `(a, b, c, θ)` with `a: 0 -> 1`,
//! `b: 1 -> 2`, `c: 0 -> 2` and `θ: c ⇒ b ∘ a`; its faces are
//! `d_0 = b`, `d_1 = c`, `d_2 = a`. A tetrahedron is the list of its four
//! faces `θ_0, ..., θ_3`, subject to
//! `(id_{e23} ∗ θ_3) · θ_1 = (θ_0 ∗ id_{e01}) · θ_2`, and a 4-simplex is
//! any compatible family of five tetrahedra.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::twocat::TwoCategory;
use crate::simplicial::{
    check_boundary, check_degeneracy_index, check_face_index, compatible_spheres, BoundaryError, SimplicialError,
    SimplicialSet,
};

/// `θ: c ⇒ b ∘ a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triangle {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub theta: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum DuskinSimplex {
    Object { object: usize },
    OneCell { cell: usize },
    Triangle(Triangle),
    Tetrahedron { faces: [Triangle; 4] },
    FourSimplex { faces: [[Triangle; 4]; 5] },
}

impl DuskinSimplex {
    pub fn dim(&self) -> usize {
        match self {
            DuskinSimplex::Object { .. } => 0,
            DuskinSimplex::OneCell { .. } => 1,
            DuskinSimplex::Triangle(_) => 2,
            DuskinSimplex::Tetrahedron { .. } => 3,
            DuskinSimplex::FourSimplex { .. } => 4,
        }
    }

    /// Assembles a simplex of dimension 3 or 4 from its faces.
    fn from_faces(faces: Vec<DuskinSimplex>) -> Result<Self, SimplicialError> {
        let bad = || SimplicialError::Invalid("faces of mixed or unsupported dimension".into());
        match faces.len() {
            4 => {
                let tri: Vec<Triangle> = faces
                    .into_iter()
                    .map(|f| match f {
                        DuskinSimplex::Triangle(t) => Ok(t),
                        _ => Err(bad()),
                    })
                    .collect::<Result<_, _>>()?;
                Ok(DuskinSimplex::Tetrahedron { faces: tri.try_into().map_err(|_| bad())? })
            }
            5 => {
                let tets: Vec<[Triangle; 4]> = faces
                    .into_iter()
                    .map(|f| match f {
                        DuskinSimplex::Tetrahedron { faces } => Ok(faces),
                        _ => Err(bad()),
                    })
                    .collect::<Result<_, _>>()?;
                Ok(DuskinSimplex::FourSimplex { faces: tets.try_into().map_err(|_| bad())? })
            }
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NerveError {
    #[error("dimension {0} is beyond the nerve oracle (n <= 4)")]
    DimensionTooLarge(usize),
    #[error("cell index out of range in {0:?}")]
    OutOfRange(Box<DuskinSimplex>),
    #[error("triangle {face} does not have the form θ: c ⇒ b ∘ a")]
    InvalidTriangle { face: usize },
    #[error("incompatible faces: {0}")]
    Boundary(#[from] BoundaryError),
    #[error("face {face} violates the tetrahedron relation")]
    Relation { face: usize },
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
}

/// The Duskin nerve `N(C)`, truncated at dimension 4.
#[derive(Clone, Debug)]
pub struct DuskinNerve {
    cat: TwoCategory,
    /// 1-cell `t` ↦ all `(a, b)` with `b ∘ a = t`.
    factorizations: HashMap<usize, Vec<(usize, usize)>>,
}

impl DuskinNerve {
    pub fn new(cat: TwoCategory) -> Self {
        let mut factorizations: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
        for (b, a, t) in cat.one_compositions() {
            factorizations.entry(t).or_default().push((a, b));
        }
        for list in factorizations.values_mut() {
            list.sort_unstable();
        }
        DuskinNerve { cat, factorizations }
    }

    pub fn category(&self) -> &TwoCategory {
        &self.cat
    }

    fn triangle_ok(&self, t: &Triangle) -> bool {
        let c = &self.cat;
        let n1 = c.num_one_cells();
        if t.a >= n1 || t.b >= n1 || t.c >= n1 || t.theta >= c.num_two_cells() {
            return false;
        }
        c.two_src(t.theta) == t.c && c.compose_one(t.b, t.a) == Some(c.two_tgt(t.theta))
    }

    /// Whether a boundary-compatible family of four triangles satisfies
    /// the tetrahedron relation. Malformed or incompatible faces are an
    /// error rather than `false`.
    pub fn pasting_relation_holds(&self, faces: &[Triangle; 4]) -> Result<bool, NerveError> {
        for (face, t) in faces.iter().enumerate() {
            if !self.triangle_ok(t) {
                return Err(NerveError::InvalidTriangle { face });
            }
        }
        let as_simplices: Vec<_> = faces.iter().map(|&t| DuskinSimplex::Triangle(t)).collect();
        check_boundary(self, &as_simplices)?;
        Ok(self.relation_unchecked(faces))
    }

    fn relation_unchecked(&self, [t0, t1, t2, t3]: &[Triangle; 4]) -> bool {
        let c = &self.cat;
        let (e01, e23) = (t3.a, t0.b);
        let lhs = c.hcompose(c.two_identity(e23), t3.theta).and_then(|w| c.vcompose(w, t1.theta));
        let rhs = c.hcompose(t0.theta, c.two_identity(e01)).and_then(|w| c.vcompose(w, t2.theta));
        lhs.is_some() && lhs == rhs
    }

    /// Checks that `s` is a simplex of the nerve.
    pub fn validate(&self, s: &DuskinSimplex) -> Result<(), NerveError> {
        let c = &self.cat;
        match s {
            DuskinSimplex::Object { object } if *object < c.num_objects() => Ok(()),
            DuskinSimplex::OneCell { cell } if *cell < c.num_one_cells() => Ok(()),
            DuskinSimplex::Object { .. } | DuskinSimplex::OneCell { .. } => {
                Err(NerveError::OutOfRange(Box::new(s.clone())))
            }
            DuskinSimplex::Triangle(t) => {
                if self.triangle_ok(t) {
                    Ok(())
                } else {
                    Err(NerveError::InvalidTriangle { face: 0 })
                }
            }
            DuskinSimplex::Tetrahedron { faces } => {
                if self.pasting_relation_holds(faces)? {
                    Ok(())
                } else {
                    Err(NerveError::Relation { face: 0 })
                }
            }
            DuskinSimplex::FourSimplex { faces } => {
                for (face, tet) in faces.iter().enumerate() {
                    if !self.pasting_relation_holds(tet)? {
                        return Err(NerveError::Relation { face });
                    }
                }
                let as_simplices: Vec<_> = faces.iter().map(|&f| DuskinSimplex::Tetrahedron { faces: f }).collect();
                check_boundary(self, &as_simplices)?;
                Ok(())
            }
        }
    }

    /// All `n`-simplices, `n <= 4`, in a deterministic order.
    pub fn nerve_simplices(&self, n: usize) -> Result<Vec<DuskinSimplex>, NerveError> {
        let c = &self.cat;
        match n {
            0 => Ok((0..c.num_objects()).map(|object| DuskinSimplex::Object { object }).collect()),
            1 => Ok((0..c.num_one_cells()).map(|cell| DuskinSimplex::OneCell { cell }).collect()),
            2 => Ok(self.triangles().into_iter().map(DuskinSimplex::Triangle).collect()),
            3 => Ok(self.tetrahedra().into_iter().map(|faces| DuskinSimplex::Tetrahedron { faces }).collect()),
            4 => {
                let spheres = compatible_spheres(self, 4)?;
                spheres.into_iter().map(|faces| Ok(DuskinSimplex::from_faces(faces)?)).collect()
            }
            _ => Err(NerveError::DimensionTooLarge(n)),
        }
    }

    /// Triangles ordered by `(a, b, c, θ)`.
    fn triangles(&self) -> Vec<Triangle> {
        let c = &self.cat;
        let mut out: Vec<Triangle> = (0..c.num_two_cells())
            .flat_map(|theta| {
                let target = c.two_tgt(theta);
                let src = c.two_src(theta);
                self.factorizations.get(&target).into_iter().flatten().map(move |&(a, b)| Triangle {
                    a,
                    b,
                    c: src,
                    theta,
                })
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Tetrahedra ordered by `(θ_3, θ_1, θ_2, θ_0)`, found by joining
    /// triangles along shared edges.
    fn tetrahedra(&self) -> Vec<[Triangle; 4]> {
        let triangles = self.triangles();
        let mut by_a: HashMap<usize, Vec<Triangle>> = HashMap::new();
        let mut by_a_c: HashMap<(usize, usize), Vec<Triangle>> = HashMap::new();
        let mut by_abc: HashMap<(usize, usize, usize), Vec<Triangle>> = HashMap::new();
        for &t in &triangles {
            by_a.entry(t.a).or_default().push(t);
            by_a_c.entry((t.a, t.c)).or_default().push(t);
            by_abc.entry((t.a, t.b, t.c)).or_default().push(t);
        }
        let empty = Vec::new();
        triangles
            .par_iter()
            .map(|&t3| {
                let mut out = Vec::new();
                // θ_1 on (0,2,3): a = e02.
                for &t1 in by_a.get(&t3.c).unwrap_or(&empty) {
                    // θ_2 on (0,1,3): a = e01, c = e03.
                    for &t2 in by_a_c.get(&(t3.a, t1.c)).unwrap_or(&empty) {
                        // θ_0 on (1,2,3): a = e12, b = e23, c = e13.
                        for &t0 in by_abc.get(&(t3.b, t1.b, t2.b)).unwrap_or(&empty) {
                            let faces = [t0, t1, t2, t3];
                            if self.relation_unchecked(&faces) {
                                out.push(faces);
                            }
                        }
                    }
                }
                out
            })
            .flatten()
            .collect()
    }

    fn edge_degeneracy(&self, f: usize, i: usize) -> Triangle {
        let c = &self.cat;
        let id_f = c.two_identity(f);
        if i == 0 {
            Triangle { a: c.one_identity(c.one_src(f)), b: f, c: f, theta: id_f }
        } else {
            Triangle { a: f, b: c.one_identity(c.one_tgt(f)), c: f, theta: id_f }
        }
    }
}

impl SimplicialSet for DuskinNerve {
    type Simplex = DuskinSimplex;

    fn dim(&self, s: &DuskinSimplex) -> usize {
        s.dim()
    }

    fn face(&self, s: &DuskinSimplex, i: usize) -> Result<DuskinSimplex, SimplicialError> {
        check_face_index(i, s.dim())?;
        let c = &self.cat;
        Ok(match s {
            DuskinSimplex::Object { .. } => unreachable!("checked above"),
            DuskinSimplex::OneCell { cell } => {
                let object = if i == 0 { c.one_tgt(*cell) } else { c.one_src(*cell) };
                DuskinSimplex::Object { object }
            }
            DuskinSimplex::Triangle(t) => DuskinSimplex::OneCell { cell: [t.b, t.c, t.a][i] },
            DuskinSimplex::Tetrahedron { faces } => DuskinSimplex::Triangle(faces[i]),
            DuskinSimplex::FourSimplex { faces } => DuskinSimplex::Tetrahedron { faces: faces[i] },
        })
    }

    fn degeneracy(&self, s: &DuskinSimplex, i: usize) -> Result<DuskinSimplex, SimplicialError> {
        let n = s.dim();
        check_degeneracy_index(i, n)?;
        match s {
            DuskinSimplex::Object { object } => Ok(DuskinSimplex::OneCell { cell: self.cat.one_identity(*object) }),
            DuskinSimplex::OneCell { cell } => Ok(DuskinSimplex::Triangle(self.edge_degeneracy(*cell, i))),
            DuskinSimplex::FourSimplex { .. } => Err(SimplicialError::DimensionTooLarge { dim: n + 1, max: 4 }),
            _ => {
                // d_j s_i via the simplicial identities.
                let faces = (0..=n + 1)
                    .map(|j| {
                        if j < i {
                            self.degeneracy(&self.face(s, j)?, i - 1)
                        } else if j == i || j == i + 1 {
                            Ok(s.clone())
                        } else {
                            self.degeneracy(&self.face(s, j - 1)?, i)
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                DuskinSimplex::from_faces(faces)
            }
        }
    }

    fn simplices(&self, n: usize) -> Result<Vec<DuskinSimplex>, SimplicialError> {
        self.nerve_simplices(n).map_err(|e| match e {
            NerveError::Simplicial(e) => e,
            NerveError::DimensionTooLarge(n) => SimplicialError::DimensionTooLarge { dim: n, max: 4 },
            other => SimplicialError::Invalid(other.to_string()),
        })
    }

    fn max_dim(&self) -> Option<usize> {
        Some(4)
    }
}

/// All `n`-simplices of `N(C)` for `n <= 4`.
pub fn nerve_simplices(cat: &TwoCategory, n: usize) -> Result<Vec<DuskinSimplex>, NerveError> {
    DuskinNerve::new(cat.clone()).nerve_simplices(n)
}

/// The tetrahedron relation for four triangles of `C`.
pub fn pasting_relation_holds(cat: &TwoCategory, faces: &[Triangle; 4]) -> Result<bool, NerveError> {
    DuskinNerve::new(cat.clone()).pasting_relation_holds(faces)
}
