//! The comparison between tuples of matrices and the Duskin nerve of a
//! multi-suspension.
//!
//! For parts of types `k_1 <= ... <= k_r`, vertex `t` goes to the object
//! `x_{v(t)}` with `v(t) = #{i : k_i < t}`. In component `i`, vertices
//! `t <= k_i` are rows and the others columns `t - k_i - 1`; the edge
//! `s -> t` collects the entries `M_i(s, t - k_i - 1)` and a triangle
//! collects the vertical or horizontal composites between them.

use thiserror::Error;

use super::nerve::{DuskinSimplex, Triangle};
use super::suspension::{CellLabel, MultiSuspension};
use crate::matset::{FillError, MatError, MatSimplex};
use crate::simplicial::{boundary, restrict, SimplicialError, SimplicialSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PhiError {
    #[error("expected {expected} parts, got {got}")]
    PartCount { expected: usize, got: usize },
    #[error("parts have different dimensions")]
    MixedDimensions,
    #[error("dimension {0} is out of range")]
    Dimension(usize),
    #[error("part types {0:?} are not nondecreasing")]
    TypesNotMonotone(Vec<isize>),
    #[error("part {part} is not a valid matrix: {source}")]
    InvalidPart { part: usize, source: MatError },
    #[error("nerve simplex has no preimage: {0}")]
    NoPreimage(String),
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
    #[error(transparent)]
    Fill(#[from] FillError),
}

struct Layout<'a> {
    parts: &'a [MatSimplex],
    ks: Vec<isize>,
}

impl Layout<'_> {
    fn v(&self, t: usize) -> usize {
        self.ks.iter().filter(|&&k| k < t as isize).count()
    }

    fn col(&self, i: usize, t: usize) -> usize {
        (t as isize - self.ks[i] - 1) as usize
    }
}

fn check_parts(ms: &MultiSuspension, parts: &[MatSimplex], max_dim: usize) -> Result<usize, PhiError> {
    if parts.len() != ms.r() {
        return Err(PhiError::PartCount { expected: ms.r(), got: parts.len() });
    }
    let n = parts[0].dim();
    if parts.iter().any(|p| p.dim() != n) {
        return Err(PhiError::MixedDimensions);
    }
    if n > max_dim {
        return Err(PhiError::Dimension(n));
    }
    let ks: Vec<isize> = parts.iter().map(MatSimplex::k).collect();
    if ks.windows(2).any(|w| w[0] > w[1]) {
        return Err(PhiError::TypesNotMonotone(ks));
    }
    for (part, p) in parts.iter().enumerate() {
        ms.factor(part).validate(p).map_err(|source| PhiError::InvalidPart { part, source })?;
    }
    Ok(n)
}

/// Sends a tuple of matrices of dimension `n <= 4` with nondecreasing types
/// to the corresponding simplex of `N(Σ[D_1, ..., D_r])`.
pub fn phi(ms: &MultiSuspension, parts: &[MatSimplex]) -> Result<DuskinSimplex, PhiError> {
    let n = check_parts(ms, parts, 4)?;
    let layout = Layout { parts, ks: parts.iter().map(MatSimplex::k).collect() };
    let vertices: Vec<usize> = (0..=n).collect();
    Ok(build(ms, &layout, &vertices))
}

fn edge(ms: &MultiSuspension, lay: &Layout, s: usize, t: usize) -> usize {
    let (from, to) = (lay.v(s), lay.v(t));
    let components = (from..to).map(|i| lay.parts[i].entry(s, lay.col(i, t))).collect();
    ms.one_cell(&CellLabel { from, to, components }).expect("entries are objects of the factors")
}

fn triangle(ms: &MultiSuspension, lay: &Layout, s: usize, t: usize, u: usize) -> Triangle {
    let (from, mid, to) = (lay.v(s), lay.v(t), lay.v(u));
    let components = (from..to)
        .map(|i| {
            let m = ms.factor(i);
            let p = &lay.parts[i];
            let cu = lay.col(i, u);
            if i < mid {
                // t is a column of part i
                m.arrow_between(p, (s, cu), (s, lay.col(i, t)))
            } else {
                m.arrow_between(p, (s, cu), (t, cu))
            }
            .expect("matrix arrows compose")
        })
        .collect();
    let theta = ms.two_cell(&CellLabel { from, to, components }).expect("arrows are morphisms of the factors");
    Triangle { a: edge(ms, lay, s, t), b: edge(ms, lay, t, u), c: edge(ms, lay, s, u), theta }
}

fn build(ms: &MultiSuspension, lay: &Layout, vertices: &[usize]) -> DuskinSimplex {
    match *vertices {
        [t] => DuskinSimplex::Object { object: lay.v(t) },
        [s, t] => DuskinSimplex::OneCell { cell: edge(ms, lay, s, t) },
        [s, t, u] => DuskinSimplex::Triangle(triangle(ms, lay, s, t, u)),
        _ => {
            let faces = (0..vertices.len())
                .map(|j| {
                    let rest: Vec<usize> =
                        vertices.iter().enumerate().filter(|&(x, _)| x != j).map(|(_, &v)| v).collect();
                    build(ms, lay, &rest)
                })
                .collect::<Vec<_>>();
            match faces.len() {
                4 => DuskinSimplex::Tetrahedron {
                    faces: faces
                        .iter()
                        .map(|f| match f {
                            DuskinSimplex::Triangle(t) => *t,
                            _ => unreachable!(),
                        })
                        .collect::<Vec<_>>()
                        .try_into()
                        .unwrap(),
                },
                5 => DuskinSimplex::FourSimplex {
                    faces: faces
                        .iter()
                        .map(|f| match f {
                            DuskinSimplex::Tetrahedron { faces } => *faces,
                            _ => unreachable!(),
                        })
                        .collect::<Vec<_>>()
                        .try_into()
                        .unwrap(),
                },
                _ => unreachable!("phi is bounded by dimension 4"),
            }
        }
    }
}

/// Inverse of [`phi`], reading the matrices off the 2-skeleton of a nerve
/// simplex of dimension `<= 4`.
#[allow(clippy::needless_range_loop)]
pub fn phi_inverse(ms: &MultiSuspension, t: &DuskinSimplex) -> Result<Vec<MatSimplex>, PhiError> {
    let nerve = ms.nerve();
    nerve.validate(t).map_err(|e| PhiError::NoPreimage(e.to_string()))?;
    let n = t.dim();
    let at = |vs: &[usize]| restrict(nerve, t, vs);
    let mut v = Vec::with_capacity(n + 1);
    for x in 0..=n {
        match at(&[x])? {
            DuskinSimplex::Object { object } => v.push(object),
            _ => unreachable!("vertices are objects"),
        }
    }
    let edge_label = |s: usize, u: usize| -> Result<&CellLabel, PhiError> {
        match at(&[s, u])? {
            DuskinSimplex::OneCell { cell } => Ok(ms.one_label(cell)),
            _ => unreachable!("edges are 1-cells"),
        }
    };
    let cell_label = |s: usize, m: usize, u: usize| -> Result<&CellLabel, PhiError> {
        match at(&[s, m, u])? {
            DuskinSimplex::Triangle(tri) => Ok(ms.two_label(tri.theta)),
            _ => unreachable!("2-faces are triangles"),
        }
    };

    let mut parts = Vec::with_capacity(ms.r());
    for i in 0..ms.r() {
        // Rows of part i are the vertices sitting at x_0..x_i.
        let k = (0..=n).filter(|&x| v[x] <= i).max().map_or(-1, |x| x as isize);
        if k == -1 {
            parts.push(MatSimplex::empty_row(n));
            continue;
        }
        if k == n as isize {
            parts.push(MatSimplex::empty_column(n));
            continue;
        }
        let rows = k as usize + 1;
        let cols = n - rows + 1;
        let vertex = |b: usize| b + rows;
        let mut entries = Vec::with_capacity(rows * cols);
        for a in 0..rows {
            for b in 0..cols {
                entries.push(edge_label(a, vertex(b))?.components[i - v[a]]);
            }
        }
        let mut vert = Vec::new();
        for a in 0..rows - 1 {
            for b in 0..cols {
                vert.push(cell_label(a, a + 1, vertex(b))?.components[i - v[a]]);
            }
        }
        let mut horz = Vec::new();
        for a in 0..rows {
            for b in 1..cols {
                horz.push(cell_label(a, vertex(b - 1), vertex(b))?.components[i - v[a]]);
            }
        }
        let part = MatSimplex::from_parts(k, (cols - 1) as isize, entries, vert, horz)
            .map_err(|source| PhiError::InvalidPart { part: i, source })?;
        ms.factor(i).validate(&part).map_err(|source| PhiError::InvalidPart { part: i, source })?;
        parts.push(part);
    }
    if &phi(ms, &parts)? != t {
        return Err(PhiError::NoPreimage("matrices read off the simplex do not reproduce it".into()));
    }
    Ok(parts)
}

/// [`phi_inverse`] on a 4-simplex computed face by face: the faces are
/// inverted in dimension 3 and each part is then rebuilt with the
/// coskeletal filler.
pub fn phi_inverse_by_fill(ms: &MultiSuspension, t: &DuskinSimplex) -> Result<Vec<MatSimplex>, PhiError> {
    if t.dim() != 4 {
        return Err(PhiError::Dimension(t.dim()));
    }
    let faces = boundary(ms.nerve(), t)?.iter().map(|f| phi_inverse(ms, f)).collect::<Result<Vec<_>, _>>()?;
    (0..ms.r())
        .map(|i| {
            let part_faces: Vec<MatSimplex> = faces.iter().map(|f| f[i].clone()).collect();
            Ok(ms.factor(i).coskeletal_fill(&part_faces)?)
        })
        .collect()
}

/// Faces of `phi(parts)` agree with `phi` of the componentwise faces.
pub fn phi_commutes_with_faces(ms: &MultiSuspension, parts: &[MatSimplex]) -> Result<bool, PhiError> {
    let image = phi(ms, parts)?;
    if image.dim() == 0 {
        return Ok(true);
    }
    for i in 0..=image.dim() {
        let face_parts =
            parts.iter().enumerate().map(|(p, m)| ms.factor(p).face(m, i)).collect::<Result<Vec<_>, _>>()?;
        if ms.nerve().face(&image, i)? != phi(ms, &face_parts)? {
            return Ok(false);
        }
    }
    Ok(true)
}
