//! A small simplicial-set interface shared by the matrix model, the Duskin
//! nerve and the tuple model, with the exhaustive checks that run against
//! all three.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplicialError {
    #[error("face index {index} out of range for a {dim}-simplex")]
    FaceIndex { index: usize, dim: usize },
    #[error("a 0-simplex has no faces")]
    NoFaces,
    #[error("degeneracy index {index} out of range for a {dim}-simplex")]
    DegeneracyIndex { index: usize, dim: usize },
    #[error("dimension {dim} exceeds the supported maximum {max}")]
    DimensionTooLarge { dim: usize, max: usize },
    #[error("vertex list {0:?} is not a strictly increasing subset of the simplex")]
    BadVertices(Vec<usize>),
    #[error("{0}")]
    Invalid(String),
}

pub trait SimplicialSet: Sync {
    type Simplex: Clone + Eq + Hash + Debug + Send + Sync;

    fn dim(&self, s: &Self::Simplex) -> usize;
    fn face(&self, s: &Self::Simplex, i: usize) -> Result<Self::Simplex, SimplicialError>;
    fn degeneracy(&self, s: &Self::Simplex, i: usize) -> Result<Self::Simplex, SimplicialError>;
    /// All `n`-simplices in a fixed order.
    fn simplices(&self, n: usize) -> Result<Vec<Self::Simplex>, SimplicialError>;

    /// Largest dimension in which simplices can be produced, if bounded.
    fn max_dim(&self) -> Option<usize> {
        None
    }
}

pub(crate) fn check_face_index(i: usize, dim: usize) -> Result<(), SimplicialError> {
    if dim == 0 {
        Err(SimplicialError::NoFaces)
    } else if i > dim {
        Err(SimplicialError::FaceIndex { index: i, dim })
    } else {
        Ok(())
    }
}

pub(crate) fn check_degeneracy_index(i: usize, dim: usize) -> Result<(), SimplicialError> {
    if i > dim {
        Err(SimplicialError::DegeneracyIndex { index: i, dim })
    } else {
        Ok(())
    }
}

/// The faces `d_0 s, ..., d_n s`.
pub fn boundary<X: SimplicialSet>(set: &X, s: &X::Simplex) -> Result<Vec<X::Simplex>, SimplicialError> {
    (0..=set.dim(s)).map(|i| set.face(s, i)).collect()
}

/// Pulls `s` back along the vertex inclusion `vertices ⊆ [dim s]`.
pub fn restrict<X: SimplicialSet>(set: &X, s: &X::Simplex, vertices: &[usize]) -> Result<X::Simplex, SimplicialError> {
    let n = set.dim(s);
    let increasing = vertices.windows(2).all(|w| w[0] < w[1]);
    if vertices.is_empty() || !increasing || *vertices.last().unwrap() > n {
        return Err(SimplicialError::BadVertices(vertices.to_vec()));
    }
    let mut current = s.clone();
    for v in (0..=n).rev() {
        if !vertices.contains(&v) {
            current = set.face(&current, v)?;
        }
    }
    Ok(current)
}

/// A failure of `d_i τ_j = d_{j-1} τ_i` for `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundaryError {
    #[error("a sphere in dimension {n} needs {expected} faces, got {got}")]
    FaceCount { n: usize, expected: usize, got: usize },
    #[error("face {index} has dimension {got}, expected {expected}")]
    FaceDimension { index: usize, expected: usize, got: usize },
    #[error("faces {i} and {j} do not agree: d_{i} τ_{j} != d_{jm1} τ_{i}", jm1 = j - 1)]
    Mismatch { i: usize, j: usize },
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
}

/// Checks that `faces` (indexed `0..=n`) form the boundary of a potential
/// `n`-simplex.
pub fn check_boundary<X: SimplicialSet>(set: &X, faces: &[X::Simplex]) -> Result<(), BoundaryError> {
    if faces.len() < 2 {
        return Err(BoundaryError::FaceCount { n: faces.len().saturating_sub(1), expected: 2, got: faces.len() });
    }
    let n = faces.len() - 1;
    for (index, f) in faces.iter().enumerate() {
        let got = set.dim(f);
        if got != n - 1 {
            return Err(BoundaryError::FaceDimension { index, expected: n - 1, got });
        }
    }
    if n == 1 {
        return Ok(());
    }
    for j in 1..=n {
        for i in 0..j {
            if set.face(&faces[j], i)? != set.face(&faces[i], j - 1)? {
                return Err(BoundaryError::Mismatch { i, j });
            }
        }
    }
    Ok(())
}

/// A witness `i` with `s = s_i d_i s`, if `s` is degenerate.
pub fn degeneracy_witness<X: SimplicialSet>(set: &X, s: &X::Simplex) -> Result<Option<usize>, SimplicialError> {
    let n = set.dim(s);
    for i in 0..n {
        if &set.degeneracy(&set.face(s, i)?, i)? == s {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Which of the five simplicial identities failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Identity {
    /// `d_i d_j = d_{j-1} d_i` for `i < j`.
    FaceFace,
    /// `d_i s_j = s_{j-1} d_i` for `i < j`.
    FaceDegeneracyBelow,
    /// `d_j s_j = id = d_{j+1} s_j`.
    FaceDegeneracyRetract,
    /// `d_i s_j = s_j d_{i-1}` for `i > j + 1`.
    FaceDegeneracyAbove,
    /// `s_i s_j = s_{j+1} s_i` for `i <= j`.
    DegeneracyDegeneracy,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("{identity:?} fails on {simplex} (dimension {dim}) with i = {i}, j = {j}")]
    Violation { identity: Identity, dim: usize, i: usize, j: usize, simplex: String },
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub simplices: usize,
    pub checks: usize,
}

/// Checks all five simplicial identities on every simplex of dimension
/// `0..=max_n`. Identities needing a simplex above `set.max_dim()` are
/// skipped.
pub fn check_identities<X: SimplicialSet>(set: &X, max_n: usize) -> Result<IdentityReport, IdentityError> {
    let top = set.max_dim().unwrap_or(usize::MAX);
    let mut report = IdentityReport::default();
    for n in 0..=max_n.min(top) {
        let simplices = set.simplices(n)?;
        report.simplices += simplices.len();
        let counts: Vec<usize> =
            simplices.par_iter().map(|x| check_identities_at(set, x, n, top)).collect::<Result<_, _>>()?;
        report.checks += counts.iter().sum::<usize>();
    }
    Ok(report)
}

fn check_identities_at<X: SimplicialSet>(
    set: &X,
    x: &X::Simplex,
    n: usize,
    top: usize,
) -> Result<usize, IdentityError> {
    let mut checks = 0;
    let fail = |identity, i, j| IdentityError::Violation { identity, dim: n, i, j, simplex: format!("{x:?}") };
    if n >= 2 {
        for j in 1..=n {
            for i in 0..j {
                checks += 1;
                if set.face(&set.face(x, j)?, i)? != set.face(&set.face(x, i)?, j - 1)? {
                    return Err(fail(Identity::FaceFace, i, j));
                }
            }
        }
    }
    if n < top {
        for j in 0..=n {
            let sj = set.degeneracy(x, j)?;
            for i in 0..=n + 1 {
                checks += 1;
                let lhs = set.face(&sj, i)?;
                let (ok, identity) = if i < j {
                    (lhs == set.degeneracy(&set.face(x, i)?, j - 1)?, Identity::FaceDegeneracyBelow)
                } else if i == j || i == j + 1 {
                    (&lhs == x, Identity::FaceDegeneracyRetract)
                } else {
                    (lhs == set.degeneracy(&set.face(x, i - 1)?, j)?, Identity::FaceDegeneracyAbove)
                };
                if !ok {
                    return Err(fail(identity, i, j));
                }
            }
        }
    }
    if n + 1 < top {
        for j in 0..=n {
            for i in 0..=j {
                checks += 1;
                let lhs = set.degeneracy(&set.degeneracy(x, j)?, i)?;
                let rhs = set.degeneracy(&set.degeneracy(x, i)?, j + 1)?;
                if lhs != rhs {
                    return Err(fail(Identity::DegeneracyDegeneracy, i, j));
                }
            }
        }
    }
    Ok(checks)
}

/// Every family `(τ_0, ..., τ_n)` of `(n-1)`-simplices with
/// `d_i τ_j = d_{j-1} τ_i` for all `i < j`, for `n >= 2`.
///
/// Families are built face by face; candidates for `τ_j` are looked up by
/// their `0`-th face, which is forced to be `d_{j-1} τ_0`.
pub fn compatible_spheres<X: SimplicialSet>(set: &X, n: usize) -> Result<Vec<Vec<X::Simplex>>, SimplicialError> {
    if n < 2 {
        return Err(SimplicialError::Invalid(format!("spheres are enumerated for n >= 2, got {n}")));
    }
    let cells = set.simplices(n - 1)?;
    // Intern the (n-2)-dimensional faces.
    let mut ids: HashMap<X::Simplex, usize> = HashMap::new();
    let mut faces = Vec::with_capacity(cells.len());
    for c in &cells {
        let mut row = Vec::with_capacity(n);
        for i in 0..n {
            let f = set.face(c, i)?;
            let next = ids.len();
            row.push(*ids.entry(f).or_insert(next));
        }
        faces.push(row);
    }
    let mut by_first_face: HashMap<usize, Vec<usize>> = HashMap::new();
    for (c, row) in faces.iter().enumerate() {
        by_first_face.entry(row[0]).or_default().push(c);
    }

    let families: Vec<Vec<Vec<usize>>> = (0..cells.len())
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut chosen = vec![first];
            extend_sphere(n, &faces, &by_first_face, &mut chosen, &mut out);
            out
        })
        .collect();
    Ok(families.into_iter().flatten().map(|family| family.into_iter().map(|c| cells[c].clone()).collect()).collect())
}

fn extend_sphere(
    n: usize,
    faces: &[Vec<usize>],
    by_first_face: &HashMap<usize, Vec<usize>>,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let j = chosen.len();
    if j == n + 1 {
        out.push(chosen.clone());
        return;
    }
    let required = faces[chosen[0]][j - 1];
    let Some(candidates) = by_first_face.get(&required) else { return };
    for &c in candidates {
        let fits = (1..j).all(|i| faces[c][i] == faces[chosen[i]][j - 1]);
        if fits {
            chosen.push(c);
            extend_sphere(n, faces, by_first_face, chosen, out);
            chosen.pop();
        }
    }
}

/// `Δ[1]`: an `n`-simplex is `χ_k` for `-1 <= k <= n`, sending `i` to `0`
/// when `i <= k` and to `1` otherwise.
#[derive(Debug, Clone, Copy, Default)]
pub struct Interval;

/// The `n`-simplex `χ_k` of `Δ[1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Chi {
    pub n: usize,
    pub k: isize,
}

impl SimplicialSet for Interval {
    type Simplex = Chi;

    fn dim(&self, s: &Chi) -> usize {
        s.n
    }

    fn face(&self, s: &Chi, i: usize) -> Result<Chi, SimplicialError> {
        check_face_index(i, s.n)?;
        let k = if (i as isize) <= s.k { s.k - 1 } else { s.k };
        Ok(Chi { n: s.n - 1, k })
    }

    fn degeneracy(&self, s: &Chi, i: usize) -> Result<Chi, SimplicialError> {
        check_degeneracy_index(i, s.n)?;
        let k = if (i as isize) <= s.k { s.k + 1 } else { s.k };
        Ok(Chi { n: s.n + 1, k })
    }

    fn simplices(&self, n: usize) -> Result<Vec<Chi>, SimplicialError> {
        Ok((-1..=n as isize).map(|k| Chi { n, k }).collect())
    }
}
