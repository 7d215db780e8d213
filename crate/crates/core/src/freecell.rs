//! The two non-degenerate simplices `σ_n`, `σ'_n` of `N(Σ[1])` in each
//! dimension, their face relations, and the 2-skeleton of `σ_{2m}`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fincat::ordinal;
use crate::matset::{MatSet, MatSimplex};
use crate::simplicial::{restrict, SimplicialError};

/// `σ_n` (`primed = false`) or `σ'_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SigmaIndex {
    pub n: usize,
    pub primed: bool,
}

impl SigmaIndex {
    pub fn new(n: usize, primed: bool) -> Self {
        SigmaIndex { n, primed }
    }
}

impl fmt::Display for SigmaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ{}{}", if self.primed { "'" } else { "" }, self.n)
    }
}

/// `Mat([1])`.
pub fn free_cell() -> MatSet {
    MatSet::new(ordinal(1).expect("[1] is an ordinal"))
}

/// `σ_n` is the staircase with `0` exactly where `i < j`, `σ'_n` where
/// `i <= j`; `σ_0 = y` is the empty row and `σ'_0 = x` the empty column.
pub fn sigma(idx: SigmaIndex) -> MatSimplex {
    let n = idx.n;
    if n == 0 {
        return if idx.primed { MatSimplex::empty_column(0) } else { MatSimplex::empty_row(0) };
    }
    let m = n / 2;
    let (rows, cols) = match (n % 2, idx.primed) {
        (0, false) => (m, m + 1),
        (0, true) => (m + 1, m),
        _ => (m + 1, m + 1),
    };
    let entries: Vec<Vec<usize>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    let zero = if idx.primed { i <= j } else { i < j };
                    usize::from(!zero)
                })
                .collect()
        })
        .collect();
    free_cell().from_thin_entries(&entries).expect("staircases are monotone")
}

/// Right-hand side of a face relation: `σ` or `s_i σ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SigmaExpr {
    Sigma(SigmaIndex),
    Degenerate { i: usize, of: SigmaIndex },
}

impl fmt::Display for SigmaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaExpr::Sigma(s) => write!(f, "{s}"),
            SigmaExpr::Degenerate { i, of } => write!(f, "s{i} {of}"),
        }
    }
}

/// `d_face target = expected`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceRelation {
    pub target: SigmaIndex,
    pub face: usize,
    pub expected: SigmaExpr,
}

impl fmt::Display for FaceRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{} {} = {}", self.face, self.target, self.expected)
    }
}

/// The face relations of `σ_{2m}, σ'_{2m}, σ_{2m+1}, σ'_{2m+1}`, `m >= 1`.
pub fn face_relations(m: usize) -> Vec<FaceRelation> {
    assert!(m >= 1, "relations are stated for m >= 1");
    let s = |n: usize| SigmaIndex::new(n, false);
    let p = |n: usize| SigmaIndex::new(n, true);
    let id = SigmaExpr::Sigma;
    let deg = |i: usize, of: SigmaIndex| SigmaExpr::Degenerate { i, of };
    let mut out = Vec::new();
    let mut push = |target: SigmaIndex, face: usize, expected: SigmaExpr| {
        out.push(FaceRelation { target, face, expected });
    };

    let even = 2 * m;
    for i in 0..=even {
        let e = if i < m {
            deg(m - 1 + i, s(even - 2))
        } else if i == m {
            id(p(even - 1))
        } else if i < even {
            deg(i - m - 1, s(even - 2))
        } else {
            id(s(even - 1))
        };
        push(s(even), i, e);
    }
    for i in 0..=even {
        let e = if i == 0 {
            id(s(even - 1))
        } else if i < m {
            deg(m - 1 + i, p(even - 2))
        } else if i == m {
            id(p(even - 1))
        } else {
            deg(i - m - 1, p(even - 2))
        };
        push(p(even), i, e);
    }

    let odd = 2 * m + 1;
    for i in 0..=odd {
        let e = if i < m {
            deg(m + i, s(odd - 2))
        } else if i == m {
            id(s(even))
        } else if i == m + 1 {
            id(p(even))
        } else {
            deg(i - m - 2, s(odd - 2))
        };
        push(s(odd), i, e);
    }
    for i in 0..=odd {
        let e = if i == 0 {
            id(s(even))
        } else if i <= m {
            deg(m - 1 + i, p(odd - 2))
        } else if i < odd {
            deg(i - m - 1, p(odd - 2))
        } else {
            id(p(even))
        };
        push(p(odd), i, e);
    }
    out
}

pub fn evaluate(expr: SigmaExpr) -> Result<MatSimplex, SimplicialError> {
    match expr {
        SigmaExpr::Sigma(idx) => Ok(sigma(idx)),
        SigmaExpr::Degenerate { i, of } => free_cell().degeneracy(&sigma(of), i),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceRelationReport {
    pub checked: usize,
    /// Relations that do not hold, in table order.
    pub failures: Vec<String>,
}

impl FaceRelationReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks every face relation for dimensions `2m` and `2m + 1`.
pub fn verify_face_relations(m: usize) -> FaceRelationReport {
    let mat = free_cell();
    let mut report = FaceRelationReport::default();
    for rel in face_relations(m) {
        report.checked += 1;
        let lhs = mat.face(&sigma(rel.target), rel.face);
        let rhs = evaluate(rel.expected);
        match (lhs, rhs) {
            (Ok(l), Ok(r)) if l == r => {}
            (Ok(l), Ok(r)) => report.failures.push(format!("{rel}: got {l}, expected {r}")),
            (l, r) => report.failures.push(format!("{rel}: {l:?} / {r:?}")),
        }
    }
    report
}

/// A 2-simplex of `N(Σ[1])`, named as in the 2-skeleton formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SkeletonLabel {
    /// `s_0^2 σ'_0`
    S0S0SigmaPrime0,
    /// `s_0 σ'_1`
    S0SigmaPrime1,
    /// `σ'_2`
    SigmaPrime2,
    /// `s_0 σ_1`
    S0Sigma1,
    /// `s_1 σ'_1`
    S1SigmaPrime1,
    /// `σ_2`
    Sigma2,
    /// `s_1 σ_1`
    S1Sigma1,
    /// `s_0^2 σ_0`
    S0S0Sigma0,
}

impl SkeletonLabel {
    pub fn simplex(self) -> MatSimplex {
        let mat = free_cell();
        let d = |s: MatSimplex, i: usize| mat.degeneracy(&s, i).expect("index in range");
        let s = |n: usize| sigma(SigmaIndex::new(n, false));
        let p = |n: usize| sigma(SigmaIndex::new(n, true));
        match self {
            SkeletonLabel::S0S0SigmaPrime0 => d(d(p(0), 0), 0),
            SkeletonLabel::S0SigmaPrime1 => d(p(1), 0),
            SkeletonLabel::SigmaPrime2 => p(2),
            SkeletonLabel::S0Sigma1 => d(s(1), 0),
            SkeletonLabel::S1SigmaPrime1 => d(p(1), 1),
            SkeletonLabel::Sigma2 => s(2),
            SkeletonLabel::S1Sigma1 => d(s(1), 1),
            SkeletonLabel::S0S0Sigma0 => d(d(s(0), 0), 0),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreecellError {
    #[error("vertex triple ({i}, {j}, {k}) is not increasing inside [0, {n}]")]
    BadTriple { i: usize, j: usize, k: usize, n: usize },
    #[error("no case of the formula covers ({i}, {j}, {k}) for m = {m}")]
    Uncovered { m: usize, i: usize, j: usize, k: usize },
}

/// The cases of the 2-skeleton formula for `σ_{2m}` that apply to
/// `i < j < k`, in the order they are listed.
#[allow(clippy::int_plus_one)]
pub fn two_skeleton_cases(m: usize, i: usize, j: usize, k: usize) -> Vec<SkeletonLabel> {
    let (m, i, j, k) = (m as isize, i as isize, j as isize, k as isize);
    let cases = [
        (i < j && j < k && k <= m - 1, SkeletonLabel::S0S0SigmaPrime0),
        (i < j && j < k - m, SkeletonLabel::S0SigmaPrime1),
        (i < k - m && k - m <= j && j <= m - 1, SkeletonLabel::SigmaPrime2),
        (0 <= k - m && k - m <= i && i < j && j <= m - 1, SkeletonLabel::S0Sigma1),
        (i < j - m && j - m < k - m, SkeletonLabel::S1SigmaPrime1),
        (0 <= j - m && j - m <= i && i < k - m, SkeletonLabel::Sigma2),
        (0 <= j - m && j - m < k - m && k - m <= i && i <= m - 1, SkeletonLabel::S1Sigma1),
        (m - 1 < i && i < j && j < k, SkeletonLabel::S0S0Sigma0),
    ];
    cases.into_iter().filter(|c| c.0).map(|c| c.1).collect()
}

/// `σ_{2m}` restricted to the vertices `i < j < k`, by the 2-skeleton
/// formula.
pub fn two_skeleton_face(m: usize, i: usize, j: usize, k: usize) -> Result<SkeletonLabel, FreecellError> {
    if !(i < j && j < k && k <= 2 * m) {
        return Err(FreecellError::BadTriple { i, j, k, n: 2 * m });
    }
    two_skeleton_cases(m, i, j, k).first().copied().ok_or(FreecellError::Uncovered { m, i, j, k })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeletonReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

/// Compares the formula with direct restriction of `σ_{2m}` over every
/// triple, and checks that exactly one case applies each time.
pub fn verify_two_skeleton(m: usize) -> SkeletonReport {
    let mat = free_cell();
    let top = sigma(SigmaIndex::new(2 * m, false));
    let mut report = SkeletonReport::default();
    for k in 0..=2 * m {
        for j in 0..k {
            for i in 0..j {
                report.checked += 1;
                let cases = two_skeleton_cases(m, i, j, k);
                if cases.len() != 1 {
                    report.failures.push(format!("({i},{j},{k}): {} cases apply", cases.len()));
                    continue;
                }
                let direct = restrict(&mat, &top, &[i, j, k]).expect("vertices in range");
                if direct != cases[0].simplex() {
                    report.failures.push(format!("({i},{j},{k}): formula {:?}, restriction {direct}", cases[0]));
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_dimensional_sigmas() {
        let s1 = sigma(SigmaIndex::new(1, false));
        assert_eq!((s1.k(), s1.l(), s1.entries()), (0, 0, &[1][..]));
        assert_eq!(sigma(SigmaIndex::new(1, true)).entries(), &[0]);
        let s3 = sigma(SigmaIndex::new(3, false));
        assert_eq!(s3.to_string(), "0 1 / 1 1");
    }

    #[test]
    fn smallest_relations() {
        let rels = face_relations(1);
        let d = |primed: bool, n: usize, face: usize| {
            rels.iter().find(|r| r.target == SigmaIndex::new(n, primed) && r.face == face).unwrap().expected
        };
        assert_eq!(d(false, 2, 0), SigmaExpr::Degenerate { i: 0, of: SigmaIndex::new(0, false) });
        assert_eq!(d(false, 2, 1), SigmaExpr::Sigma(SigmaIndex::new(1, true)));
        assert_eq!(d(false, 2, 2), SigmaExpr::Sigma(SigmaIndex::new(1, false)));
        assert_eq!(d(false, 3, 1), SigmaExpr::Sigma(SigmaIndex::new(2, false)));
        assert_eq!(d(false, 3, 2), SigmaExpr::Sigma(SigmaIndex::new(2, true)));
        assert!(verify_face_relations(1).holds());
    }

    #[test]
    fn triple_validation() {
        assert!(two_skeleton_face(2, 1, 1, 3).is_err());
        assert!(two_skeleton_face(2, 0, 1, 5).is_err());
        assert_eq!(two_skeleton_face(3, 0, 1, 2).unwrap(), SkeletonLabel::S0S0SigmaPrime0);
    }
}
