//! Shuffles, constrained polygon triangulations and monotone paths inside
//! matrices.
//!
//! A `(k, l)` shuffle is a staircase through `[k] × [l]^op` from `(0, l)` to
//! `(k, 0)`; an `H` step lowers the column index and a `V` step moves down
//! one row. A triangulation of the `(n+1)`-gon on `0..=n` is constrained by
//! `k` when no triangle lies inside `{0..k}` or inside `{k+1..n}`.
//!
//! The correspondence peels the triangle on the edge `(lo, hi)` of the
//! remaining polygon `lo..=hi`: `(lo, hi-1, hi)` is an `H` step and removes
//! `hi`, `(lo, lo+1, hi)` is a `V` step and removes `lo`. Steps are emitted
//! in path order, so the first peeled triangle is the first step.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::duskin::{CellLabel, DuskinSimplex, MultiSuspension, Triangle};
use crate::fincat::{opposite, ordinal, product, FinCategory};
use crate::matset::{MatError, MatSet, MatSimplex};
use crate::simplicial::{restrict, SimplicialError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    H,
    V,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("invalid step {0:?}; use H or V")]
    BadStep(char),
    #[error("shuffle has {got} steps, expected {expected}")]
    ShuffleShape { expected: String, got: String },
    #[error("triangulation of the {n}+1-gon is malformed: {reason}")]
    BadTriangulation { n: usize, reason: String },
    #[error("triangle {0:?} lies on one side of the cut at k = {1}")]
    Constraint((usize, usize, usize), usize),
    #[error("cut k = {k} is out of range for n = {n}")]
    BadCut { n: usize, k: usize },
    #[error("path labels have the wrong length for shuffle {0}")]
    PathLength(Shuffle),
    #[error("matrix shape ({k}, {l}) does not match the shuffle")]
    MatrixShape { k: isize, l: isize },
    #[error("cell {0:?} is not covered by any path")]
    Incomplete(GridCell),
    #[error("paths disagree on cell {0:?}")]
    Inconsistent(GridCell),
    #[error("reconstructed matrix is invalid: {0}")]
    Invalid(#[from] MatError),
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
}

/// A vertex or unit arrow of the `(k+1) × (l+1)` grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GridCell {
    Entry { a: usize, b: usize },
    Vertical { a: usize, b: usize },
    Horizontal { a: usize, b: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shuffle {
    k: usize,
    l: usize,
    steps: Vec<Step>,
}

impl Shuffle {
    pub fn new(k: usize, l: usize, steps: Vec<Step>) -> Result<Self, PathError> {
        let v = steps.iter().filter(|&&s| s == Step::V).count();
        if v != k || steps.len() != k + l {
            return Err(PathError::ShuffleShape {
                expected: format!("{k} V and {l} H"),
                got: steps.iter().map(|s| format!("{s:?}")).collect(),
            });
        }
        Ok(Shuffle { k, l, steps })
    }

    /// Reads `k` and `l` off a step string such as `"VHH"`.
    pub fn from_steps(text: &str) -> Result<Self, PathError> {
        let steps = text
            .chars()
            .map(|c| match c {
                'H' | 'h' => Ok(Step::H),
                'V' | 'v' => Ok(Step::V),
                other => Err(PathError::BadStep(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let k = steps.iter().filter(|&&s| s == Step::V).count();
        let l = steps.len() - k;
        Shuffle::new(k, l, steps)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// The grid points `(α(i), β(i))`, `0 <= i <= k + l`.
    pub fn points(&self) -> Vec<(usize, usize)> {
        let mut p = (0, self.l);
        let mut out = vec![p];
        for s in &self.steps {
            match s {
                Step::H => p.1 -= 1,
                Step::V => p.0 += 1,
            }
            out.push(p);
        }
        out
    }

    /// `α(i) + l - β(i) = i` along the path.
    pub fn has_ordinate_summation(&self) -> bool {
        self.points().iter().enumerate().all(|(i, &(a, b))| a + self.l - b == i)
    }
}

impl fmt::Display for Shuffle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{s:?}")?;
        }
        Ok(())
    }
}

impl FromStr for Shuffle {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Shuffle::from_steps(s)
    }
}

impl Serialize for Shuffle {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Shuffle {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        Shuffle::from_steps(&text).map_err(serde::de::Error::custom)
    }
}

/// All `(k, l)` shuffles, ordered by step string with `H < V`.
pub fn enumerate_shuffles(k: usize, l: usize) -> Vec<Shuffle> {
    fn go(k: usize, l: usize, steps: &mut Vec<Step>, out: &mut Vec<Shuffle>) {
        if k == 0 && l == 0 {
            out.push(Shuffle { k: 0, l: 0, steps: steps.clone() });
            return;
        }
        if l > 0 {
            steps.push(Step::H);
            go(k, l - 1, steps, out);
            steps.pop();
        }
        if k > 0 {
            steps.push(Step::V);
            go(k - 1, l, steps, out);
            steps.pop();
        }
    }
    let mut out = Vec::new();
    go(k, l, &mut Vec::new(), &mut out);
    for s in &mut out {
        s.k = k;
        s.l = l;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triangulation {
    n: usize,
    triangles: BTreeSet<(usize, usize, usize)>,
}

impl Triangulation {
    /// Validates a triangulation of the `(n+1)`-gon with vertices `0..=n`.
    pub fn new(n: usize, triangles: impl IntoIterator<Item = (usize, usize, usize)>) -> Result<Self, PathError> {
        let t = Triangulation { n, triangles: triangles.into_iter().collect() };
        t.validate()?;
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn triangles(&self) -> &BTreeSet<(usize, usize, usize)> {
        &self.triangles
    }

    fn validate(&self) -> Result<(), PathError> {
        let n = self.n;
        let bad = |reason: String| Err(PathError::BadTriangulation { n, reason });
        if n < 1 {
            return bad("need at least an edge".into());
        }
        if self.triangles.len() != n - 1 {
            return bad(format!("{} triangles instead of {}", self.triangles.len(), n - 1));
        }
        let mut edges: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &(i, j, k) in &self.triangles {
            if !(i < j && j < k && k <= n) {
                return bad(format!("({i}, {j}, {k}) is not an increasing triple of vertices"));
            }
            for e in [(i, j), (j, k), (i, k)] {
                *edges.entry(e).or_default() += 1;
            }
        }
        for (&(a, b), &count) in &edges {
            let boundary = b == a + 1 || (a == 0 && b == n);
            let expected = if boundary { 1 } else { 2 };
            if count != expected {
                return bad(format!("edge ({a}, {b}) lies on {count} triangles"));
            }
        }
        let diagonals: Vec<_> = edges.keys().filter(|&&(a, b)| !(b == a + 1 || (a == 0 && b == n))).collect();
        for (x, &&(a, b)) in diagonals.iter().enumerate() {
            for &&(c, d) in &diagonals[x + 1..] {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    return bad(format!("diagonals ({a}, {b}) and ({c}, {d}) cross"));
                }
            }
        }
        Ok(())
    }

    /// No triangle inside `{0..k}` or inside `{k+1..n}`.
    pub fn satisfies_constraint(&self, k: usize) -> bool {
        self.violating_triangle(k).is_none()
    }

    fn violating_triangle(&self, k: usize) -> Option<(usize, usize, usize)> {
        self.triangles.iter().copied().find(|&(i, _, m)| m <= k || i > k)
    }
}

/// Triangulations of the polygon on `lo..=hi` by the triangle on `(lo, hi)`.
fn triangulate(lo: usize, hi: usize) -> Vec<Vec<(usize, usize, usize)>> {
    if hi - lo < 2 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in lo + 1..hi {
        let left = triangulate(lo, p);
        let right = triangulate(p, hi);
        for l in &left {
            for r in &right {
                let mut t = vec![(lo, p, hi)];
                t.extend_from_slice(l);
                t.extend_from_slice(r);
                out.push(t);
            }
        }
    }
    out
}

/// All triangulations of the `(n+1)`-gon. The 2-gon (`n = 1`) has one,
/// with no triangles.
pub fn enumerate_triangulations(n: usize) -> Vec<Triangulation> {
    match n {
        0 => return vec![],
        1 => return vec![Triangulation { n, triangles: BTreeSet::new() }],
        _ => {}
    }
    let mut out: Vec<Triangulation> = (1..n)
        .into_par_iter()
        .flat_map_iter(|p| {
            let left = triangulate(0, p);
            let right = triangulate(p, n);
            let mut part = Vec::with_capacity(left.len() * right.len());
            for l in &left {
                for r in &right {
                    let triangles = std::iter::once((0, p, n)).chain(l.iter().copied()).chain(r.iter().copied());
                    part.push(Triangulation { n, triangles: triangles.collect() });
                }
            }
            part
        })
        .collect();
    out.sort();
    out
}

pub fn filter_constrained(ts: &[Triangulation], k: usize) -> Vec<Triangulation> {
    ts.iter().filter(|t| t.satisfies_constraint(k)).cloned().collect()
}

fn check_cut(n: usize, k: usize) -> Result<(), PathError> {
    if k >= n {
        return Err(PathError::BadCut { n, k });
    }
    Ok(())
}

/// One peeling step on the polygon `lo..=hi` with cut `k`: the triangle
/// on `(lo, hi)` for a given step.
fn peel(lo: usize, hi: usize, step: Step) -> (usize, usize, usize) {
    match step {
        Step::H => (lo, hi - 1, hi),
        Step::V => (lo, lo + 1, hi),
    }
}

pub fn triangulation_to_shuffle(t: &Triangulation, k: usize) -> Result<Shuffle, PathError> {
    let n = t.n;
    check_cut(n, k)?;
    if let Some(bad) = t.violating_triangle(k) {
        return Err(PathError::Constraint(bad, k));
    }
    let (mut lo, mut hi) = (0, n);
    let mut steps = Vec::with_capacity(n - 1);
    while hi - lo >= 2 {
        let step = if hi - lo == 2 {
            // the last triangle: H while a row is left above the cut
            if lo == k {
                Step::H
            } else {
                Step::V
            }
        } else if t.triangles.contains(&peel(lo, hi, Step::H)) {
            Step::H
        } else if t.triangles.contains(&peel(lo, hi, Step::V)) {
            Step::V
        } else {
            return Err(PathError::BadTriangulation { n, reason: format!("no peelable triangle on ({lo}, {hi})") });
        };
        steps.push(step);
        match step {
            Step::H => hi -= 1,
            Step::V => lo += 1,
        }
    }
    Shuffle::new(k, n - 1 - k, steps)
}

pub fn shuffle_to_triangulation(s: &Shuffle, n: usize, k: usize) -> Result<Triangulation, PathError> {
    check_cut(n, k)?;
    if s.k != k || s.l != n - 1 - k {
        return Err(PathError::ShuffleShape { expected: format!("({k}, {})", n - 1 - k), got: s.to_string() });
    }
    let (mut lo, mut hi) = (0, n);
    let mut triangles = Vec::with_capacity(n - 1);
    for &step in &s.steps {
        triangles.push(peel(lo, hi, step));
        match step {
            Step::H => hi -= 1,
            Step::V => lo += 1,
        }
    }
    Triangulation::new(n, triangles)
}

/// Objects and arrows visited by a monotone path.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LabeledPath {
    pub objects: Vec<usize>,
    pub arrows: Vec<usize>,
}

/// The restriction of a proper matrix along a shuffle.
pub fn monotone_path(m: &MatSimplex, s: &Shuffle) -> Result<LabeledPath, PathError> {
    if !m.is_proper() || m.k() != s.k as isize || m.l() != s.l as isize {
        return Err(PathError::MatrixShape { k: m.k(), l: m.l() });
    }
    let points = s.points();
    let objects = points.iter().map(|&(a, b)| m.entry(a, b)).collect();
    let arrows = s
        .steps
        .iter()
        .zip(&points)
        .map(|(step, &(a, b))| match step {
            Step::H => m.horz_arrow(a, b),
            Step::V => m.vert_arrow(a, b),
        })
        .collect();
    Ok(LabeledPath { objects, arrows })
}

/// The unique matrix restricting to all given labeled paths.
pub fn reconstruct_matrix(
    d: &FinCategory,
    n: usize,
    k: usize,
    paths: &[(Shuffle, LabeledPath)],
) -> Result<MatSimplex, PathError> {
    if k >= n {
        return Err(PathError::BadCut { n, k });
    }
    let l = n - 1 - k;
    let (rows, cols) = (k + 1, l + 1);
    let mut entries: Vec<Option<usize>> = vec![None; rows * cols];
    let mut vert: Vec<Option<usize>> = vec![None; k * cols];
    let mut horz: Vec<Option<usize>> = vec![None; rows * l];
    fn put(slot: &mut Option<usize>, value: usize, cell: GridCell) -> Result<(), PathError> {
        match slot {
            Some(v) if *v != value => Err(PathError::Inconsistent(cell)),
            _ => {
                *slot = Some(value);
                Ok(())
            }
        }
    }
    for (s, path) in paths {
        if s.k != k || s.l != l {
            return Err(PathError::ShuffleShape { expected: format!("({k}, {l})"), got: s.to_string() });
        }
        if path.objects.len() != n || path.arrows.len() != n - 1 {
            return Err(PathError::PathLength(s.clone()));
        }
        let points = s.points();
        for (&(a, b), &x) in points.iter().zip(&path.objects) {
            put(&mut entries[a * cols + b], x, GridCell::Entry { a, b })?;
        }
        for ((step, &(a, b)), &f) in s.steps.iter().zip(&points).zip(&path.arrows) {
            match step {
                Step::H => put(&mut horz[a * l + b - 1], f, GridCell::Horizontal { a, b })?,
                Step::V => put(&mut vert[a * cols + b], f, GridCell::Vertical { a, b })?,
            }
        }
    }
    let unwrap = |v: Vec<Option<usize>>, cell: &dyn Fn(usize) -> GridCell| {
        v.iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| PathError::Incomplete(cell(i))))
            .collect::<Result<Vec<_>, _>>()
    };
    let entries = unwrap(entries, &|i| GridCell::Entry { a: i / cols, b: i % cols })?;
    let vert = unwrap(vert, &|i| GridCell::Vertical { a: i / cols, b: i % cols })?;
    let horz = unwrap(horz, &|i| GridCell::Horizontal { a: i / l.max(1), b: i % l.max(1) + 1 })?;
    let m = MatSimplex::from_parts(k as isize, l as isize, entries, vert, horz)?;
    MatSet::new(d.clone()).validate(&m)?;
    Ok(m)
}

/// Whether `t` can label a simplex of type `k = sigma.k()`: `σ` must be a
/// proper matrix of the same dimension and `t` constrained by `k`.
pub fn labeled_triangulation_check(sigma: &MatSimplex, t: &Triangulation) -> bool {
    sigma.is_proper() && sigma.dim() == t.n && t.satisfies_constraint(sigma.k() as usize)
}

/// Follows a constrained triangulation through a simplex of `N(ΣD)` of
/// type `k`, reading the edge labels (objects of `D`) and triangle labels
/// (arrows of `D`) in peeling order.
pub fn path_from_labeled_triangulation(
    ms: &MultiSuspension,
    sigma: &DuskinSimplex,
    t: &Triangulation,
    k: usize,
) -> Result<(Shuffle, LabeledPath), PathError> {
    let shuffle = triangulation_to_shuffle(t, k)?;
    let nerve = ms.nerve();
    let component = |label: &CellLabel| label.components[0];
    let edge = |s: usize, u: usize| -> Result<usize, PathError> {
        match restrict(nerve, sigma, &[s, u])? {
            DuskinSimplex::OneCell { cell } => Ok(component(ms.one_label(cell))),
            _ => unreachable!("edges are 1-cells"),
        }
    };
    let (mut lo, mut hi) = (0, t.n);
    let mut objects = vec![edge(lo, hi)?];
    let mut arrows = Vec::new();
    for &step in shuffle.steps() {
        let (i, j, m) = peel(lo, hi, step);
        match restrict(nerve, sigma, &[i, j, m])? {
            DuskinSimplex::Triangle(Triangle { theta, .. }) => arrows.push(component(ms.two_label(theta))),
            _ => unreachable!("2-faces are triangles"),
        }
        match step {
            Step::H => hi -= 1,
            Step::V => lo += 1,
        }
        objects.push(edge(lo, hi)?);
    }
    Ok((shuffle, LabeledPath { objects, arrows }))
}

/// The worked example: a type-1 simplex of dimension 4 over the poset
/// `P = [1] × [2]^op`, recovered from three labeled triangulations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppendixExample {
    pub triangulations: Vec<Vec<(usize, usize, usize)>>,
    pub shuffles: Vec<String>,
    /// Object names along each path.
    pub paths: Vec<Vec<String>>,
    /// The reconstructed matrix, rows top to bottom, columns in display
    /// order.
    pub matrix: Vec<Vec<String>>,
    pub expected: Vec<Vec<String>>,
}

impl AppendixExample {
    pub fn matches(&self) -> bool {
        self.matrix == self.expected
    }
}

/// `p_ab` for the object `(a, b)` of `[1] × [2]^op`.
pub fn poset_name(object: usize) -> String {
    format!("p{}{}", object / 3, object % 3)
}

/// Builds the 4-simplex from its 1-cells `p_{a, m-2}` (vertex `a ∈ {0,1}`
/// to vertex `m ∈ {2,3,4}`), runs the three displayed triangulations
/// through the correspondence and reassembles the matrix.
pub fn appendix_example() -> Result<AppendixExample, PathError> {
    let p = product(&ordinal(1).expect("ordinal"), &opposite(&ordinal(2).expect("ordinal")));
    let ms = MultiSuspension::suspension(p.clone());
    let (n, k) = (4, 1);
    let sigma = thin_simplex(&ms, n, k, |a, m| a * 3 + (m - 2))?;

    let triangulations = vec![
        vec![(0, 1, 4), (1, 3, 4), (1, 2, 3)],
        vec![(0, 3, 4), (0, 1, 3), (1, 2, 3)],
        vec![(0, 3, 4), (0, 2, 3), (0, 1, 2)],
    ];
    let mut shuffles = Vec::new();
    let mut paths = Vec::new();
    let mut labeled = Vec::new();
    for tri in &triangulations {
        let t = Triangulation::new(n, tri.iter().copied())?;
        let (s, path) = path_from_labeled_triangulation(&ms, &sigma, &t, k)?;
        shuffles.push(s.to_string());
        paths.push(path.objects.iter().map(|&o| poset_name(o)).collect());
        labeled.push((s, path));
    }
    let m = reconstruct_matrix(&p, n, k, &labeled)?;
    let display = |m: &MatSimplex| -> Vec<Vec<String>> {
        (0..m.rows()).map(|a| (0..m.cols()).rev().map(|b| poset_name(m.entry(a, b))).collect()).collect()
    };
    let expected = vec![
        vec!["p02".to_string(), "p01".to_string(), "p00".to_string()],
        vec!["p12".to_string(), "p11".to_string(), "p10".to_string()],
    ];
    Ok(AppendixExample { triangulations, shuffles, paths, matrix: display(&m), expected })
}

/// The simplex of `N(ΣD)`, `D` thin, of dimension `n` and type `k` whose
/// edge from vertex `a <= k` to vertex `m > k` is `edge(a, m)`; every
/// triangle carries the unique arrow of `D` it can carry.
fn thin_simplex(
    ms: &MultiSuspension,
    n: usize,
    k: usize,
    edge: impl Fn(usize, usize) -> usize,
) -> Result<DuskinSimplex, PathError> {
    let c = ms.category();
    let one = |s: usize, t: usize| {
        let (x, y) = (usize::from(s > k), usize::from(t > k));
        let components = if x < y { vec![edge(s, t)] } else { vec![] };
        ms.one_cell(&CellLabel { from: x, to: y, components }).expect("edge labels are objects")
    };
    let tri =
        |s: usize, t: usize, u: usize| -> Result<Triangle, PathError> {
            let (a, b, cc) = (one(s, t), one(t, u), one(s, u));
            let target = c.compose_one(b, a).expect("edges compose");
            let theta =
                c.two_cells_from(cc).iter().copied().find(|&th| c.two_tgt(th) == target).ok_or_else(|| {
                    PathError::BadTriangulation { n, reason: format!("no arrow for ({s}, {t}, {u})") }
                })?;
            Ok(Triangle { a, b, c: cc, theta })
        };
    let tet = |v: [usize; 4]| -> Result<[Triangle; 4], PathError> {
        let mut faces = Vec::with_capacity(4);
        for j in 0..4 {
            let rest: Vec<usize> = (0..4).filter(|&x| x != j).map(|x| v[x]).collect();
            faces.push(tri(rest[0], rest[1], rest[2])?);
        }
        Ok(faces.try_into().expect("four faces"))
    };
    assert_eq!(n, 4, "the worked example lives in dimension 4");
    let mut tets = Vec::with_capacity(5);
    for j in 0..5 {
        let rest: Vec<usize> = (0..5).filter(|&x| x != j).collect();
        tets.push(tet([rest[0], rest[1], rest[2], rest[3]])?);
    }
    let sigma = DuskinSimplex::FourSimplex { faces: tets.try_into().expect("five faces") };
    ms.nerve().validate(&sigma).map_err(|e| PathError::BadTriangulation { n, reason: e.to_string() })?;
    Ok(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_shuffles() {
        assert_eq!(enumerate_shuffles(0, 3).len(), 1);
        let s: Vec<String> = enumerate_shuffles(1, 2).iter().map(ToString::to_string).collect();
        assert_eq!(s, ["HHV", "HVH", "VHH"]);
        assert!(enumerate_shuffles(2, 3).iter().all(Shuffle::has_ordinate_summation));
    }

    #[test]
    fn triangle_is_the_base_case() {
        let ts = enumerate_triangulations(2);
        assert_eq!(ts.len(), 1);
        assert!(ts[0].satisfies_constraint(0) && ts[0].satisfies_constraint(1));
        assert_eq!(triangulation_to_shuffle(&ts[0], 0).unwrap().to_string(), "H");
        assert_eq!(triangulation_to_shuffle(&ts[0], 1).unwrap().to_string(), "V");
    }

    #[test]
    fn peeling_reindexes_the_polygon() {
        // After an H step the polygon is 0..=n-1, after a V step 1..=n.
        let s = Shuffle::from_steps("HV").unwrap();
        let t = shuffle_to_triangulation(&s, 3, 1).unwrap();
        assert_eq!(t.triangles().iter().copied().collect::<Vec<_>>(), [(0, 1, 2), (0, 2, 3)]);
        let s = Shuffle::from_steps("VH").unwrap();
        let t = shuffle_to_triangulation(&s, 3, 1).unwrap();
        assert_eq!(t.triangles().iter().copied().collect::<Vec<_>>(), [(0, 1, 3), (1, 2, 3)]);
    }

    #[test]
    fn malformed_triangulations() {
        assert!(Triangulation::new(4, [(0, 1, 2), (0, 2, 3)]).is_err());
        assert!(Triangulation::new(3, [(0, 1, 2), (1, 2, 3)]).is_err());
        assert!(Triangulation::new(3, [(0, 1, 3), (0, 1, 2)]).is_err());
    }

    #[test]
    fn shuffle_parsing() {
        assert!(matches!(Shuffle::from_steps("HXV"), Err(PathError::BadStep('X'))));
        let s: Shuffle = serde_json::from_str("\"VHH\"").unwrap();
        assert_eq!((s.k(), s.l()), (1, 2));
    }
}
