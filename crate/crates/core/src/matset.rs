//! The simplicial set `Mat(D)` of `D`-valued matrices.
//!
//! An `n`-simplex is a triple `(k, l, σ)` with `k, l >= -1`, `k + l = n - 1`
//! and `σ: [k] × [l]^op -> D`. When `k = -1` (resp. `l = -1`) the matrix is
//! the empty row (resp. empty column) of length `n`.
//!
//! Matrices are stored by generators: the object `σ(a, b)` in every cell,
//! the vertical arrows `σ(a, b) -> σ(a + 1, b)` and the horizontal arrows
//! `σ(a, b) -> σ(a, b - 1)` (the second factor is `[l]^op`, so arrows run
//! from larger to smaller column index). Faces delete a row or a column and
//! degeneracies double one; both are precomposition with a monotone map.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fincat::{enumerate_functors, opposite, ordinal, product, FinCategory, Functor};
use crate::simplicial::{
    check_boundary, check_degeneracy_index, check_face_index, BoundaryError, Chi, SimplicialError, SimplicialSet,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatError {
    #[error("shape ({k}, {l}) is invalid: need k, l >= -1")]
    Shape { k: isize, l: isize },
    #[error("expected {expected} {what}, got {got}")]
    Length { what: &'static str, expected: usize, got: usize },
    #[error("entry ({a}, {b}) is not an object of the target")]
    EntryOutOfRange { a: usize, b: usize },
    #[error("{kind} arrow at ({a}, {b}) does not connect the neighbouring entries")]
    ArrowEndpoints { kind: &'static str, a: usize, b: usize },
    #[error("square with top-right corner ({a}, {b}) does not commute")]
    Square { a: usize, b: usize },
    #[error("no arrow between entries {from} and {to}")]
    NoArrow { from: usize, to: usize },
    #[error("arrow between entries {from} and {to} is not unique")]
    AmbiguousArrow { from: usize, to: usize },
}

/// A simplex of `Mat(D)`. See the module docs for the storage layout.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatSimplex {
    k: isize,
    l: isize,
    /// `entries[a * (l + 1) + b] = σ(a, b)`.
    entries: Vec<usize>,
    /// `vert[a * (l + 1) + b]: σ(a, b) -> σ(a + 1, b)`.
    vert: Vec<usize>,
    /// `horz[a * l + (b - 1)]: σ(a, b) -> σ(a, b - 1)`.
    horz: Vec<usize>,
}

/// The number of rows minus one; `-1` for the empty row, `n` for the empty
/// column. Corresponds to `χ_k` in `Δ[1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimplexType(pub isize);

impl SimplexType {
    pub fn chi(self, n: usize) -> Chi {
        Chi { n, k: self.0 }
    }
}

impl MatSimplex {
    pub fn empty_row(n: usize) -> Self {
        MatSimplex { k: -1, l: n as isize, entries: vec![], vert: vec![], horz: vec![] }
    }

    pub fn empty_column(n: usize) -> Self {
        MatSimplex { k: n as isize, l: -1, entries: vec![], vert: vec![], horz: vec![] }
    }

    /// Raw constructor; pair with [`MatSet::validate`].
    pub fn from_parts(
        k: isize,
        l: isize,
        entries: Vec<usize>,
        vert: Vec<usize>,
        horz: Vec<usize>,
    ) -> Result<Self, MatError> {
        if k < -1 || l < -1 {
            return Err(MatError::Shape { k, l });
        }
        let s = MatSimplex { k, l, entries, vert, horz };
        let (ne, nv, nh) = s.expected_lengths();
        for (what, expected, got) in [
            ("entries", ne, s.entries.len()),
            ("vertical arrows", nv, s.vert.len()),
            ("horizontal arrows", nh, s.horz.len()),
        ] {
            if expected != got {
                return Err(MatError::Length { what, expected, got });
            }
        }
        Ok(s)
    }

    fn expected_lengths(&self) -> (usize, usize, usize) {
        if self.k < 0 || self.l < 0 {
            return (0, 0, 0);
        }
        let (r, c) = (self.k as usize + 1, self.l as usize + 1);
        (r * c, (r - 1) * c, r * (c - 1))
    }

    pub fn k(&self) -> isize {
        self.k
    }

    pub fn l(&self) -> isize {
        self.l
    }

    pub fn dim(&self) -> usize {
        (self.k + self.l + 1) as usize
    }

    pub fn type_of(&self) -> SimplexType {
        SimplexType(self.k)
    }

    pub fn is_empty_row(&self) -> bool {
        self.k == -1
    }

    pub fn is_empty_column(&self) -> bool {
        self.l == -1
    }

    /// Both `k` and `l` are non-negative.
    pub fn is_proper(&self) -> bool {
        self.k >= 0 && self.l >= 0
    }

    /// Number of rows, `k + 1`.
    pub fn rows(&self) -> usize {
        (self.k + 1) as usize
    }

    /// Number of columns, `l + 1`.
    pub fn cols(&self) -> usize {
        (self.l + 1) as usize
    }

    pub fn entry(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.cols() + b]
    }

    /// `σ(a, b) -> σ(a + 1, b)`.
    pub fn vert_arrow(&self, a: usize, b: usize) -> usize {
        self.vert[a * self.cols() + b]
    }

    /// `σ(a, b) -> σ(a, b - 1)`, for `b >= 1`.
    pub fn horz_arrow(&self, a: usize, b: usize) -> usize {
        self.horz[a * self.l as usize + (b - 1)]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn vert_arrows(&self) -> &[usize] {
        &self.vert
    }

    pub fn horz_arrows(&self) -> &[usize] {
        &self.horz
    }
}

impl fmt::Display for MatSimplex {
    /// Rows top to bottom, columns in display order `l, l-1, ..., 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty_row() {
            return write!(f, "(empty row of length {})", self.dim());
        }
        if self.is_empty_column() {
            return write!(f, "(empty column of length {})", self.dim());
        }
        for a in 0..self.rows() {
            if a > 0 {
                write!(f, " / ")?;
            }
            let row: Vec<String> = (0..self.cols()).rev().map(|b| self.entry(a, b).to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// `[k] × [l]^op`, the domain of a matrix.
pub fn grid_domain(k: isize, l: isize) -> FinCategory {
    let rows = ordinal(k).expect("k >= -1");
    let cols = ordinal(l).expect("l >= -1");
    product(&rows, &opposite(&cols))
}

/// The simplicial set `Mat(D)`.
#[derive(Clone, Debug)]
pub struct MatSet {
    d: FinCategory,
}

impl MatSet {
    pub fn new(d: FinCategory) -> Self {
        MatSet { d }
    }

    pub fn category(&self) -> &FinCategory {
        &self.d
    }

    /// Checks arrow endpoints and that every unit square commutes.
    pub fn validate(&self, s: &MatSimplex) -> Result<(), MatError> {
        let s = MatSimplex::from_parts(s.k, s.l, s.entries.clone(), s.vert.clone(), s.horz.clone())?;
        if !s.is_proper() {
            return Ok(());
        }
        let d = &self.d;
        for a in 0..s.rows() {
            for b in 0..s.cols() {
                if s.entry(a, b) >= d.num_objects() {
                    return Err(MatError::EntryOutOfRange { a, b });
                }
            }
        }
        for a in 0..s.rows() {
            for b in 0..s.cols() {
                if a + 1 < s.rows() {
                    let v = s.vert_arrow(a, b);
                    if v >= d.num_morphisms() || d.src(v) != s.entry(a, b) || d.tgt(v) != s.entry(a + 1, b) {
                        return Err(MatError::ArrowEndpoints { kind: "vertical", a, b });
                    }
                }
                if b >= 1 {
                    let h = s.horz_arrow(a, b);
                    if h >= d.num_morphisms() || d.src(h) != s.entry(a, b) || d.tgt(h) != s.entry(a, b - 1) {
                        return Err(MatError::ArrowEndpoints { kind: "horizontal", a, b });
                    }
                }
            }
        }
        for a in 0..s.rows().saturating_sub(1) {
            for b in 1..s.cols() {
                let right_down = d.compose(s.vert_arrow(a, b - 1), s.horz_arrow(a, b));
                let down_right = d.compose(s.horz_arrow(a + 1, b), s.vert_arrow(a, b));
                if right_down != down_right {
                    return Err(MatError::Square { a, b });
                }
            }
        }
        Ok(())
    }

    /// Builds a matrix over a thin category from its entries alone
    /// (`entries[a][b]`, `b` the `[l]^op` index).
    #[allow(clippy::needless_range_loop)]
    pub fn from_thin_entries(&self, entries: &[Vec<usize>]) -> Result<MatSimplex, MatError> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 || entries.iter().any(|r| r.len() != cols) {
            return Err(MatError::Shape { k: rows as isize - 1, l: cols as isize - 1 });
        }
        let unique = |from: usize, to: usize| -> Result<usize, MatError> {
            if from >= self.d.num_objects() || to >= self.d.num_objects() {
                return Err(MatError::NoArrow { from, to });
            }
            match self.d.hom(from, to) {
                [] => Err(MatError::NoArrow { from, to }),
                [f] => Ok(*f),
                _ => Err(MatError::AmbiguousArrow { from, to }),
            }
        };
        let mut vert = Vec::new();
        for a in 0..rows - 1 {
            for b in 0..cols {
                vert.push(unique(entries[a][b], entries[a + 1][b])?);
            }
        }
        let mut horz = Vec::new();
        for row in entries {
            for b in 1..cols {
                horz.push(unique(row[b], row[b - 1])?);
            }
        }
        let flat = entries.iter().flatten().copied().collect();
        let s = MatSimplex::from_parts(rows as isize - 1, cols as isize - 1, flat, vert, horz)?;
        self.validate(&s)?;
        Ok(s)
    }

    /// Composite of the vertical arrows from row `from` down to row `to`.
    fn vertical_composite(&self, s: &MatSimplex, from: usize, to: usize, b: usize) -> usize {
        (from..to).fold(self.d.identity(s.entry(from, b)), |acc, a| {
            self.d.compose(s.vert_arrow(a, b), acc).expect("matrix arrows compose")
        })
    }

    /// Composite of the horizontal arrows in row `a` from column `from` to
    /// column `to <= from`.
    fn horizontal_composite(&self, s: &MatSimplex, a: usize, from: usize, to: usize) -> usize {
        (to + 1..=from).rev().fold(self.d.identity(s.entry(a, from)), |acc, b| {
            self.d.compose(s.horz_arrow(a, b), acc).expect("matrix arrows compose")
        })
    }

    /// `σ((a, b) -> (a2, b2))` for `a <= a2`, `b >= b2`.
    pub fn arrow_between(&self, s: &MatSimplex, (a, b): (usize, usize), (a2, b2): (usize, usize)) -> Option<usize> {
        if !s.is_proper() || a > a2 || b < b2 || a2 >= s.rows() || b >= s.cols() {
            return None;
        }
        let down = self.vertical_composite(s, a, a2, b);
        let across = self.horizontal_composite(s, a2, b, b2);
        self.d.compose(across, down)
    }

    /// Precomposition with monotone maps `rows: [k2] -> [k]`,
    /// `cols: [l2] -> [l]`.
    fn reindex(&self, s: &MatSimplex, k2: isize, l2: isize, rows: &[usize], cols: &[usize]) -> MatSimplex {
        if k2 == -1 {
            return MatSimplex::empty_row(l2 as usize);
        }
        if l2 == -1 {
            return MatSimplex::empty_column(k2 as usize);
        }
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        let mut vert = Vec::with_capacity(rows.len().saturating_sub(1) * cols.len());
        let mut horz = Vec::with_capacity(rows.len() * cols.len().saturating_sub(1));
        for &a in rows {
            for &b in cols {
                entries.push(s.entry(a, b));
            }
        }
        for w in rows.windows(2) {
            for &b in cols {
                vert.push(self.vertical_composite(s, w[0], w[1], b));
            }
        }
        for &a in rows {
            for w in cols.windows(2) {
                horz.push(self.horizontal_composite(s, a, w[1], w[0]));
            }
        }
        MatSimplex { k: k2, l: l2, entries, vert, horz }
    }

    /// Deletes row `i` (for `i <= k`) or column `i - (k + 1)`.
    pub fn face(&self, s: &MatSimplex, i: usize) -> Result<MatSimplex, SimplicialError> {
        check_face_index(i, s.dim())?;
        let skip = |len: usize, gap: usize| (0..len).filter(|&x| x != gap).collect::<Vec<_>>();
        if (i as isize) <= s.k {
            let all_cols: Vec<usize> = (0..s.cols()).collect();
            Ok(self.reindex(s, s.k - 1, s.l, &skip(s.rows(), i), &all_cols))
        } else {
            let j = i - s.rows();
            let all_rows: Vec<usize> = (0..s.rows()).collect();
            Ok(self.reindex(s, s.k, s.l - 1, &all_rows, &skip(s.cols(), j)))
        }
    }

    /// Doubles row `i` (for `i <= k`) or column `i - (k + 1)`.
    pub fn degeneracy(&self, s: &MatSimplex, i: usize) -> Result<MatSimplex, SimplicialError> {
        check_degeneracy_index(i, s.dim())?;
        let double = |len: usize, at: usize| (0..=len).map(|x| if x <= at { x } else { x - 1 }).collect::<Vec<_>>();
        if (i as isize) <= s.k {
            let all_cols: Vec<usize> = (0..s.cols()).collect();
            Ok(self.reindex(s, s.k + 1, s.l, &double(s.rows(), i), &all_cols))
        } else {
            let j = i - s.rows();
            let all_rows: Vec<usize> = (0..s.rows()).collect();
            Ok(self.reindex(s, s.k, s.l + 1, &all_rows, &double(s.cols(), j)))
        }
    }

    pub fn from_functor(&self, k: isize, l: isize, domain: &FinCategory, functor: &Functor) -> MatSimplex {
        if k == -1 {
            return MatSimplex::empty_row(l as usize);
        }
        if l == -1 {
            return MatSimplex::empty_column(k as usize);
        }
        let cols = (l + 1) as usize;
        let rows = (k + 1) as usize;
        let at = |a: usize, b: usize| a * cols + b;
        let generator = |from: usize, to: usize| functor.mor_map[domain.hom(from, to)[0]];
        let mut vert = Vec::new();
        for a in 0..rows - 1 {
            for b in 0..cols {
                vert.push(generator(at(a, b), at(a + 1, b)));
            }
        }
        let mut horz = Vec::new();
        for a in 0..rows {
            for b in 1..cols {
                horz.push(generator(at(a, b), at(a, b - 1)));
            }
        }
        MatSimplex { k, l, entries: functor.obj_map.clone(), vert, horz }
    }

    /// The functor `[k] × [l]^op -> D` on the domain [`grid_domain`].
    pub fn to_functor(&self, s: &MatSimplex) -> (FinCategory, Functor) {
        let domain = grid_domain(s.k, s.l);
        if !s.is_proper() {
            return (domain, Functor { obj_map: vec![], mor_map: vec![] });
        }
        let cols = s.cols();
        let mor_map = (0..domain.num_morphisms())
            .map(|m| {
                let (from, to) = (domain.src(m), domain.tgt(m));
                self.arrow_between(s, (from / cols, from % cols), (to / cols, to % cols))
                    .expect("grid morphisms go down and left")
            })
            .collect();
        (domain, Functor { obj_map: s.entries.clone(), mor_map })
    }

    /// The `n`-simplices of type `k`.
    pub fn simplices_of_type(&self, n: usize, k: isize) -> Vec<MatSimplex> {
        let n_signed = n as isize;
        if k < -1 || k > n_signed {
            return vec![];
        }
        if k == -1 {
            return vec![MatSimplex::empty_row(n)];
        }
        if k == n_signed {
            return vec![MatSimplex::empty_column(n)];
        }
        let l = n_signed - 1 - k;
        let domain = grid_domain(k, l);
        enumerate_functors(&domain, &self.d).iter().map(|f| self.from_functor(k, l, &domain, f)).collect()
    }

    /// `Mat_n(D)`: the empty row, then matrices of type `0, ..., n-1` in
    /// functor order, then the empty column.
    pub fn simplices(&self, n: usize) -> Vec<MatSimplex> {
        (-1..=n as isize).flat_map(|k| self.simplices_of_type(n, k)).collect()
    }

    /// No two adjacent rows and no two adjacent columns coincide. Rows
    /// coincide when their entries and horizontal arrows agree and the
    /// vertical arrows between them are identities; columns likewise.
    pub fn is_nondegenerate(&self, s: &MatSimplex) -> bool {
        if !s.is_proper() {
            return s.dim() == 0;
        }
        let d = &self.d;
        let rows_coincide = |a: usize| {
            (0..s.cols()).all(|b| s.entry(a, b) == s.entry(a + 1, b) && d.is_identity(s.vert_arrow(a, b)))
                && (1..s.cols()).all(|b| s.horz_arrow(a, b) == s.horz_arrow(a + 1, b))
        };
        let cols_coincide = |b: usize| {
            (0..s.rows()).all(|a| s.entry(a, b) == s.entry(a, b - 1) && d.is_identity(s.horz_arrow(a, b)))
                && (0..s.rows() - 1).all(|a| s.vert_arrow(a, b) == s.vert_arrow(a, b - 1))
        };
        !(0..s.rows() - 1).any(rows_coincide) && !(1..s.cols()).any(cols_coincide)
    }

    /// The unique `n`-simplex (`n >= 4`) with the given boundary.
    ///
    /// The type is read off the faces, then every entry and generating
    /// arrow is copied from a face that does not delete its row or column.
    /// All admissible witness faces are compared, and the result is checked
    /// for functoriality and for having exactly the given boundary.
    pub fn coskeletal_fill(&self, boundary: &[MatSimplex]) -> Result<MatSimplex, FillError> {
        if boundary.len() < 5 {
            return Err(FillError::DimensionTooSmall(boundary.len().saturating_sub(1)));
        }
        let n = boundary.len() - 1;
        for (index, face) in boundary.iter().enumerate() {
            self.validate(face).map_err(|source| FillError::InvalidFace { index, source })?;
        }
        check_boundary(self, boundary)?;

        let types: Vec<isize> = boundary.iter().map(|f| f.k).collect();
        let k = (-1..=n as isize)
            .find(|&k| types.iter().enumerate().all(|(i, &t)| t == if (i as isize) <= k { k - 1 } else { k }))
            .ok_or_else(|| FillError::NoType(types.clone()))?;
        if k == -1 {
            return Ok(MatSimplex::empty_row(n));
        }
        if k == n as isize {
            return Ok(MatSimplex::empty_column(n));
        }
        let l = n as isize - 1 - k;
        let (rows, cols) = ((k + 1) as usize, (l + 1) as usize);

        // Position of row `a` (resp. column `b`) in the face deleting row
        // (resp. column) `gap`.
        let shift = |x: usize, gap: usize| if x > gap { x - 1 } else { x };

        let mut entries = Vec::with_capacity(rows * cols);
        for a in 0..rows {
            for b in 0..cols {
                let witnesses = (0..rows)
                    .filter(|&i| i != a)
                    .map(|i| boundary[i].entry(shift(a, i), b))
                    .chain((0..cols).filter(|&j| j != b).map(|j| boundary[rows + j].entry(a, shift(b, j))));
                entries.push(agree(witnesses, Cell::Entry { a, b })?);
            }
        }
        let mut vert = Vec::with_capacity((rows - 1) * cols);
        for a in 0..rows - 1 {
            for b in 0..cols {
                let witnesses = (0..rows)
                    .filter(|&i| i != a && i != a + 1)
                    .map(|i| boundary[i].vert_arrow(shift(a, i), b))
                    .chain((0..cols).filter(|&j| j != b).map(|j| boundary[rows + j].vert_arrow(a, shift(b, j))));
                vert.push(agree(witnesses, Cell::Vertical { a, b })?);
            }
        }
        let mut horz = Vec::with_capacity(rows * (cols - 1));
        for a in 0..rows {
            for b in 1..cols {
                let witnesses = (0..rows).filter(|&i| i != a).map(|i| boundary[i].horz_arrow(shift(a, i), b)).chain(
                    (0..cols).filter(|&j| j != b && j != b - 1).map(|j| boundary[rows + j].horz_arrow(a, shift(b, j))),
                );
                horz.push(agree(witnesses, Cell::Horizontal { a, b })?);
            }
        }
        let filler = MatSimplex { k, l, entries, vert, horz };
        self.validate(&filler).map_err(FillError::NotFunctorial)?;
        for (i, expected) in boundary.iter().enumerate() {
            if &self.face(&filler, i)? != expected {
                return Err(FillError::FaceMismatch(i));
            }
        }
        Ok(filler)
    }
}

/// A cell of the filler being reconstructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    Entry { a: usize, b: usize },
    Vertical { a: usize, b: usize },
    Horizontal { a: usize, b: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FillError {
    #[error("fillers are built for n >= 4, got n = {0}")]
    DimensionTooSmall(usize),
    #[error("face {index} is not a valid matrix: {source}")]
    InvalidFace { index: usize, source: MatError },
    #[error("incompatible boundary: {0}")]
    Incompatible(#[from] BoundaryError),
    #[error("face types {0:?} match no χ_k")]
    NoType(Vec<isize>),
    #[error("no face determines {0:?}")]
    NoWitness(Cell),
    #[error("witness faces disagree on {0:?}")]
    WitnessDisagreement(Cell),
    #[error("reconstructed matrix is not a functor: {0}")]
    NotFunctorial(MatError),
    #[error("face {0} of the reconstructed matrix differs from the boundary")]
    FaceMismatch(usize),
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
}

fn agree(mut witnesses: impl Iterator<Item = usize>, cell: Cell) -> Result<usize, FillError> {
    let first = witnesses.next().ok_or(FillError::NoWitness(cell))?;
    if witnesses.all(|w| w == first) {
        Ok(first)
    } else {
        Err(FillError::WitnessDisagreement(cell))
    }
}

impl SimplicialSet for MatSet {
    type Simplex = MatSimplex;

    fn dim(&self, s: &MatSimplex) -> usize {
        s.dim()
    }

    fn face(&self, s: &MatSimplex, i: usize) -> Result<MatSimplex, SimplicialError> {
        MatSet::face(self, s, i)
    }

    fn degeneracy(&self, s: &MatSimplex, i: usize) -> Result<MatSimplex, SimplicialError> {
        MatSet::degeneracy(self, s, i)
    }

    fn simplices(&self, n: usize) -> Result<Vec<MatSimplex>, SimplicialError> {
        Ok(MatSet::simplices(self, n))
    }
}

// JSON: {k, l, entries, vert_arrows, horz_arrows}; the empty row is
// {"k": -1, "n": n} and the empty column {"l": -1, "n": n}.

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum MatRecord {
    Matrix { k: isize, l: isize, entries: Vec<usize>, vert_arrows: Vec<usize>, horz_arrows: Vec<usize> },
    EmptyRow { k: isize, n: usize },
    EmptyColumn { l: isize, n: usize },
}

impl Serialize for MatSimplex {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let record = if self.is_empty_row() {
            MatRecord::EmptyRow { k: -1, n: self.dim() }
        } else if self.is_empty_column() {
            MatRecord::EmptyColumn { l: -1, n: self.dim() }
        } else {
            MatRecord::Matrix {
                k: self.k,
                l: self.l,
                entries: self.entries.clone(),
                vert_arrows: self.vert.clone(),
                horz_arrows: self.horz.clone(),
            }
        };
        record.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MatSimplex {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        match MatRecord::deserialize(deserializer)? {
            MatRecord::Matrix { k, l, entries, vert_arrows, horz_arrows } => {
                if k < 0 || l < 0 {
                    return Err(D::Error::custom("empty rows and columns use the {k: -1, n} / {l: -1, n} form"));
                }
                MatSimplex::from_parts(k, l, entries, vert_arrows, horz_arrows).map_err(D::Error::custom)
            }
            MatRecord::EmptyRow { k: -1, n } => Ok(MatSimplex::empty_row(n)),
            MatRecord::EmptyColumn { l: -1, n } => Ok(MatSimplex::empty_column(n)),
            _ => Err(D::Error::custom("empty row/column must carry k = -1 or l = -1")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{boundary, check_identities, degeneracy_witness};

    fn mat(n: isize) -> MatSet {
        MatSet::new(ordinal(n).unwrap())
    }

    #[test]
    fn counts_over_small_ordinals() {
        let point = mat(0);
        for n in 0..=10 {
            assert_eq!(point.simplices(n).len(), n + 2);
        }
        let arrow = mat(1);
        assert_eq!(arrow.simplices(2).len(), 8);
        // 2 empty + 4 + 6 + 4 matrices of shapes (0,2), (1,1), (2,0).
        assert_eq!(arrow.simplices(3).len(), 16);
        assert_eq!(arrow.simplices(4).len(), 32);
    }

    #[test]
    fn empty_row_and_column_faces() {
        let m = mat(1);
        for i in 0..=4 {
            assert_eq!(m.face(&MatSimplex::empty_column(4), i).unwrap(), MatSimplex::empty_column(3));
            assert_eq!(m.face(&MatSimplex::empty_row(4), i).unwrap(), MatSimplex::empty_row(3));
        }
        assert_eq!(m.degeneracy(&MatSimplex::empty_row(0), 0).unwrap(), MatSimplex::empty_row(1));
        assert_ne!(MatSimplex::empty_row(3), MatSimplex::empty_column(3));
        assert!(m.face(&MatSimplex::empty_row(0), 0).is_err());
        assert!(m.face(&MatSimplex::empty_row(2), 3).is_err());
        assert!(m.degeneracy(&MatSimplex::empty_row(2), 3).is_err());
    }

    #[test]
    fn square_face_keeps_bottom_row() {
        // Over [1]: rows (0 1 / 1 1) in display order, i.e. σ(0,1)=0,
        // σ(0,0)=1, σ(1,1)=1, σ(1,0)=1.
        let m = mat(1);
        let sq = m.from_thin_entries(&[vec![1, 0], vec![1, 1]]).unwrap();
        let bottom = m.face(&sq, 0).unwrap();
        assert_eq!((bottom.k(), bottom.l()), (0, 1));
        assert_eq!(bottom.entries(), &[1, 1]);
        let top = m.face(&sq, 1).unwrap();
        assert_eq!(top.entries(), &[1, 0]);
        // deleting column 0 leaves the left column
        let left = m.face(&sq, 2).unwrap();
        assert_eq!((left.k(), left.l()), (1, 0));
        assert_eq!(left.entries(), &[0, 1]);
    }

    #[test]
    fn doubling_a_single_entry() {
        let m = mat(1);
        let a = m.from_thin_entries(&[vec![1]]).unwrap();
        let doubled = m.degeneracy(&a, 0).unwrap();
        assert_eq!((doubled.k(), doubled.l()), (1, 0));
        assert_eq!(doubled.entries(), &[1, 1]);
        assert!(m.category().is_identity(doubled.vert_arrow(0, 0)));
        assert!(!m.is_nondegenerate(&doubled));
    }

    #[test]
    fn simplicial_identities_small() {
        check_identities(&mat(1), 5).unwrap();
        check_identities(&mat(2), 4).unwrap();
    }

    #[test]
    fn nondegeneracy_matches_retraction() {
        for m in [mat(0), mat(1), mat(2)] {
            for n in 0..=5 {
                for s in m.simplices(n) {
                    let witness = degeneracy_witness(&m, &s).unwrap();
                    assert_eq!(m.is_nondegenerate(&s), witness.is_none(), "{s:?}");
                }
            }
        }
    }

    #[test]
    fn types_follow_interval_faces() {
        let m = mat(2);
        for n in 1..=4 {
            for s in m.simplices(n) {
                for i in 0..=n {
                    let expected = crate::simplicial::Interval.face(&s.type_of().chi(n), i).unwrap();
                    assert_eq!(m.face(&s, i).unwrap().type_of().chi(n - 1), expected);
                }
            }
        }
    }

    #[test]
    fn functor_round_trip() {
        let m = MatSet::new(product(&ordinal(1).unwrap(), &ordinal(1).unwrap()));
        for s in m.simplices(3) {
            if !s.is_proper() {
                continue;
            }
            let (domain, f) = m.to_functor(&s);
            crate::fincat::validate_functor(&domain, m.category(), &f).unwrap();
            assert_eq!(m.from_functor(s.k(), s.l(), &domain, &f), s);
        }
    }

    #[test]
    fn fill_recovers_simplices() {
        let m = mat(1);
        for s in m.simplices(4).into_iter().chain(m.simplices(5)) {
            let faces = boundary(&m, &s).unwrap();
            assert_eq!(m.coskeletal_fill(&faces).unwrap(), s);
        }
        let empties = vec![MatSimplex::empty_row(3); 5];
        assert_eq!(m.coskeletal_fill(&empties).unwrap(), MatSimplex::empty_row(4));
    }

    #[test]
    fn fill_rejects_bad_input() {
        let m = mat(1);
        let s = m.simplices(4).into_iter().find(|s| s.k() == 1).unwrap();
        let mut faces = boundary(&m, &s).unwrap();
        assert!(matches!(m.coskeletal_fill(&faces[..4]), Err(FillError::DimensionTooSmall(3))));
        faces[2] = MatSimplex::empty_row(3);
        assert!(matches!(m.coskeletal_fill(&faces), Err(FillError::Incompatible(_))));
    }

    #[test]
    fn thin_entries_must_be_monotone() {
        let m = mat(1);
        assert_eq!(m.from_thin_entries(&[vec![0, 1]]), Err(MatError::NoArrow { from: 1, to: 0 }));
    }

    #[test]
    fn json_forms() {
        let m = mat(1);
        let sq = m.from_thin_entries(&[vec![1, 0], vec![1, 1]]).unwrap();
        let text = serde_json::to_string(&sq).unwrap();
        assert_eq!(serde_json::from_str::<MatSimplex>(&text).unwrap(), sq);
        assert_eq!(serde_json::to_string(&MatSimplex::empty_row(3)).unwrap(), r#"{"k":-1,"n":3}"#);
        assert_eq!(serde_json::to_string(&MatSimplex::empty_column(2)).unwrap(), r#"{"l":-1,"n":2}"#);
        assert_eq!(serde_json::from_str::<MatSimplex>(r#"{"l":-1,"n":2}"#).unwrap(), MatSimplex::empty_column(2));
    }
}
