//! Finite 1-categories stored as dense tables, functors between them, and the
//! ordinal, opposite and product constructors used by the matrix models.
//!
//! Objects and morphisms are plain indices. Composition is a dense
//! `morphisms x morphisms` table, so two categories are equal exactly when
//! their tables agree.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("the ordinal [{0}] is undefined; expected n >= -1")]
    OrdinalOutOfRange(isize),
    #[error("morphism {morphism} has an endpoint outside 0..{objects}")]
    EndpointOutOfRange { morphism: usize, objects: usize },
    #[error("expected {expected} identities, got {got}")]
    IdentityCount { expected: usize, got: usize },
    #[error("identity of object {object} is {morphism}, which is not an endomorphism of it")]
    IdentityNotLoop { object: usize, morphism: usize },
    #[error("composition entry ({g}, {f}) references an unknown morphism")]
    CompositionOutOfRange { g: usize, f: usize },
    #[error("composition entry ({g}, {f}) is given for a non-composable pair")]
    NotComposable { g: usize, f: usize },
    #[error("composite of ({g}, {f}) is {h}, which has the wrong endpoints")]
    CompositeEndpoints { g: usize, f: usize, h: usize },
    #[error("composite of ({g}, {f}) is given twice with different values")]
    ConflictingComposite { g: usize, f: usize },
    #[error("composable pair ({g}, {f}) has no composite")]
    MissingComposite { g: usize, f: usize },
    #[error("identity law fails for morphism {morphism}")]
    IdentityLaw { morphism: usize },
    #[error("associativity fails for ({h}, {g}, {f})")]
    Associativity { h: usize, g: usize, f: usize },
}

/// A finite category with dense composition table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCategory {
    num_objects: usize,
    src: Vec<usize>,
    tgt: Vec<usize>,
    identity: Vec<usize>,
    /// `compose[g * m + f] = g ∘ f`.
    compose: Vec<Option<usize>>,
    /// `hom[a * o + b]`: morphisms `a -> b` in index order.
    hom: Vec<Vec<usize>>,
}

impl FinCategory {
    /// Builds a category from raw tables and checks every axiom.
    ///
    /// `composition` lists triples `(g, f, g ∘ f)`. Composites with an
    /// identity may be omitted; they are filled in from the unit laws.
    pub fn new(
        num_objects: usize,
        morphisms: &[(usize, usize)],
        identity: Vec<usize>,
        composition: &[(usize, usize, usize)],
    ) -> Result<Self, CategoryError> {
        let m = morphisms.len();
        for (i, &(s, t)) in morphisms.iter().enumerate() {
            if s >= num_objects || t >= num_objects {
                return Err(CategoryError::EndpointOutOfRange { morphism: i, objects: num_objects });
            }
        }
        if identity.len() != num_objects {
            return Err(CategoryError::IdentityCount { expected: num_objects, got: identity.len() });
        }
        for (o, &id) in identity.iter().enumerate() {
            if id >= m || morphisms[id] != (o, o) {
                return Err(CategoryError::IdentityNotLoop { object: o, morphism: id });
            }
        }
        let src: Vec<usize> = morphisms.iter().map(|p| p.0).collect();
        let tgt: Vec<usize> = morphisms.iter().map(|p| p.1).collect();
        let mut compose = vec![None; m * m];
        for &(g, f, h) in composition {
            if g >= m || f >= m || h >= m {
                return Err(CategoryError::CompositionOutOfRange { g, f });
            }
            if tgt[f] != src[g] {
                return Err(CategoryError::NotComposable { g, f });
            }
            if src[h] != src[f] || tgt[h] != tgt[g] {
                return Err(CategoryError::CompositeEndpoints { g, f, h });
            }
            match compose[g * m + f] {
                Some(prev) if prev != h => return Err(CategoryError::ConflictingComposite { g, f }),
                _ => compose[g * m + f] = Some(h),
            }
        }
        for f in 0..m {
            let left = identity[tgt[f]] * m + f;
            match compose[left] {
                None => compose[left] = Some(f),
                Some(h) if h != f => return Err(CategoryError::IdentityLaw { morphism: f }),
                _ => {}
            }
            let right = f * m + identity[src[f]];
            match compose[right] {
                None => compose[right] = Some(f),
                Some(h) if h != f => return Err(CategoryError::IdentityLaw { morphism: f }),
                _ => {}
            }
        }
        let cat = Self::from_tables(num_objects, src, tgt, identity, compose);
        cat.validate()?;
        Ok(cat)
    }

    fn from_tables(
        num_objects: usize,
        src: Vec<usize>,
        tgt: Vec<usize>,
        identity: Vec<usize>,
        compose: Vec<Option<usize>>,
    ) -> Self {
        let mut hom = vec![Vec::new(); num_objects * num_objects];
        for f in 0..src.len() {
            hom[src[f] * num_objects + tgt[f]].push(f);
        }
        FinCategory { num_objects, src, tgt, identity, compose, hom }
    }

    pub fn num_objects(&self) -> usize {
        self.num_objects
    }

    pub fn num_morphisms(&self) -> usize {
        self.src.len()
    }

    pub fn is_empty(&self) -> bool {
        self.num_objects == 0
    }

    pub fn src(&self, f: usize) -> usize {
        self.src[f]
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.tgt[f]
    }

    pub fn identity(&self, object: usize) -> usize {
        self.identity[object]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.src[f] == self.tgt[f] && self.identity[self.src[f]] == f
    }

    /// `g ∘ f`, or `None` when `tgt(f) != src(g)`.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose[g * self.num_morphisms() + f]
    }

    /// Morphisms `a -> b`.
    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        &self.hom[a * self.num_objects + b]
    }

    /// True when every hom-set has at most one element.
    pub fn is_thin(&self) -> bool {
        self.hom.iter().all(|h| h.len() <= 1)
    }

    /// Exhaustive check of the category axioms.
    pub fn validate(&self) -> Result<(), CategoryError> {
        let m = self.num_morphisms();
        for o in 0..self.num_objects {
            let id = self.identity[o];
            if self.src[id] != o || self.tgt[id] != o {
                return Err(CategoryError::IdentityNotLoop { object: o, morphism: id });
            }
        }
        for g in 0..m {
            for f in 0..m {
                let composable = self.tgt[f] == self.src[g];
                match (composable, self.compose[g * m + f]) {
                    (true, None) => return Err(CategoryError::MissingComposite { g, f }),
                    (false, Some(_)) => return Err(CategoryError::NotComposable { g, f }),
                    (true, Some(h)) if self.src[h] != self.src[f] || self.tgt[h] != self.tgt[g] => {
                        return Err(CategoryError::CompositeEndpoints { g, f, h })
                    }
                    _ => {}
                }
            }
        }
        for f in 0..m {
            if self.compose(self.identity[self.tgt[f]], f) != Some(f)
                || self.compose(f, self.identity[self.src[f]]) != Some(f)
            {
                return Err(CategoryError::IdentityLaw { morphism: f });
            }
        }
        // Triple scan over composable chains only.
        for f in 0..m {
            for &g in self.out_of(self.tgt[f]) {
                let gf = self.compose(g, f).expect("composable");
                for &h in self.out_of(self.tgt[g]) {
                    let hg = self.compose(h, g).expect("composable");
                    if self.compose(h, gf) != self.compose(hg, f) {
                        return Err(CategoryError::Associativity { h, g, f });
                    }
                }
            }
        }
        Ok(())
    }

    fn out_of(&self, a: usize) -> impl Iterator<Item = &usize> {
        (0..self.num_objects).flat_map(move |b| self.hom(a, b).iter())
    }

    /// Composable pairs `(g, f)` with neither side an identity.
    fn nontrivial_composable_pairs(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for f in 0..self.num_morphisms() {
            if self.is_identity(f) {
                continue;
            }
            for &g in self.out_of(self.tgt[f]) {
                if self.is_identity(g) {
                    continue;
                }
                out.push((g, f, self.compose(g, f).expect("composable")));
            }
        }
        out
    }
}

/// The poset `0 < 1 < ... < n`; `[-1]` is the empty category.
///
/// Morphisms `i -> j` are numbered in lexicographic order of `(i, j)`.
pub fn ordinal(n: isize) -> Result<FinCategory, CategoryError> {
    if n < -1 {
        return Err(CategoryError::OrdinalOutOfRange(n));
    }
    let size = (n + 1) as usize;
    let mut index = vec![usize::MAX; size * size];
    let mut src = Vec::new();
    let mut tgt = Vec::new();
    for i in 0..size {
        for j in i..size {
            index[i * size + j] = src.len();
            src.push(i);
            tgt.push(j);
        }
    }
    let m = src.len();
    let identity = (0..size).map(|i| index[i * size + i]).collect();
    let mut compose = vec![None; m * m];
    for f in 0..m {
        for g in 0..m {
            if tgt[f] == src[g] {
                compose[g * m + f] = Some(index[src[f] * size + tgt[g]]);
            }
        }
    }
    Ok(FinCategory::from_tables(size, src, tgt, identity, compose))
}

/// Same objects and morphisms with source/target swapped and composition
/// reversed. `opposite(&opposite(c)) == c`.
pub fn opposite(c: &FinCategory) -> FinCategory {
    let m = c.num_morphisms();
    let mut compose = vec![None; m * m];
    for g in 0..m {
        for f in 0..m {
            compose[g * m + f] = c.compose(f, g);
        }
    }
    FinCategory::from_tables(c.num_objects, c.tgt.clone(), c.src.clone(), c.identity.clone(), compose)
}

/// Object `(i, j)` is numbered `i * |Ob d| + j`; morphism `(f, g)` is
/// `f * |Mor d| + g`.
pub fn product(c: &FinCategory, d: &FinCategory) -> FinCategory {
    let (oc, od) = (c.num_objects, d.num_objects);
    let (mc, md) = (c.num_morphisms(), d.num_morphisms());
    let m = mc * md;
    let mut src = Vec::with_capacity(m);
    let mut tgt = Vec::with_capacity(m);
    for f in 0..mc {
        for g in 0..md {
            src.push(c.src[f] * od + d.src[g]);
            tgt.push(c.tgt[f] * od + d.tgt[g]);
        }
    }
    let mut identity = Vec::with_capacity(oc * od);
    for a in 0..oc {
        for b in 0..od {
            identity.push(c.identity[a] * md + d.identity[b]);
        }
    }
    let mut compose = vec![None; m * m];
    for g1 in 0..mc {
        for f1 in 0..mc {
            let Some(h1) = c.compose(g1, f1) else { continue };
            for g2 in 0..md {
                for f2 in 0..md {
                    if let Some(h2) = d.compose(g2, f2) {
                        compose[(g1 * md + g2) * m + (f1 * md + f2)] = Some(h1 * md + h2);
                    }
                }
            }
        }
    }
    FinCategory::from_tables(oc * od, src, tgt, identity, compose)
}

/// Object and morphism assignments of a functor; the categories live
/// elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Functor {
    pub obj_map: Vec<usize>,
    pub mor_map: Vec<usize>,
}

/// A functor bundled with its source and target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorData {
    pub source: FinCategory,
    pub target: FinCategory,
    pub obj_map: Vec<usize>,
    pub mor_map: Vec<usize>,
}

impl FunctorData {
    pub fn validate(&self) -> Result<(), FunctorViolation> {
        validate_functor(
            &self.source,
            &self.target,
            &Functor { obj_map: self.obj_map.clone(), mor_map: self.mor_map.clone() },
        )
    }
}

/// First functor law found broken.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctorViolation {
    #[error("object map has length {got}, expected {expected}")]
    ObjectMapLength { expected: usize, got: usize },
    #[error("morphism map has length {got}, expected {expected}")]
    MorphismMapLength { expected: usize, got: usize },
    #[error("object {object} is sent outside the target")]
    ObjectOutOfRange { object: usize },
    #[error("morphism {morphism} is sent outside the target")]
    MorphismOutOfRange { morphism: usize },
    #[error("morphism {morphism} is sent to {image}, whose endpoints do not match")]
    Endpoints { morphism: usize, image: usize },
    #[error("identity of object {object} is not sent to an identity")]
    Identity { object: usize },
    #[error("composite of ({g}, {f}) is not preserved")]
    Composite { g: usize, f: usize },
}

/// Checks every functor law by exhaustive table scan.
pub fn validate_functor(source: &FinCategory, target: &FinCategory, functor: &Functor) -> Result<(), FunctorViolation> {
    let Functor { obj_map, mor_map } = functor;
    if obj_map.len() != source.num_objects() {
        return Err(FunctorViolation::ObjectMapLength { expected: source.num_objects(), got: obj_map.len() });
    }
    if mor_map.len() != source.num_morphisms() {
        return Err(FunctorViolation::MorphismMapLength { expected: source.num_morphisms(), got: mor_map.len() });
    }
    if let Some(object) = obj_map.iter().position(|&o| o >= target.num_objects()) {
        return Err(FunctorViolation::ObjectOutOfRange { object });
    }
    if let Some(morphism) = mor_map.iter().position(|&f| f >= target.num_morphisms()) {
        return Err(FunctorViolation::MorphismOutOfRange { morphism });
    }
    for f in 0..source.num_morphisms() {
        let image = mor_map[f];
        if target.src(image) != obj_map[source.src(f)] || target.tgt(image) != obj_map[source.tgt(f)] {
            return Err(FunctorViolation::Endpoints { morphism: f, image });
        }
    }
    for o in 0..source.num_objects() {
        if mor_map[source.identity(o)] != target.identity(obj_map[o]) {
            return Err(FunctorViolation::Identity { object: o });
        }
    }
    for f in 0..source.num_morphisms() {
        for g in 0..source.num_morphisms() {
            if let Some(h) = source.compose(g, f) {
                if target.compose(mor_map[g], mor_map[f]) != Some(mor_map[h]) {
                    return Err(FunctorViolation::Composite { g, f });
                }
            }
        }
    }
    Ok(())
}

/// Every functor `c -> d`, each exactly once, in lexicographic order of
/// `(obj_map, mor_map)`.
///
/// Objects are assigned first, pruning as soon as two assigned objects are
/// joined by a morphism whose image hom-set is empty. Morphisms are then
/// assigned in index order and each composite is checked as soon as all
/// three of its morphisms are fixed.
pub fn enumerate_functors(c: &FinCategory, d: &FinCategory) -> Vec<Functor> {
    let oc = c.num_objects();
    let mc = c.num_morphisms();

    // Morphisms whose later endpoint is `o`, checked when `o` is assigned.
    let mut arrows_closing_at = vec![Vec::new(); oc];
    for f in 0..mc {
        arrows_closing_at[c.src(f).max(c.tgt(f))].push(f);
    }
    // Composites checked when the largest index among (g, f, g∘f) is fixed.
    let mut checks_at = vec![Vec::new(); mc];
    for (g, f, h) in c.nontrivial_composable_pairs() {
        checks_at[g.max(f).max(h)].push((g, f, h));
    }

    let mut out = Vec::new();
    let mut obj_map = vec![0usize; oc];
    assign_objects(c, d, 0, &mut obj_map, &arrows_closing_at, &checks_at, &mut out);
    out
}

fn assign_objects(
    c: &FinCategory,
    d: &FinCategory,
    next: usize,
    obj_map: &mut Vec<usize>,
    arrows_closing_at: &[Vec<usize>],
    checks_at: &[Vec<(usize, usize, usize)>],
    out: &mut Vec<Functor>,
) {
    if next == c.num_objects() {
        let mut mor_map = vec![usize::MAX; c.num_morphisms()];
        assign_morphisms(c, d, 0, obj_map, &mut mor_map, checks_at, out);
        return;
    }
    for candidate in 0..d.num_objects() {
        obj_map[next] = candidate;
        let feasible = arrows_closing_at[next].iter().all(|&f| !d.hom(obj_map[c.src(f)], obj_map[c.tgt(f)]).is_empty());
        if feasible {
            assign_objects(c, d, next + 1, obj_map, arrows_closing_at, checks_at, out);
        }
    }
}

fn assign_morphisms(
    c: &FinCategory,
    d: &FinCategory,
    next: usize,
    obj_map: &[usize],
    mor_map: &mut Vec<usize>,
    checks_at: &[Vec<(usize, usize, usize)>],
    out: &mut Vec<Functor>,
) {
    if next == c.num_morphisms() {
        out.push(Functor { obj_map: obj_map.to_vec(), mor_map: mor_map.clone() });
        return;
    }
    let forced;
    let candidates: &[usize] = if c.is_identity(next) {
        forced = [d.identity(obj_map[c.src(next)])];
        &forced
    } else {
        d.hom(obj_map[c.src(next)], obj_map[c.tgt(next)])
    };
    for &image in candidates {
        mor_map[next] = image;
        let consistent = checks_at[next].iter().all(|&(g, f, h)| d.compose(mor_map[g], mor_map[f]) == Some(mor_map[h]));
        if consistent {
            assign_morphisms(c, d, next + 1, obj_map, mor_map, checks_at, out);
        }
    }
    mor_map[next] = usize::MAX;
}

// JSON encoding: objects as an index array, morphisms as {id, src, tgt},
// identities per object, composition as (g, f, g∘f) triples.

#[derive(Serialize, Deserialize)]
struct MorphismRecord {
    id: usize,
    src: usize,
    tgt: usize,
}

#[derive(Serialize, Deserialize)]
struct CategoryRecord {
    objects: Vec<usize>,
    morphisms: Vec<MorphismRecord>,
    identities: Vec<usize>,
    composition: Vec<(usize, usize, usize)>,
}

impl Serialize for FinCategory {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let record = CategoryRecord {
            objects: (0..self.num_objects).collect(),
            morphisms: (0..self.num_morphisms())
                .map(|id| MorphismRecord { id, src: self.src[id], tgt: self.tgt[id] })
                .collect(),
            identities: self.identity.clone(),
            composition: self.nontrivial_composable_pairs(),
        };
        record.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FinCategory {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let record = CategoryRecord::deserialize(deserializer)?;
        if record.objects.iter().enumerate().any(|(i, &o)| i != o) {
            return Err(D::Error::custom("objects must be listed as 0..n in order"));
        }
        let mut morphisms = vec![None; record.morphisms.len()];
        for m in &record.morphisms {
            match morphisms.get_mut(m.id) {
                Some(slot @ None) => *slot = Some((m.src, m.tgt)),
                _ => return Err(D::Error::custom(format!("bad or duplicate morphism id {}", m.id))),
            }
        }
        let morphisms: Vec<(usize, usize)> = morphisms.into_iter().map(|m| m.expect("filled")).collect();
        FinCategory::new(record.objects.len(), &morphisms, record.identities, &record.composition)
            .map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordinal_sizes() {
        let empty = ordinal(-1).unwrap();
        assert_eq!(empty.num_objects(), 0);
        assert_eq!(empty.num_morphisms(), 0);
        let point = ordinal(0).unwrap();
        assert_eq!((point.num_objects(), point.num_morphisms()), (1, 1));
        assert!(point.is_identity(0));
        let two = ordinal(2).unwrap();
        assert_eq!((two.num_objects(), two.num_morphisms()), (3, 6));
        two.validate().unwrap();
        assert_eq!(ordinal(-2), Err(CategoryError::OrdinalOutOfRange(-2)));
    }

    #[test]
    fn opposite_is_an_involution() {
        for n in -1..4 {
            let c = ordinal(n).unwrap();
            let op = opposite(&c);
            op.validate().unwrap();
            assert_eq!(op.num_morphisms(), c.num_morphisms());
            assert_eq!(opposite(&op), c);
        }
        assert_eq!(opposite(&ordinal(0).unwrap()), ordinal(0).unwrap());
        let op1 = opposite(&ordinal(1).unwrap());
        assert_eq!(op1.hom(1, 0).len(), 1);
        assert!(op1.hom(0, 1).is_empty());
    }

    #[test]
    fn product_sizes() {
        let one = ordinal(1).unwrap();
        let sq = product(&one, &opposite(&one));
        sq.validate().unwrap();
        assert_eq!((sq.num_objects(), sq.num_morphisms()), (4, 9));
        let empty = product(&ordinal(-1).unwrap(), &sq);
        assert!(empty.is_empty());
        assert_eq!(empty.num_morphisms(), 0);
        let two = ordinal(2).unwrap();
        assert_eq!(product(&ordinal(0).unwrap(), &two), two);
    }

    #[test]
    fn functor_counts() {
        let one = ordinal(1).unwrap();
        let empty = ordinal(-1).unwrap();
        assert_eq!(enumerate_functors(&empty, &one).len(), 1);
        assert_eq!(enumerate_functors(&one, &one).len(), 3);
        let sq = product(&one, &opposite(&one));
        assert_eq!(enumerate_functors(&sq, &one).len(), 6);
        for m in 0..=6 {
            assert_eq!(enumerate_functors(&ordinal(m).unwrap(), &one).len(), m as usize + 2);
        }
        // No functor from a non-empty category into the empty one.
        assert!(enumerate_functors(&one, &empty).is_empty());
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let two = ordinal(2).unwrap();
        let fs = enumerate_functors(&two, &two);
        assert!(fs.windows(2).all(|w| w[0] < w[1]));
        for f in &fs {
            validate_functor(&two, &two, f).unwrap();
        }
    }

    #[test]
    fn constant_and_identity_functors_validate() {
        let two = ordinal(2).unwrap();
        let id = Functor { obj_map: vec![0, 1, 2], mor_map: (0..6).collect() };
        validate_functor(&two, &two, &id).unwrap();
        let constant = Functor { obj_map: vec![1; 3], mor_map: vec![two.identity(1); 6] };
        validate_functor(&two, &two, &constant).unwrap();
    }

    #[test]
    fn broken_composite_is_reported() {
        // A category with two parallel arrows 0 -> 2 so that a composite can
        // be broken without breaking endpoints: 0 -f-> 1 -g-> 2, and u, v: 0 -> 2
        // with g∘f = u.
        let morphisms = [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2), (0, 2)];
        let target = FinCategory::new(3, &morphisms, vec![0, 1, 2], &[(4, 3, 5)]).unwrap();
        let source = ordinal(2).unwrap();
        // ordinal(2) morphisms: (0,0)=0 (0,1)=1 (0,2)=2 (1,1)=3 (1,2)=4 (2,2)=5
        let good = Functor { obj_map: vec![0, 1, 2], mor_map: vec![0, 3, 5, 1, 4, 2] };
        validate_functor(&source, &target, &good).unwrap();
        let bad = Functor { obj_map: vec![0, 1, 2], mor_map: vec![0, 3, 6, 1, 4, 2] };
        assert_eq!(validate_functor(&source, &target, &bad), Err(FunctorViolation::Composite { g: 4, f: 1 }));
        // Only the good one is found by enumeration among identity-on-objects functors.
        let found: Vec<_> =
            enumerate_functors(&source, &target).into_iter().filter(|f| f.obj_map == vec![0, 1, 2]).collect();
        assert_eq!(found, vec![good]);
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(matches!(
            FinCategory::new(1, &[(0, 0), (0, 0)], vec![0], &[]),
            Err(CategoryError::MissingComposite { .. })
        ));
        assert!(matches!(
            FinCategory::new(2, &[(0, 0), (1, 1), (0, 1)], vec![0, 1], &[(2, 2, 2)]),
            Err(CategoryError::NotComposable { .. })
        ));
        assert!(matches!(FinCategory::new(1, &[(0, 0)], vec![], &[]), Err(CategoryError::IdentityCount { .. })));
    }

    #[test]
    fn json_roundtrip() {
        let sq = product(&ordinal(1).unwrap(), &opposite(&ordinal(1).unwrap()));
        let text = serde_json::to_string(&sq).unwrap();
        let back: FinCategory = serde_json::from_str(&text).unwrap();
        assert_eq!(back, sq);
    }
}
