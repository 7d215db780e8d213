//! Exhaustive checks packaged as reports.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::duskin::{phi, phi_commutes_with_faces, phi_inverse, phi_inverse_by_fill, MultiSuspension};
use crate::fincat::FinCategory;
use crate::freecell::{free_cell, sigma, verify_face_relations, verify_two_skeleton, SigmaIndex};
use crate::matset::{MatSet, MatSimplex};
use crate::paths::{
    enumerate_shuffles, enumerate_triangulations, filter_constrained, shuffle_to_triangulation,
    triangulation_to_shuffle,
};
use crate::simplicial::{boundary, check_identities, compatible_spheres, degeneracy_witness};
use crate::theta2::{monotone_type_vectors, pullback_type_vectors, TupleSet};

/// Outcome of a check: how much was examined, named counts, and the
/// violations found (empty when the check passes).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub checked: usize,
    pub counts: BTreeMap<String, usize>,
    pub failures: Vec<String>,
}

impl Report {
    fn new(suite: &str) -> Self {
        Report { suite: suite.to_string(), ..Default::default() }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn count(&mut self, key: impl Into<String>, value: usize) {
        self.counts.insert(key.into(), value);
    }

    fn fail(&mut self, message: impl Into<String>) {
        self.failures.push(message.into());
    }

    fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        for (k, v) in other.counts {
            self.counts.insert(format!("{}.{k}", other.suite), v);
        }
        self.failures.extend(other.failures.into_iter().map(|f| format!("{}: {f}", other.suite)));
    }
}

/// The five simplicial identities on `Mat(D)` up to dimension `max_n`.
pub fn simplicial_identities(d: &FinCategory, max_n: usize) -> Report {
    let mut r = Report::new("simplicial-identities");
    let mat = MatSet::new(d.clone());
    for n in 0..=max_n {
        r.count(format!("simplices.{n}"), mat.simplices(n).len());
    }
    match check_identities(&mat, max_n) {
        Ok(rep) => r.checked = rep.checks,
        Err(e) => r.fail(e.to_string()),
    }
    r
}

/// Every compatible sphere of `(n-1)`-simplices of `Mat(D)` has exactly
/// one filler among the enumerated `n`-simplices, and the constructive
/// filler finds it.
pub fn coskeletal(d: &FinCategory, n: usize) -> Report {
    let mut r = Report::new("coskeletal");
    let mat = MatSet::new(d.clone());
    let simplices = mat.simplices(n);
    let mut fillers: HashMap<Vec<MatSimplex>, Vec<&MatSimplex>> = HashMap::new();
    for s in &simplices {
        fillers.entry(boundary(&mat, s).expect("faces in range")).or_default().push(s);
    }
    let spheres = match compatible_spheres(&mat, n) {
        Ok(s) => s,
        Err(e) => {
            r.fail(e.to_string());
            return r;
        }
    };
    r.count("simplices", simplices.len());
    r.count("spheres", spheres.len());
    r.checked = spheres.len();
    let failures: Vec<String> = spheres
        .par_iter()
        .filter_map(|sphere| {
            let found = fillers.get(sphere).map_or(0, Vec::len);
            if found != 1 {
                return Some(format!("sphere {sphere:?} has {found} fillers"));
            }
            match mat.coskeletal_fill(sphere) {
                Ok(f) if &f == fillers[sphere][0] => None,
                Ok(f) => Some(format!("filler {f} differs from the enumerated simplex")),
                Err(e) => Some(format!("filler failed: {e}")),
            }
        })
        .collect();
    let sphere_set: HashSet<&Vec<MatSimplex>> = spheres.iter().collect();
    for b in fillers.keys() {
        if !sphere_set.contains(b) {
            r.fail(format!("boundary {b:?} was not enumerated as a sphere"));
        }
    }
    r.failures.extend(failures);
    r
}

/// Compares tuples of matrices with the brute-force nerve of
/// `Σ[D_1, ..., D_r]` in dimension `n <= 4`: equal counts, `phi` lands in
/// the nerve injectively, `phi_inverse` undoes it, and faces commute.
pub fn phi_oracle(ds: &[FinCategory], n: usize) -> Report {
    let mut r = Report::new("phi-oracle");
    let ms = MultiSuspension::new(ds.to_vec());
    if let Err(e) = ms.category().validate() {
        r.fail(format!("multi-suspension is not a 2-category: {e}"));
        return r;
    }
    let nerve = match ms.nerve().nerve_simplices(n) {
        Ok(v) => v,
        Err(e) => {
            r.fail(e.to_string());
            return r;
        }
    };
    let tuples = TupleSet::new(ds.to_vec()).simplices(n);
    r.count("nerve", nerve.len());
    r.count("tuples", tuples.len());
    r.checked = tuples.len();
    if nerve.len() != tuples.len() {
        r.fail(format!("{} nerve simplices but {} tuples", nerve.len(), tuples.len()));
    }
    let nerve_set: HashSet<_> = nerve.iter().collect();
    let images: Vec<Result<_, String>> = tuples
        .par_iter()
        .map(|t| {
            let parts = t.parts();
            let image = phi(&ms, parts).map_err(|e| e.to_string())?;
            if !nerve_set.contains(&image) {
                return Err(format!("phi of {parts:?} is not an enumerated nerve simplex"));
            }
            let back = if n == 4 { phi_inverse_by_fill(&ms, &image) } else { phi_inverse(&ms, &image) };
            if back.as_deref() != Ok(parts) {
                return Err(format!("phi_inverse does not recover {parts:?}: {back:?}"));
            }
            if !phi_commutes_with_faces(&ms, parts).map_err(|e| e.to_string())? {
                return Err(format!("faces do not commute with phi at {parts:?}"));
            }
            Ok(image)
        })
        .collect();
    let mut seen = HashSet::new();
    for img in images {
        match img {
            Ok(i) => {
                if !seen.insert(i) {
                    r.fail("phi is not injective");
                }
            }
            Err(e) => r.fail(e),
        }
    }
    r
}

/// Membership in the tuple model is exactly the monotone type condition,
/// which is exactly the image of `N[r]` in `(Δ[1])^r`.
pub fn pullback(ds: &[FinCategory], n: usize) -> Report {
    let mut r = Report::new("pullback");
    let r_len = ds.len();
    let image = pullback_type_vectors(r_len, n);
    let all_vectors = monotone_type_vectors(r_len, n);
    let mats: Vec<MatSet> = ds.iter().cloned().map(MatSet::new).collect();
    // all type vectors, monotone or not
    let mut every: Vec<Vec<isize>> = vec![vec![]];
    for _ in 0..r_len {
        every = every
            .into_iter()
            .flat_map(|p| {
                (-1..=n as isize).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    let mut product_members = 0;
    for ks in &every {
        let monotone = ks.windows(2).all(|w| w[0] <= w[1]);
        if monotone != image.contains(ks) {
            r.fail(format!("type vector {ks:?}: monotone = {monotone}, in image = {}", image.contains(ks)));
        }
        if image.contains(ks) {
            product_members += mats.iter().zip(ks).map(|(m, &k)| m.simplices_of_type(n, k).len()).product::<usize>();
        }
        r.checked += 1;
    }
    let tuples = TupleSet::new(ds.to_vec()).simplices(n);
    r.count("type_vectors", all_vectors.len());
    r.count("fiber_product", product_members);
    r.count("tuples", tuples.len());
    if tuples.len() != product_members {
        r.fail(format!("{} tuples but the fiber product has {product_members}", tuples.len()));
    }
    r
}

/// Every face relation of `σ_n, σ'_n` for `1 <= m <= max_m`, and the
/// 2-skeleton formula for `σ_{2m}`.
pub fn freecell_relations(max_m: usize) -> Report {
    let mut r = Report::new("freecell-relations");
    for m in 1..=max_m {
        let rel = verify_face_relations(m);
        r.checked += rel.checked;
        r.failures.extend(rel.failures.into_iter().map(|f| format!("m = {m}: {f}")));
    }
    r.merge(two_skeleton(max_m));
    r
}

pub fn two_skeleton(max_m: usize) -> Report {
    let mut r = Report::new("two-skeleton");
    for m in 1..=max_m {
        let rep = verify_two_skeleton(m);
        r.checked += rep.checked;
        r.failures.extend(rep.failures.into_iter().map(|f| format!("m = {m}: {f}")));
    }
    r
}

/// The non-degenerate `n`-simplices of `Mat([1])` are exactly `σ_n, σ'_n`.
pub fn freecell_uniqueness(max_n: usize) -> Report {
    let mut r = Report::new("freecell-uniqueness");
    let mat = free_cell();
    for n in 0..=max_n {
        let mut found: Vec<MatSimplex> = mat.simplices(n).into_iter().filter(|s| mat.is_nondegenerate(s)).collect();
        r.checked += 1;
        r.count(format!("nondegenerate.{n}"), found.len());
        let mut expected = vec![sigma(SigmaIndex::new(n, false)), sigma(SigmaIndex::new(n, true))];
        found.sort();
        expected.sort();
        if found != expected {
            r.fail(format!("dimension {n}: found {found:?}"));
        }
    }
    r
}

/// Constrained triangulations of the `(n+1)`-gon against shuffles, for
/// every cut `k`.
pub fn bijection(n: usize) -> Report {
    let mut r = Report::new("bijection");
    let all = enumerate_triangulations(n);
    r.count("triangulations", all.len());
    for k in 0..n {
        let constrained = filter_constrained(&all, k);
        let shuffles = enumerate_shuffles(k, n - 1 - k);
        r.count(format!("k={k}"), constrained.len());
        r.checked += constrained.len() + shuffles.len();
        if constrained.len() != shuffles.len() {
            r.fail(format!("k = {k}: {} triangulations, {} shuffles", constrained.len(), shuffles.len()));
        }
        for t in &constrained {
            let back = triangulation_to_shuffle(t, k).and_then(|s| shuffle_to_triangulation(&s, n, k));
            if back.as_ref() != Ok(t) {
                r.fail(format!("k = {k}: triangulation {:?} does not round-trip", t.triangles()));
            }
        }
        let mut images = HashSet::new();
        for s in &shuffles {
            let back = shuffle_to_triangulation(s, n, k).and_then(|t| {
                if !t.satisfies_constraint(k) {
                    r.fail(format!("k = {k}: shuffle {s} gives an unconstrained triangulation"));
                }
                images.insert(t.clone());
                triangulation_to_shuffle(&t, k)
            });
            if back.as_ref() != Ok(s) {
                r.fail(format!("k = {k}: shuffle {s} does not round-trip"));
            }
        }
        if images.len() != shuffles.len() {
            r.fail(format!("k = {k}: shuffles collide"));
        }
    }
    r
}

/// Every simplex flagged degenerate is fixed by some `s_i d_i`, and the
/// row/column criterion agrees with that test.
pub fn degeneracy_retraction(d: &FinCategory, max_n: usize) -> Report {
    let mut r = Report::new("degeneracy-retraction");
    let mat = MatSet::new(d.clone());
    for n in 0..=max_n {
        for s in mat.simplices(n) {
            r.checked += 1;
            let witness = degeneracy_witness(&mat, &s).expect("indices in range");
            if mat.is_nondegenerate(&s) == witness.is_some() {
                r.fail(format!("{s:?}: criterion and retraction disagree"));
            }
            if n < max_n {
                for i in 0..=n {
                    let deg = mat.degeneracy(&s, i).expect("index in range");
                    if degeneracy_witness(&mat, &deg).expect("indices in range").is_none() {
                        r.fail(format!("s_{i} of {s:?} is not recognised as degenerate"));
                    }
                }
            }
        }
    }
    r
}
