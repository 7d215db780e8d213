//! Simplices of `N(Σ[D_1, ..., D_r])` as tuples of matrices.
//!
//! An `n`-simplex is a tuple `(M_1, ..., M_r)` with `M_i ∈ Mat_n(D_i)` whose
//! types satisfy `k_1 <= ... <= k_r`; faces and degeneracies act
//! componentwise. The objects `[r | n_1, ..., n_r]` of `Θ_2` are the case
//! `D_i = [n_i]`.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fincat::{ordinal, FinCategory};
use crate::matset::{MatSet, MatSimplex};
use crate::simplicial::{check_degeneracy_index, check_face_index, degeneracy_witness, SimplicialError, SimplicialSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Theta2Error {
    #[error("[r|n_1,...,n_r] needs r = {r} widths, got {got}")]
    WidthCount { r: usize, got: usize },
    #[error("r must be at least 1")]
    EmptyR,
    #[error("cannot parse Θ_2 object {0:?}; expected [r|n1,...,nr]")]
    Parse(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TupleSimplex {
    parts: Vec<MatSimplex>,
}

impl TupleSimplex {
    /// Fails if the parts differ in dimension or their types decrease.
    pub fn new(parts: Vec<MatSimplex>) -> Result<Self, SimplicialError> {
        let t = TupleSimplex { parts };
        t.check()?;
        Ok(t)
    }

    fn check(&self) -> Result<(), SimplicialError> {
        let Some(first) = self.parts.first() else {
            return Err(SimplicialError::Invalid("a tuple needs at least one part".into()));
        };
        if self.parts.iter().any(|p| p.dim() != first.dim()) {
            return Err(SimplicialError::Invalid("parts have different dimensions".into()));
        }
        if self.parts.windows(2).any(|w| w[0].k() > w[1].k()) {
            return Err(SimplicialError::Invalid(format!("types {:?} decrease", self.types())));
        }
        Ok(())
    }

    pub fn parts(&self) -> &[MatSimplex] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<MatSimplex> {
        self.parts
    }

    pub fn dim(&self) -> usize {
        self.parts[0].dim()
    }

    pub fn types(&self) -> Vec<isize> {
        self.parts.iter().map(MatSimplex::k).collect()
    }
}

/// `Mat(D_1) ×_{Δ[1]^r} N[r]`, realised as tuples with nondecreasing types.
#[derive(Clone, Debug)]
pub struct TupleSet {
    factors: Vec<MatSet>,
}

impl TupleSet {
    pub fn new(ds: Vec<FinCategory>) -> Self {
        assert!(!ds.is_empty(), "need at least one factor");
        TupleSet { factors: ds.into_iter().map(MatSet::new).collect() }
    }

    pub fn r(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[MatSet] {
        &self.factors
    }

    pub fn face(&self, t: &TupleSimplex, i: usize) -> Result<TupleSimplex, SimplicialError> {
        check_face_index(i, t.dim())?;
        let parts = self.factors.iter().zip(&t.parts).map(|(m, p)| m.face(p, i)).collect::<Result<_, _>>()?;
        TupleSimplex::new(parts)
    }

    pub fn degeneracy(&self, t: &TupleSimplex, i: usize) -> Result<TupleSimplex, SimplicialError> {
        check_degeneracy_index(i, t.dim())?;
        let parts = self.factors.iter().zip(&t.parts).map(|(m, p)| m.degeneracy(p, i)).collect::<Result<_, _>>()?;
        TupleSimplex::new(parts)
    }

    /// All `n`-simplices, grouped by type vector in lexicographic order.
    pub fn simplices(&self, n: usize) -> Vec<TupleSimplex> {
        let vectors = monotone_type_vectors(self.r(), n);
        vectors
            .par_iter()
            .map(|ks| {
                let per_factor: Vec<Vec<MatSimplex>> =
                    self.factors.iter().zip(ks).map(|(m, &k)| m.simplices_of_type(n, k)).collect();
                cartesian(&per_factor).into_iter().map(|parts| TupleSimplex { parts }).collect::<Vec<_>>()
            })
            .flatten()
            .collect()
    }

    pub fn is_nondegenerate(&self, t: &TupleSimplex) -> bool {
        degeneracy_witness(self, t).expect("indices are in range").is_none()
    }
}

impl SimplicialSet for TupleSet {
    type Simplex = TupleSimplex;

    fn dim(&self, t: &TupleSimplex) -> usize {
        t.dim()
    }

    fn face(&self, t: &TupleSimplex, i: usize) -> Result<TupleSimplex, SimplicialError> {
        TupleSet::face(self, t, i)
    }

    fn degeneracy(&self, t: &TupleSimplex, i: usize) -> Result<TupleSimplex, SimplicialError> {
        TupleSet::degeneracy(self, t, i)
    }

    fn simplices(&self, n: usize) -> Result<Vec<TupleSimplex>, SimplicialError> {
        Ok(TupleSet::simplices(self, n))
    }
}

fn cartesian(lists: &[Vec<MatSimplex>]) -> Vec<Vec<MatSimplex>> {
    lists.iter().fold(vec![vec![]], |acc, list| {
        acc.iter()
            .flat_map(|prefix| {
                list.iter().map(move |x| {
                    let mut t = prefix.clone();
                    t.push(x.clone());
                    t
                })
            })
            .collect()
    })
}

/// Vectors `-1 <= k_1 <= ... <= k_r <= n`, lexicographically.
pub fn monotone_type_vectors(r: usize, n: usize) -> Vec<Vec<isize>> {
    fn go(r: usize, n: isize, lo: isize, prefix: &mut Vec<isize>, out: &mut Vec<Vec<isize>>) {
        if prefix.len() == r {
            out.push(prefix.clone());
            return;
        }
        for k in lo..=n {
            prefix.push(k);
            go(r, n, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(r, n as isize, -1, &mut Vec::new(), &mut out);
    out
}

/// Type vectors in the image of `N[r]_n -> (Δ[1]_n)^r`: a monotone
/// `v: [n] -> [r]` goes to `k_i = max{t : v(t) < i}` (or `-1`).
pub fn pullback_type_vectors(r: usize, n: usize) -> BTreeSet<Vec<isize>> {
    fn go(r: usize, n: usize, lo: usize, v: &mut Vec<usize>, out: &mut BTreeSet<Vec<isize>>) {
        if v.len() == n + 1 {
            let ks = (1..=r).map(|i| (0..=n).filter(|&t| v[t] < i).max().map_or(-1, |t| t as isize)).collect();
            out.insert(ks);
            return;
        }
        for x in lo..=r {
            v.push(x);
            go(r, n, x, v, out);
            v.pop();
        }
    }
    let mut out = BTreeSet::new();
    go(r, n, 0, &mut Vec::new(), &mut out);
    out
}

/// All `n`-simplices of `N(Σ[D_1, ..., D_r])` as tuples of matrices.
pub fn tuple_simplices(ds: &[FinCategory], n: usize) -> Vec<TupleSimplex> {
    TupleSet::new(ds.to_vec()).simplices(n)
}

pub fn tuple_face(ds: &[FinCategory], t: &TupleSimplex, i: usize) -> Result<TupleSimplex, SimplicialError> {
    TupleSet::new(ds.to_vec()).face(t, i)
}

pub fn tuple_degeneracy(ds: &[FinCategory], t: &TupleSimplex, i: usize) -> Result<TupleSimplex, SimplicialError> {
    TupleSet::new(ds.to_vec()).degeneracy(t, i)
}

/// Number of `n`-simplices that are not `s_i` of an `(n-1)`-simplex.
pub fn count_nondegenerate(ds: &[FinCategory], n: usize) -> usize {
    let set = TupleSet::new(ds.to_vec());
    set.simplices(n).par_iter().filter(|t| set.is_nondegenerate(t)).count()
}

/// The factors `[n_1], ..., [n_r]` of `[r | n_1, ..., n_r]`.
pub fn theta2_object(r: usize, widths: &[usize]) -> Result<Vec<FinCategory>, Theta2Error> {
    if r == 0 {
        return Err(Theta2Error::EmptyR);
    }
    if widths.len() != r {
        return Err(Theta2Error::WidthCount { r, got: widths.len() });
    }
    Ok(widths.iter().map(|&w| ordinal(w as isize).expect("widths are non-negative")).collect())
}

/// Parses `[r|n1,...,nr]` (brackets optional).
pub fn parse_theta2(text: &str) -> Result<(usize, Vec<usize>), Theta2Error> {
    let err = || Theta2Error::Parse(text.to_string());
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    let (r, widths) = inner.split_once('|').ok_or_else(err)?;
    let r: usize = r.trim().parse().map_err(|_| err())?;
    let widths =
        widths.split(',').map(|w| w.trim().parse::<usize>().map_err(|_| err())).collect::<Result<Vec<_>, _>>()?;
    theta2_object(r, &widths)?;
    Ok((r, widths))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_vectors_are_the_pullback_image() {
        for r in 1..=4 {
            for n in 0..=5 {
                let monotone: BTreeSet<_> = monotone_type_vectors(r, n).into_iter().collect();
                assert_eq!(monotone, pullback_type_vectors(r, n));
            }
        }
    }

    #[test]
    fn two_points_give_the_edges_of_a_triangle() {
        let ds = theta2_object(2, &[0, 0]).unwrap();
        assert_eq!(tuple_simplices(&ds, 1).len(), 6);
        // Δ[2] has binomial(n + 3, 2) n-simplices
        for n in 0..=5 {
            assert_eq!(tuple_simplices(&ds, n).len(), (n + 3) * (n + 2) / 2);
        }
        assert_eq!(count_nondegenerate(&ds, 2), 1);
        assert_eq!(count_nondegenerate(&ds, 3), 0);
    }

    #[test]
    fn parse_round_trip() {
        assert_eq!(parse_theta2("[3|2,0,1]").unwrap(), (3, vec![2, 0, 1]));
        assert_eq!(parse_theta2("1|1").unwrap(), (1, vec![1]));
        assert!(matches!(parse_theta2("[2|1]"), Err(Theta2Error::WidthCount { r: 2, got: 1 })));
        assert!(parse_theta2("[2,1]").is_err());
    }

    #[test]
    fn face_rejects_out_of_range() {
        let set = TupleSet::new(theta2_object(1, &[1]).unwrap());
        let t = set.simplices(2).remove(0);
        assert!(set.face(&t, 3).is_err());
    }
}
