//! Strict finite 2-categories given by explicit tables.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwoCategoryError {
    #[error("malformed table: {0}")]
    Table(String),
    #[error("{law} fails at cells {cells:?}")]
    Law { law: &'static str, cells: Vec<usize> },
}

fn law(law: &'static str, cells: &[usize]) -> TwoCategoryError {
    TwoCategoryError::Law { law, cells: cells.to_vec() }
}

/// Plain tables describing a 2-category; also the JSON form.
///
/// Composition triples are `(second, first, composite)`: `(g, f, g∘f)` for
/// 1-cells and `(b, a, b·a)` / `(β, α, β∗α)` for 2-cells, where `α` sits on
/// the first 1-cell of the horizontal composite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCategoryData {
    pub objects: usize,
    pub one_cells: Vec<(usize, usize)>,
    pub one_identities: Vec<usize>,
    pub one_composition: Vec<(usize, usize, usize)>,
    pub two_cells: Vec<(usize, usize)>,
    pub two_identities: Vec<usize>,
    pub vertical_composition: Vec<(usize, usize, usize)>,
    pub horizontal_composition: Vec<(usize, usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCategory {
    num_objects: usize,
    one_src: Vec<usize>,
    one_tgt: Vec<usize>,
    one_id: Vec<usize>,
    one_comp: HashMap<(usize, usize), usize>,
    two_src: Vec<usize>,
    two_tgt: Vec<usize>,
    two_id: Vec<usize>,
    vcomp: HashMap<(usize, usize), usize>,
    hcomp: HashMap<(usize, usize), usize>,
    /// 2-cells grouped by source 1-cell.
    two_out: Vec<Vec<usize>>,
}

impl TwoCategory {
    /// Builds and exhaustively validates a 2-category.
    pub fn new(data: TwoCategoryData) -> Result<Self, TwoCategoryError> {
        let c = Self::from_data_unchecked(data)?;
        c.validate()?;
        Ok(c)
    }

    pub(crate) fn from_data_unchecked(data: TwoCategoryData) -> Result<Self, TwoCategoryError> {
        let table = |msg: String| TwoCategoryError::Table(msg);
        let n1 = data.one_cells.len();
        let n2 = data.two_cells.len();
        if data.one_identities.len() != data.objects {
            return Err(table(format!("{} 1-cell identities for {} objects", data.one_identities.len(), data.objects)));
        }
        if data.two_identities.len() != n1 {
            return Err(table(format!("{} 2-cell identities for {} 1-cells", data.two_identities.len(), n1)));
        }
        if data.one_cells.iter().any(|&(s, t)| s >= data.objects || t >= data.objects) {
            return Err(table("1-cell endpoint out of range".into()));
        }
        if data.two_cells.iter().any(|&(s, t)| s >= n1 || t >= n1) {
            return Err(table("2-cell endpoint out of range".into()));
        }
        if data.one_identities.iter().any(|&f| f >= n1) || data.two_identities.iter().any(|&a| a >= n2) {
            return Err(table("identity out of range".into()));
        }
        let collect = |triples: &[(usize, usize, usize)], bound: usize, what: &str| {
            let mut map = HashMap::with_capacity(triples.len());
            for &(g, f, h) in triples {
                if g >= bound || f >= bound || h >= bound {
                    return Err(table(format!("{what} composition entry out of range")));
                }
                if map.insert((g, f), h).is_some_and(|old| old != h) {
                    return Err(table(format!("conflicting {what} composites for ({g}, {f})")));
                }
            }
            Ok(map)
        };
        let one_comp = collect(&data.one_composition, n1, "1-cell")?;
        let vcomp = collect(&data.vertical_composition, n2, "vertical")?;
        let hcomp = collect(&data.horizontal_composition, n2, "horizontal")?;
        let mut two_out = vec![Vec::new(); n1];
        for (a, &(s, _)) in data.two_cells.iter().enumerate() {
            two_out[s].push(a);
        }
        Ok(TwoCategory {
            num_objects: data.objects,
            one_src: data.one_cells.iter().map(|c| c.0).collect(),
            one_tgt: data.one_cells.iter().map(|c| c.1).collect(),
            one_id: data.one_identities,
            one_comp,
            two_src: data.two_cells.iter().map(|c| c.0).collect(),
            two_tgt: data.two_cells.iter().map(|c| c.1).collect(),
            two_id: data.two_identities,
            vcomp,
            hcomp,
            two_out,
        })
    }

    pub fn to_data(&self) -> TwoCategoryData {
        let sorted = |map: &HashMap<(usize, usize), usize>| {
            let mut v: Vec<_> = map.iter().map(|(&(g, f), &h)| (g, f, h)).collect();
            v.sort_unstable();
            v
        };
        TwoCategoryData {
            objects: self.num_objects,
            one_cells: self.one_src.iter().copied().zip(self.one_tgt.iter().copied()).collect(),
            one_identities: self.one_id.clone(),
            one_composition: sorted(&self.one_comp),
            two_cells: self.two_src.iter().copied().zip(self.two_tgt.iter().copied()).collect(),
            two_identities: self.two_id.clone(),
            vertical_composition: sorted(&self.vcomp),
            horizontal_composition: sorted(&self.hcomp),
        }
    }

    pub fn num_objects(&self) -> usize {
        self.num_objects
    }

    pub fn num_one_cells(&self) -> usize {
        self.one_src.len()
    }

    pub fn num_two_cells(&self) -> usize {
        self.two_src.len()
    }

    pub fn one_src(&self, f: usize) -> usize {
        self.one_src[f]
    }

    pub fn one_tgt(&self, f: usize) -> usize {
        self.one_tgt[f]
    }

    pub fn one_identity(&self, x: usize) -> usize {
        self.one_id[x]
    }

    /// `g ∘ f` (`f` first).
    pub fn compose_one(&self, g: usize, f: usize) -> Option<usize> {
        self.one_comp.get(&(g, f)).copied()
    }

    /// All `(g, f, g∘f)`.
    pub fn one_compositions(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.one_comp.iter().map(|(&(g, f), &h)| (g, f, h))
    }

    pub fn two_src(&self, a: usize) -> usize {
        self.two_src[a]
    }

    pub fn two_tgt(&self, a: usize) -> usize {
        self.two_tgt[a]
    }

    pub fn two_identity(&self, f: usize) -> usize {
        self.two_id[f]
    }

    /// 2-cells with source `f`.
    pub fn two_cells_from(&self, f: usize) -> &[usize] {
        &self.two_out[f]
    }

    /// `b · a` (`a` first).
    pub fn vcompose(&self, b: usize, a: usize) -> Option<usize> {
        self.vcomp.get(&(b, a)).copied()
    }

    /// `β ∗ α` where `α` lies over the first 1-cell.
    pub fn hcompose(&self, beta: usize, alpha: usize) -> Option<usize> {
        self.hcomp.get(&(beta, alpha)).copied()
    }

    fn one_composable(&self, g: usize, f: usize) -> bool {
        self.one_tgt[f] == self.one_src[g]
    }

    fn two_objects(&self, a: usize) -> (usize, usize) {
        let f = self.two_src[a];
        (self.one_src[f], self.one_tgt[f])
    }

    /// Exhaustive check of all the axioms of a strict 2-category.
    pub fn validate(&self) -> Result<(), TwoCategoryError> {
        let n1 = self.num_one_cells();
        let n2 = self.num_two_cells();
        for x in 0..self.num_objects {
            let i = self.one_id[x];
            if self.one_src[i] != x || self.one_tgt[i] != x {
                return Err(law("1-cell identity is a loop", &[x]));
            }
        }
        for f in 0..n1 {
            let a = self.two_id[f];
            if self.two_src[a] != f || self.two_tgt[a] != f {
                return Err(law("2-cell identity is a loop", &[f]));
            }
        }
        for a in 0..n2 {
            let (s, t) = (self.two_src[a], self.two_tgt[a]);
            if self.one_src[s] != self.one_src[t] || self.one_tgt[s] != self.one_tgt[t] {
                return Err(law("2-cells join parallel 1-cells", &[a]));
            }
        }

        // 1-cells form a category.
        for g in 0..n1 {
            for f in 0..n1 {
                match (self.one_composable(g, f), self.compose_one(g, f)) {
                    (true, None) => return Err(law("1-composition is total on composable pairs", &[g, f])),
                    (false, Some(_)) => return Err(law("1-composition only on composable pairs", &[g, f])),
                    (true, Some(h)) if self.one_src[h] != self.one_src[f] || self.one_tgt[h] != self.one_tgt[g] => {
                        return Err(law("1-composite endpoints", &[g, f]))
                    }
                    _ => {}
                }
            }
            if self.compose_one(g, self.one_id[self.one_src[g]]) != Some(g)
                || self.compose_one(self.one_id[self.one_tgt[g]], g) != Some(g)
            {
                return Err(law("1-cell unit law", &[g]));
            }
        }
        for (&(g, f), &gf) in &self.one_comp {
            for h in 0..n1 {
                if self.one_composable(h, g) {
                    let lhs = self.compose_one(h, gf);
                    let rhs = self.compose_one(h, g).and_then(|hg| self.compose_one(hg, f));
                    if lhs != rhs {
                        return Err(law("1-cell associativity", &[h, g, f]));
                    }
                }
            }
        }

        // Hom-categories under vertical composition.
        for b in 0..n2 {
            for a in 0..n2 {
                let composable = self.two_tgt[a] == self.two_src[b];
                match (composable, self.vcompose(b, a)) {
                    (true, None) => return Err(law("vertical composition is total on composable pairs", &[b, a])),
                    (false, Some(_)) => return Err(law("vertical composition only on composable pairs", &[b, a])),
                    (true, Some(c)) if self.two_src[c] != self.two_src[a] || self.two_tgt[c] != self.two_tgt[b] => {
                        return Err(law("vertical composite endpoints", &[b, a]))
                    }
                    _ => {}
                }
            }
            if self.vcompose(b, self.two_id[self.two_src[b]]) != Some(b)
                || self.vcompose(self.two_id[self.two_tgt[b]], b) != Some(b)
            {
                return Err(law("vertical unit law", &[b]));
            }
        }
        for (&(b, a), &ba) in &self.vcomp {
            for &c in self.two_cells_from(self.two_tgt[b]) {
                let lhs = self.vcompose(c, ba);
                let rhs = self.vcompose(c, b).and_then(|cb| self.vcompose(cb, a));
                if lhs != rhs {
                    return Err(law("vertical associativity", &[c, b, a]));
                }
            }
        }

        // Horizontal composition.
        for beta in 0..n2 {
            for alpha in 0..n2 {
                let composable = self.two_objects(alpha).1 == self.two_objects(beta).0;
                match (composable, self.hcompose(beta, alpha)) {
                    (true, None) => {
                        return Err(law("horizontal composition is total on composable pairs", &[beta, alpha]))
                    }
                    (false, Some(_)) => {
                        return Err(law("horizontal composition only on composable pairs", &[beta, alpha]))
                    }
                    (true, Some(c)) => {
                        let src = self.compose_one(self.two_src[beta], self.two_src[alpha]);
                        let tgt = self.compose_one(self.two_tgt[beta], self.two_tgt[alpha]);
                        if Some(self.two_src[c]) != src || Some(self.two_tgt[c]) != tgt {
                            return Err(law("horizontal composite endpoints", &[beta, alpha]));
                        }
                    }
                    _ => {}
                }
            }
            let (x, y) = self.two_objects(beta);
            let left_unit = self.two_id[self.one_id[y]];
            let right_unit = self.two_id[self.one_id[x]];
            if self.hcompose(left_unit, beta) != Some(beta) || self.hcompose(beta, right_unit) != Some(beta) {
                return Err(law("horizontal unit law", &[beta]));
            }
        }
        for (&(g, f), &gf) in &self.one_comp {
            if self.hcompose(self.two_id[g], self.two_id[f]) != Some(self.two_id[gf]) {
                return Err(law("horizontal composition preserves identities", &[g, f]));
            }
        }
        for (&(beta, alpha), &ba) in &self.hcomp {
            for gamma in 0..n2 {
                if self.two_objects(gamma).0 == self.two_objects(beta).1 {
                    let lhs = self.hcompose(gamma, ba);
                    let rhs = self.hcompose(gamma, beta).and_then(|gb| self.hcompose(gb, alpha));
                    if lhs != rhs {
                        return Err(law("horizontal associativity", &[gamma, beta, alpha]));
                    }
                }
            }
        }

        // Interchange: (β'·β) ∗ (α'·α) = (β'∗α') · (β∗α).
        for (&(a2, a1), &a21) in &self.vcomp {
            for (&(b2, b1), &b21) in &self.vcomp {
                if self.two_objects(a1).1 != self.two_objects(b1).0 {
                    continue;
                }
                let lhs = self.hcompose(b21, a21);
                let rhs = match (self.hcompose(b2, a2), self.hcompose(b1, a1)) {
                    (Some(top), Some(bottom)) => self.vcompose(top, bottom),
                    _ => None,
                };
                if lhs.is_none() || lhs != rhs {
                    return Err(law("interchange", &[b2, b1, a2, a1]));
                }
            }
        }
        Ok(())
    }
}

impl Serialize for TwoCategory {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_data().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TwoCategory {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        TwoCategory::new(TwoCategoryData::deserialize(deserializer)?).map_err(serde::de::Error::custom)
    }
}
