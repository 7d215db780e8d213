//! The (r+1)-point suspension `Σ[D_1, ..., D_r]`.
//!
//! Objects are `x_0, ..., x_r`. A 1-cell `x_i -> x_j` (`i <= j`) is a tuple
//! of objects of `D_{i+1} × ... × D_j`, a 2-cell a tuple of morphisms, and
//! every composition concatenates or composes tuples componentwise.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::nerve::DuskinNerve;
use super::twocat::{TwoCategory, TwoCategoryData};
use crate::fincat::FinCategory;
use crate::matset::MatSet;

/// A cell `x_from -> x_to` given by its components in
/// `D_{from+1}, ..., D_to` (objects for 1-cells, morphisms for 2-cells).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellLabel {
    pub from: usize,
    pub to: usize,
    pub components: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct MultiSuspension {
    factors: Vec<MatSet>,
    nerve: DuskinNerve,
    one_labels: Vec<CellLabel>,
    two_labels: Vec<CellLabel>,
    one_index: HashMap<CellLabel, usize>,
    two_index: HashMap<CellLabel, usize>,
}

/// All tuples in `sizes[0] × sizes[1] × ...`, lexicographically.
fn tuples(sizes: &[usize]) -> Vec<Vec<usize>> {
    sizes.iter().fold(vec![vec![]], |acc, &size| {
        acc.iter()
            .flat_map(|prefix| {
                (0..size).map(move |x| {
                    let mut t = prefix.clone();
                    t.push(x);
                    t
                })
            })
            .collect()
    })
}

impl MultiSuspension {
    /// `Σ[D_1, ..., D_r]`; `factors` must be non-empty.
    pub fn new(factors: Vec<FinCategory>) -> Self {
        assert!(!factors.is_empty(), "a multi-suspension needs at least one factor");
        let r = factors.len();
        let mut one_labels = Vec::new();
        let mut two_labels = Vec::new();
        for i in 0..=r {
            for j in i..=r {
                let objects: Vec<usize> = factors[i..j].iter().map(FinCategory::num_objects).collect();
                let morphisms: Vec<usize> = factors[i..j].iter().map(FinCategory::num_morphisms).collect();
                one_labels.extend(tuples(&objects).into_iter().map(|components| CellLabel {
                    from: i,
                    to: j,
                    components,
                }));
                two_labels.extend(tuples(&morphisms).into_iter().map(|components| CellLabel {
                    from: i,
                    to: j,
                    components,
                }));
            }
        }
        let index =
            |labels: &[CellLabel]| labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect::<HashMap<_, _>>();
        let one_index = index(&one_labels);
        let two_index = index(&two_labels);

        let factor = |label: &CellLabel, c: usize| &factors[label.from + c];
        let map_components = |label: &CellLabel, f: &dyn Fn(&FinCategory, usize) -> usize| CellLabel {
            from: label.from,
            to: label.to,
            components: label.components.iter().enumerate().map(|(c, &x)| f(factor(label, c), x)).collect(),
        };
        let concat = |first: &CellLabel, second: &CellLabel| CellLabel {
            from: first.from,
            to: second.to,
            components: first.components.iter().chain(&second.components).copied().collect(),
        };

        let one_cells = one_labels.iter().map(|l| (l.from, l.to)).collect();
        let one_identities = (0..=r).map(|x| one_index[&CellLabel { from: x, to: x, components: vec![] }]).collect();
        let mut one_composition = Vec::new();
        for (f, fl) in one_labels.iter().enumerate() {
            for (g, gl) in one_labels.iter().enumerate() {
                if fl.to == gl.from {
                    one_composition.push((g, f, one_index[&concat(fl, gl)]));
                }
            }
        }

        let mut two_cells = Vec::with_capacity(two_labels.len());
        let mut by_source: Vec<Vec<usize>> = vec![Vec::new(); one_labels.len()];
        for (a, al) in two_labels.iter().enumerate() {
            let s = one_index[&map_components(al, &|d, m| d.src(m))];
            let t = one_index[&map_components(al, &|d, m| d.tgt(m))];
            two_cells.push((s, t));
            by_source[s].push(a);
        }
        let two_identities =
            one_labels.iter().map(|fl| two_index[&map_components(fl, &|d, x| d.identity(x))]).collect();
        let mut vertical_composition = Vec::new();
        for (a, al) in two_labels.iter().enumerate() {
            for &b in &by_source[two_cells[a].1] {
                let bl = &two_labels[b];
                let components = al
                    .components
                    .iter()
                    .zip(&bl.components)
                    .enumerate()
                    .map(|(c, (&m, &n))| factor(al, c).compose(n, m).expect("parallel tuples compose"))
                    .collect();
                let composite = CellLabel { from: al.from, to: al.to, components };
                vertical_composition.push((b, a, two_index[&composite]));
            }
        }
        let mut horizontal_composition = Vec::new();
        for (alpha, al) in two_labels.iter().enumerate() {
            for (beta, bl) in two_labels.iter().enumerate() {
                if al.to == bl.from {
                    horizontal_composition.push((beta, alpha, two_index[&concat(al, bl)]));
                }
            }
        }

        let data = TwoCategoryData {
            objects: r + 1,
            one_cells,
            one_identities,
            one_composition,
            two_cells,
            two_identities,
            vertical_composition,
            horizontal_composition,
        };
        let cat = TwoCategory::from_data_unchecked(data).expect("suspension tables are well-formed");
        MultiSuspension {
            factors: factors.into_iter().map(MatSet::new).collect(),
            nerve: DuskinNerve::new(cat),
            one_labels,
            two_labels,
            one_index,
            two_index,
        }
    }

    /// `ΣD`, with objects `x = 0` and `y = 1`.
    pub fn suspension(d: FinCategory) -> Self {
        Self::new(vec![d])
    }

    pub fn r(&self) -> usize {
        self.factors.len()
    }

    pub fn factor(&self, i: usize) -> &MatSet {
        &self.factors[i]
    }

    pub fn factors(&self) -> &[MatSet] {
        &self.factors
    }

    pub fn category(&self) -> &TwoCategory {
        self.nerve.category()
    }

    pub fn nerve(&self) -> &DuskinNerve {
        &self.nerve
    }

    pub fn one_label(&self, f: usize) -> &CellLabel {
        &self.one_labels[f]
    }

    pub fn two_label(&self, a: usize) -> &CellLabel {
        &self.two_labels[a]
    }

    pub fn one_cell(&self, label: &CellLabel) -> Option<usize> {
        self.one_index.get(label).copied()
    }

    pub fn two_cell(&self, label: &CellLabel) -> Option<usize> {
        self.two_index.get(label).copied()
    }
}

/// The 2-category `ΣD`.
pub fn suspension(d: &FinCategory) -> TwoCategory {
    MultiSuspension::suspension(d.clone()).category().clone()
}

/// The 2-category `Σ[D_1, ..., D_r]`.
pub fn multi_suspension(ds: &[FinCategory]) -> TwoCategory {
    MultiSuspension::new(ds.to_vec()).category().clone()
}
