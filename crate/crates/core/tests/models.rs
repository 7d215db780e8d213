use duskin_core::duskin::{multi_suspension, nerve_simplices, MultiSuspension};
use duskin_core::fincat::{ordinal, product, FinCategory};
use duskin_core::freecell::{sigma, two_skeleton_face, verify_face_relations, SigmaIndex, SkeletonLabel};
use duskin_core::matset::MatSet;
use duskin_core::paths::{
    appendix_example, enumerate_shuffles, enumerate_triangulations, filter_constrained, labeled_triangulation_check,
    monotone_path, reconstruct_matrix, shuffle_to_triangulation, triangulation_to_shuffle, PathError, Shuffle,
    Triangulation,
};
use duskin_core::simplicial::check_identities;
use duskin_core::theta2::{count_nondegenerate, theta2_object, tuple_simplices, TupleSet};
use duskin_core::verify;

fn o(n: isize) -> FinCategory {
    ordinal(n).unwrap()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn catalan(n: usize) -> usize {
    binomial(2 * n, n) / (n + 1)
}

#[test]
fn point_matrices_are_the_interval() {
    let mat = MatSet::new(o(0));
    for n in 0..=10 {
        let all = mat.simplices(n);
        assert_eq!(all.len(), n + 2);
        let types: Vec<isize> = all.iter().map(|s| s.k()).collect();
        assert_eq!(types, (-1..=n as isize).collect::<Vec<_>>());
    }
}

#[test]
fn identities_over_the_standard_targets() {
    for d in [o(0), o(1), o(2), product(&o(1), &o(1))] {
        let r = verify::simplicial_identities(&d, 5);
        assert!(r.ok(), "{:?}", r.failures);
    }
}

#[test]
fn coskeletal_over_small_ordinals() {
    for d in [o(1), o(2)] {
        let r = verify::coskeletal(&d, 4);
        assert!(r.ok(), "{:?}", r.failures);
        assert_eq!(r.counts["spheres"], r.counts["simplices"]);
    }
}

#[test]
fn tuples_of_one_factor_are_matrices() {
    for n in 0..=4 {
        let tuples: Vec<_> = tuple_simplices(&[o(2)], n).into_iter().map(|t| t.into_parts().remove(0)).collect();
        assert_eq!(tuples, MatSet::new(o(2)).simplices(n));
    }
}

#[test]
fn tuple_counts_are_pinned() {
    let ds = [o(1), o(1)];
    let counts: Vec<usize> = (0..=3).map(|n| tuple_simplices(&ds, n).len()).collect();
    assert_eq!(counts, [3, 11, 42, 163]);
    assert_eq!(count_nondegenerate(&ds, 2), 23);
    let cell = multi_suspension(&ds);
    for (n, &count) in counts.iter().enumerate() {
        assert_eq!(nerve_simplices(&cell, n).unwrap().len(), count);
    }
}

#[test]
fn free_cell_has_two_nondegenerate_simplices() {
    assert_eq!(count_nondegenerate(&[o(0)], 0), 2);
    assert_eq!(count_nondegenerate(&[o(0)], 1), 1);
    assert_eq!(count_nondegenerate(&[o(0)], 2), 0);
    for n in 0..=6 {
        assert_eq!(count_nondegenerate(&[o(1)], n), 2);
    }
}

#[test]
fn tuple_faces_preserve_monotone_types() {
    let set = TupleSet::new(vec![o(1), o(1)]);
    for t in set.simplices(3) {
        for i in 0..=3 {
            let f = set.face(&t, i).unwrap();
            assert!(f.types().windows(2).all(|w| w[0] <= w[1]));
        }
    }
    check_identities(&TupleSet::new(vec![o(1), o(0), o(1)]), 4).unwrap();
}

#[test]
fn theta_objects() {
    let three = theta2_object(3, &[2, 0, 1]).unwrap();
    assert_eq!(three.iter().map(FinCategory::num_objects).collect::<Vec<_>>(), [3, 1, 2]);
    assert!(theta2_object(2, &[1]).is_err());
    let ms = MultiSuspension::new(theta2_object(1, &[1]).unwrap());
    assert_eq!(ms.category().num_two_cells(), 5);
}

#[test]
fn pullback_characterisation() {
    for ds in [vec![o(1), o(1)], vec![o(2), o(0)], vec![o(1), o(0), o(1)]] {
        for n in 0..=3 {
            let r = verify::pullback(&ds, n);
            assert!(r.ok(), "{:?}", r.failures);
        }
    }
}

#[test]
fn oracle_agreement_for_multi_suspensions() {
    for ds in [vec![o(1), o(1)], vec![o(2), o(0)], vec![o(1), o(0), o(1)]] {
        for n in 0..=4 {
            let r = verify::phi_oracle(&ds, n);
            assert!(r.ok(), "{:?}", r.failures);
        }
    }
}

#[test]
fn sigma_rows_and_columns_increase() {
    let mat = MatSet::new(o(1));
    for n in 1..=10 {
        for primed in [false, true] {
            let s = sigma(SigmaIndex::new(n, primed));
            assert!(mat.is_nondegenerate(&s));
            for a in 0..s.rows() {
                for b in 0..s.cols() {
                    if a + 1 < s.rows() {
                        assert!(s.entry(a, b) <= s.entry(a + 1, b));
                    }
                    if b >= 1 {
                        assert!(s.entry(a, b) <= s.entry(a, b - 1));
                    }
                }
            }
        }
    }
}

#[test]
fn face_relations_and_skeleton() {
    for m in 1..=4 {
        let r = verify_face_relations(m);
        assert!(r.holds(), "{:?}", r.failures);
    }
    assert!(verify::two_skeleton(4).ok());
    assert!(verify::freecell_uniqueness(8).ok());
    // 0 <= j - m <= i < k - m
    assert_eq!(two_skeleton_face(3, 1, 3, 5).unwrap(), SkeletonLabel::Sigma2);
    assert_eq!(two_skeleton_face(3, 0, 1, 2).unwrap(), SkeletonLabel::S0S0SigmaPrime0);
}

#[test]
fn shuffle_counts_and_ordinates() {
    for k in 0..=10 {
        for l in 0..=10 - k {
            let all = enumerate_shuffles(k, l);
            assert_eq!(all.len(), binomial(k + l, k));
            assert!(all.iter().all(Shuffle::has_ordinate_summation));
        }
    }
}

#[test]
fn triangulation_counts() {
    let counts: Vec<usize> = (1..=8).map(|n| enumerate_triangulations(n).len()).collect();
    assert_eq!(counts, (0..=7).map(catalan).collect::<Vec<_>>());
    assert_eq!(enumerate_triangulations(4).len(), 5);
    // T(n) = Σ_{p=1}^{n-1} T(p) T(n-p), T(1) = 1 for the lone edge
    let t = |n: usize| enumerate_triangulations(n).len();
    for n in 2..=8 {
        assert_eq!(t(n), (1..n).map(|p| t(p) * t(n - p)).sum::<usize>());
    }
    for n in 1..=8 {
        let all = enumerate_triangulations(n);
        for k in 0..n {
            assert_eq!(filter_constrained(&all, k).len(), binomial(n - 1, k));
        }
    }
}

#[test]
fn bijection_is_exhaustively_inverse() {
    for n in 2..=7 {
        let r = verify::bijection(n);
        assert!(r.ok(), "{:?}", r.failures);
    }
}

#[test]
fn appendix_triangulations_give_the_displayed_paths() {
    let ex = appendix_example().unwrap();
    assert_eq!(ex.shuffles, ["VHH", "HVH", "HHV"]);
    assert!(ex.matches());
    assert_eq!(ex.matrix[0], ["p02", "p01", "p00"]);
    assert_eq!(ex.matrix[1], ["p12", "p11", "p10"]);
    // left column and bottom row; middle column; top row and right column
    assert_eq!(ex.paths[0], ["p02", "p12", "p11", "p10"]);
    assert_eq!(ex.paths[1], ["p02", "p01", "p11", "p10"]);
    assert_eq!(ex.paths[2], ["p02", "p01", "p00", "p10"]);
}

#[test]
fn labeled_triangulations() {
    let mat = MatSet::new(o(1));
    let three = mat.simplices(3).into_iter().find(|s| s.k() == 1).unwrap();
    let displayed = Triangulation::new(3, [(0, 2, 3), (0, 1, 2)]).unwrap();
    assert!(labeled_triangulation_check(&three, &displayed));

    // every triangle of a fan meets its apex, the lone vertex on one side
    let bottom = mat.simplices(4).into_iter().find(|s| s.k() == 0).unwrap();
    let fan_from_first = Triangulation::new(4, [(0, 1, 2), (0, 2, 3), (0, 3, 4)]).unwrap();
    assert!(labeled_triangulation_check(&bottom, &fan_from_first));
    let top = mat.simplices(4).into_iter().find(|s| s.k() == 3).unwrap();
    let fan_from_last = Triangulation::new(4, [(0, 1, 4), (1, 2, 4), (2, 3, 4)]).unwrap();
    assert!(labeled_triangulation_check(&top, &fan_from_last));
    assert!(!labeled_triangulation_check(&top, &fan_from_first));

    let two = mat.simplices(4).into_iter().find(|s| s.k() == 2).unwrap();
    let low = Triangulation::new(4, [(0, 1, 2), (0, 2, 4), (2, 3, 4)]).unwrap();
    assert!(!labeled_triangulation_check(&two, &low));
    assert!(matches!(triangulation_to_shuffle(&low, 2), Err(PathError::Constraint(..))));
}

#[test]
fn square_path_and_reconstruction() {
    // a -φ-> b, a -ψ-> c, b -γ-> d, c -θ-> d
    let d = FinCategory::new(
        4,
        &[(0, 0), (1, 1), (2, 2), (3, 3), (0, 1), (1, 3), (0, 2), (2, 3), (0, 3)],
        vec![0, 1, 2, 3],
        &[(5, 4, 8), (7, 6, 8)],
    )
    .unwrap();
    let mat = MatSet::new(d.clone());
    let m = mat.from_thin_entries(&[vec![1, 0], vec![3, 2]]).unwrap();
    let top_then_right = Shuffle::from_steps("HV").unwrap();
    let path = monotone_path(&m, &top_then_right).unwrap();
    assert_eq!(path.objects, [0, 1, 3]);
    assert_eq!(path.arrows, [4, 5]);

    let all: Vec<_> =
        enumerate_shuffles(1, 1).into_iter().map(|s| (s.clone(), monotone_path(&m, &s).unwrap())).collect();
    assert_eq!(reconstruct_matrix(&d, 3, 1, &all).unwrap(), m);
    assert!(matches!(reconstruct_matrix(&d, 3, 1, &all[..1]), Err(PathError::Incomplete(_))));
    let mut clash = all.clone();
    clash[1].1.objects[0] = 2;
    assert!(matches!(reconstruct_matrix(&d, 3, 1, &clash), Err(PathError::Inconsistent(_))));
}

#[test]
fn single_row_reconstruction() {
    let mat = MatSet::new(o(2));
    let row = mat.simplices(4).into_iter().find(|s| s.k() == 0 && s.entries().iter().any(|&e| e != 0)).unwrap();
    let s = enumerate_shuffles(0, 3).remove(0);
    let path = monotone_path(&row, &s).unwrap();
    assert_eq!(reconstruct_matrix(mat.category(), 4, 0, &[(s, path)]).unwrap(), row);
}

#[test]
fn shuffle_triangulation_base_case() {
    for k in 0..2 {
        let s = enumerate_shuffles(k, 1 - k).remove(0);
        let t = shuffle_to_triangulation(&s, 2, k).unwrap();
        assert_eq!(t, enumerate_triangulations(2)[0]);
    }
}
