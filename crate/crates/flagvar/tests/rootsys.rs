//! Unit tests for root-system construction and Weyl-group enumeration.

use flagvar::{
    build_root_system, enumerate_weyl, enumerate_weyl_subgroup, exponents, form_roots,
    inversion_count, is_root, poincare_polynomial, positive_root_sum, rat, reflect_root,
    simple_reflection_matrix, weyl_order, Error, Family, WeylElement, DEFAULT_WEYL_CAP,
};

fn rs(letter: char, rank: usize) -> flagvar::RootSystem {
    build_root_system(Family::from_letter(letter).unwrap(), rank).unwrap()
}

#[test]
fn family_letters_round_trip() {
    for letter in ['A', 'B', 'C', 'D', 'G', 'F'] {
        assert_eq!(Family::from_letter(letter).unwrap().letter(), letter);
    }
    assert!(Family::from_letter('H').is_none());
    assert!(Family::from_letter('E').is_none());
}

#[test]
fn cartan_matrices_rank_two() {
    assert_eq!(rs('A', 2).cartan(), &[vec![2, -1], vec![-1, 2]]);
    // First node short in both doubly and triply laced rank-2 systems.
    assert_eq!(rs('B', 2).cartan(), &[vec![2, -2], vec![-1, 2]]);
    assert_eq!(rs('G', 2).cartan(), &[vec![2, -3], vec![-1, 2]]);
}

#[test]
fn cartan_matrices_higher_rank() {
    assert_eq!(
        rs('B', 3).cartan(),
        &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]
    );
    assert_eq!(
        rs('C', 3).cartan(),
        &[vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]
    );
    let d4 = rs('D', 4);
    assert_eq!(d4.cartan_entry(1, 3), -1);
    assert_eq!(d4.cartan_entry(3, 1), -1);
    assert_eq!(d4.cartan_entry(2, 3), 0);
    assert_eq!(
        rs('F', 4).cartan(),
        &[
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, 0],
            vec![0, -2, 2, -1],
            vec![0, 0, -1, 2]
        ]
    );
}

#[test]
fn c2_is_normalized_to_b2() {
    let c2 = rs('C', 2);
    assert_eq!(c2.family(), Family::B);
    assert_eq!(c2.cartan(), rs('B', 2).cartan());
    assert_eq!(c2.type_label(), "B");
    assert_eq!(c2.label(), "B2");
}

#[test]
fn type_labels() {
    assert_eq!(rs('A', 3).type_label(), "A");
    assert_eq!(rs('A', 3).label(), "A3");
    assert_eq!(rs('G', 2).type_label(), "G2");
    assert_eq!(rs('F', 4).type_label(), "F4");
}

#[test]
fn invalid_systems_are_rejected() {
    // D3 is fine (it coincides with A3); D2 is not connected, so it is out.
    let d3 = rs('D', 3);
    assert_eq!(d3.positive_roots().len(), 6);
    assert_eq!(weyl_order(&d3), 24);
    for (letter, rank) in [('A', 0), ('A', 9), ('B', 1), ('D', 2), ('G', 3), ('F', 3), ('G', 1)] {
        let family = Family::from_letter(letter).unwrap();
        match build_root_system(family, rank) {
            Err(Error::InvalidRootSystem { .. }) => {}
            other => panic!("expected InvalidRootSystem for {letter}{rank}, got {other:?}"),
        }
    }
}

#[test]
fn symmetrizers_distinguish_b_and_c() {
    let to_i64 = |v: &[num::rational::BigRational]| -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    };
    assert_eq!(to_i64(rs('A', 2).symmetrizer()), ["1", "1"]);
    assert_eq!(to_i64(rs('B', 2).symmetrizer()), ["1", "2"]);
    assert_eq!(to_i64(rs('G', 2).symmetrizer()), ["1", "3"]);
    assert_eq!(to_i64(rs('B', 3).symmetrizer()), ["2", "2", "1"]);
    assert_eq!(to_i64(rs('C', 3).symmetrizer()), ["1", "1", "2"]);
}

#[test]
fn positive_roots_rank_two_exact() {
    assert_eq!(rs('A', 2).positive_roots(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
    assert_eq!(
        rs('B', 2).positive_roots(),
        &[vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]]
    );
    assert_eq!(
        rs('G', 2).positive_roots(),
        &[vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1], vec![3, 1], vec![3, 2]]
    );
}

#[test]
fn positive_root_counts() {
    for (letter, rank, count) in [
        ('A', 3, 6),
        ('A', 5, 15),
        ('B', 3, 9),
        ('C', 3, 9),
        ('D', 4, 12),
        ('F', 4, 24),
    ] {
        let system = rs(letter, rank);
        assert_eq!(system.positive_roots().len(), count, "{letter}{rank}");
        assert_eq!(system.all_roots().len(), 2 * count, "{letter}{rank}");
    }
}

#[test]
fn root_membership() {
    let b2 = rs('B', 2);
    assert!(is_root(&b2, &[2, 1]));
    assert!(is_root(&b2, &[-1, -1]));
    assert!(!is_root(&b2, &[1, 2]));
    assert!(!is_root(&b2, &[0, 0]));
}

#[test]
fn simple_reflections_act_correctly() {
    // s_a(b) adds -cartan[0][1] copies of a to b.
    assert_eq!(reflect_root(&rs('A', 2), 0, &[0, 1]), vec![1, 1]);
    assert_eq!(reflect_root(&rs('B', 2), 0, &[0, 1]), vec![2, 1]);
    assert_eq!(reflect_root(&rs('G', 2), 0, &[0, 1]), vec![3, 1]);
    // A reflection negates its own simple root.
    assert_eq!(reflect_root(&rs('G', 2), 1, &[0, 1]), vec![0, -1]);
    // Involution.
    let g2 = rs('G', 2);
    for root in g2.positive_roots() {
        assert_eq!(reflect_root(&g2, 0, &reflect_root(&g2, 0, root)), *root);
    }
}

#[test]
fn invariant_form_values() {
    let b2 = rs('B', 2);
    assert_eq!(form_roots(&b2, &[1, 0], &[1, 0]), rat(2));
    assert_eq!(form_roots(&b2, &[0, 1], &[0, 1]), rat(4));
    assert_eq!(form_roots(&b2, &[1, 0], &[0, 1]), rat(-2));
    let g2 = rs('G', 2);
    assert_eq!(form_roots(&g2, &[1, 0], &[1, 0]), rat(2));
    assert_eq!(form_roots(&g2, &[0, 1], &[0, 1]), rat(6));
    assert_eq!(form_roots(&g2, &[1, 0], &[0, 1]), rat(-3));
    // The form is reflection invariant.
    for i in 0..2 {
        for gamma in g2.positive_roots() {
            for delta in g2.positive_roots() {
                assert_eq!(
                    form_roots(&g2, &reflect_root(&g2, i, gamma), &reflect_root(&g2, i, delta)),
                    form_roots(&g2, gamma, delta)
                );
            }
        }
    }
}

#[test]
fn exponents_and_orders() {
    assert_eq!(exponents(Family::A, 4), vec![1, 2, 3, 4]);
    assert_eq!(exponents(Family::B, 3), vec![1, 3, 5]);
    assert_eq!(exponents(Family::C, 3), vec![1, 3, 5]);
    assert_eq!(exponents(Family::D, 4), vec![1, 3, 3, 5]);
    assert_eq!(exponents(Family::G, 2), vec![1, 5]);
    assert_eq!(exponents(Family::F, 4), vec![1, 5, 7, 11]);

    assert_eq!(weyl_order(&rs('A', 2)), 6);
    assert_eq!(weyl_order(&rs('B', 2)), 8);
    assert_eq!(weyl_order(&rs('G', 2)), 12);
    assert_eq!(weyl_order(&rs('A', 3)), 24);
    assert_eq!(weyl_order(&rs('D', 4)), 192);
    assert_eq!(weyl_order(&rs('F', 4)), 1152);
    assert_eq!(weyl_order(&rs('A', 8)), 362880);
}

#[test]
fn poincare_polynomials() {
    assert_eq!(poincare_polynomial(&rs('A', 2)), vec![1, 2, 2, 1]);
    assert_eq!(poincare_polynomial(&rs('B', 2)), vec![1, 2, 2, 2, 1]);
    assert_eq!(poincare_polynomial(&rs('G', 2)), vec![1, 2, 2, 2, 2, 2, 1]);
    assert_eq!(poincare_polynomial(&rs('A', 3)), vec![1, 3, 5, 6, 5, 3, 1]);
    // Coefficients sum to the group order and are palindromic.
    for (letter, rank) in [('B', 3), ('C', 3), ('D', 4)] {
        let system = rs(letter, rank);
        let p = poincare_polynomial(&system);
        let total: u64 = p.iter().sum();
        assert_eq!(u128::from(total), weyl_order(&system));
        let mut rev = p.clone();
        rev.reverse();
        assert_eq!(p, rev);
    }
}

#[test]
fn positive_root_sums() {
    assert_eq!(positive_root_sum(&rs('A', 2)), vec![2, 2]);
    assert_eq!(positive_root_sum(&rs('B', 2)), vec![4, 3]);
    assert_eq!(positive_root_sum(&rs('G', 2)), vec![10, 6]);
}

#[test]
fn weyl_enumeration_is_complete_and_deterministic() {
    let a3 = rs('A', 3);
    let weyl = enumerate_weyl(&a3, DEFAULT_WEYL_CAP).unwrap();
    assert_eq!(weyl.len(), 24);
    // First element is the identity with an empty word.
    assert_eq!(weyl[0].action, WeylElement::identity(3).action);
    assert!(weyl[0].reduced_word.is_empty());
    // Words are reduced: the stored length is the inversion number.
    for w in &weyl {
        assert_eq!(w.length, inversion_count(&a3, w));
        assert_eq!(w.length as usize, w.reduced_word.len());
    }
    // Exactly one longest element, of length = number of positive roots.
    let top: Vec<_> = weyl.iter().filter(|w| w.length == 6).collect();
    assert_eq!(top.len(), 1);
    // Deterministic: a second enumeration gives identical words.
    let again = enumerate_weyl(&a3, DEFAULT_WEYL_CAP).unwrap();
    let words: Vec<_> = weyl.iter().map(|w| w.reduced_word.clone()).collect();
    let words2: Vec<_> = again.iter().map(|w| w.reduced_word.clone()).collect();
    assert_eq!(words, words2);
}

#[test]
fn weyl_elements_act_on_roots() {
    let a2 = rs('A', 2);
    let weyl = enumerate_weyl(&a2, DEFAULT_WEYL_CAP).unwrap();
    // Every element permutes the set of all roots.
    let mut all = a2.all_roots();
    all.sort();
    for w in &weyl {
        let mut image: Vec<Vec<i64>> = all.iter().map(|r| w.apply_root(r)).collect();
        image.sort();
        assert_eq!(image, all);
    }
}

#[test]
fn enumeration_cap_is_enforced() {
    let a8 = rs('A', 8);
    match enumerate_weyl(&a8, DEFAULT_WEYL_CAP) {
        Err(Error::WeylCapExceeded { order, cap }) => {
            assert_eq!(order, 362880);
            assert_eq!(cap, 51840);
        }
        other => panic!("expected WeylCapExceeded, got {other:?}"),
    }
    // A tiny explicit cap trips even for rank 2.
    assert!(matches!(
        enumerate_weyl(&rs('A', 2), 5),
        Err(Error::WeylCapExceeded { order: 6, cap: 5 })
    ));
}

#[test]
fn subgroup_enumeration_matches_levi_orders() {
    let b3 = rs('B', 3);
    // Generators {0, 1} span an A2 inside B3; {1, 2} a B2.
    let a2_part = enumerate_weyl_subgroup(&b3, &[0, 1], DEFAULT_WEYL_CAP).unwrap();
    assert_eq!(a2_part.len(), 6);
    let b2_part = enumerate_weyl_subgroup(&b3, &[1, 2], DEFAULT_WEYL_CAP).unwrap();
    assert_eq!(b2_part.len(), 8);
    let trivial = enumerate_weyl_subgroup(&b3, &[], DEFAULT_WEYL_CAP).unwrap();
    assert_eq!(trivial.len(), 1);
    // The subgroup walker honours the cap too.
    assert!(matches!(
        enumerate_weyl_subgroup(&b3, &[0, 1], 4),
        Err(Error::WeylCapExceeded { .. })
    ));
}

#[test]
fn reflection_matrices_match_reflect() {
    let g2 = rs('G', 2);
    for i in 0..2 {
        let m = simple_reflection_matrix(&g2, i);
        for root in g2.positive_roots() {
            let by_matrix: Vec<i64> = (0..2)
                .map(|r| (0..2).map(|c| m[r][c] * root[c]).sum())
                .collect();
            assert_eq!(by_matrix, reflect_root(&g2, i, root));
        }
    }
}
