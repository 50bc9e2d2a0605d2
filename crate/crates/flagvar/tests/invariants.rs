//! Unit tests for Reynolds averaging and fundamental Weyl invariants.

use flagvar::{
    build_root_system, enumerate_weyl, fundamental_invariants, fundamental_invariants_seeded,
    reynolds, weyl_act, weyl_order, Family, Polynomial, DEFAULT_WEYL_CAP,
};
use num::traits::One;

fn setup(letter: char, rank: usize) -> (flagvar::RootSystem, Vec<flagvar::WeylElement>) {
    let rs = build_root_system(Family::from_letter(letter).unwrap(), rank).unwrap();
    let weyl = enumerate_weyl(&rs, DEFAULT_WEYL_CAP).unwrap();
    (rs, weyl)
}

#[test]
fn reynolds_of_a_square() {
    let (_, weyl) = setup('A', 2);
    let p = Polynomial::parse("a^2", 2).unwrap();
    let avg = reynolds(&weyl, &p);
    assert_eq!(avg, Polynomial::parse("(2/3)*a^2 + (2/3)*a*b + (2/3)*b^2", 2).unwrap());
}

#[test]
fn reynolds_is_an_idempotent_projection() {
    let (_, weyl) = setup('B', 2);
    for src in ["a^2", "a*b", "a^3 + b^3", "a^4"] {
        let p = Polynomial::parse(src, 2).unwrap();
        let avg = reynolds(&weyl, &p);
        assert_eq!(reynolds(&weyl, &avg), avg, "averaging twice must equal once");
    }
}

#[test]
fn reynolds_output_is_invariant() {
    let (_, weyl) = setup('G', 2);
    let p = Polynomial::parse("a^2 + 3*b", 2).unwrap();
    let avg = reynolds(&weyl, &p);
    for w in &weyl {
        assert_eq!(weyl_act(w, &avg), avg);
    }
}

#[test]
fn fundamental_invariants_have_the_right_degrees() {
    for (letter, rank, degrees) in [
        ('A', 2, vec![2, 3]),
        ('B', 2, vec![2, 4]),
        ('G', 2, vec![2, 6]),
        ('A', 3, vec![2, 3, 4]),
        ('B', 3, vec![2, 4, 6]),
        ('C', 3, vec![2, 4, 6]),
    ] {
        let (rs, weyl) = setup(letter, rank);
        let invs = fundamental_invariants(&rs, &weyl).unwrap();
        let got: Vec<u32> = invs.iter().map(Polynomial::degree).collect();
        assert_eq!(got, degrees, "{letter}{rank}");
        // Degrees multiply to the group order (Chevalley).
        let product: u128 = got.iter().map(|&d| u128::from(d)).product();
        assert_eq!(product, weyl_order(&rs), "{letter}{rank}");
        for p in &invs {
            assert!(p.is_homogeneous());
            // Generators are normalized monic.
            assert!(p.leading().unwrap().1.is_one(), "{letter}{rank}: {p}");
        }
    }
}

#[test]
fn fundamental_invariants_are_weyl_fixed() {
    for (letter, rank) in [('A', 2), ('B', 2), ('G', 2), ('B', 3)] {
        let (rs, weyl) = setup(letter, rank);
        let invs = fundamental_invariants(&rs, &weyl).unwrap();
        for p in &invs {
            for w in &weyl {
                assert_eq!(weyl_act(w, p), *p, "{letter}{rank}: {p} moved");
            }
        }
    }
}

#[test]
fn seeded_invariants_are_also_valid() {
    // Different seeds may pick different power sums, but each choice must be
    // invariant, of the same degrees, and algebraically independent (which
    // the constructor itself certifies via a Jacobian check).
    let (rs, weyl) = setup('A', 2);
    let base = fundamental_invariants(&rs, &weyl).unwrap();
    for seed in [16, 32] {
        let invs = fundamental_invariants_seeded(&rs, &weyl, seed).unwrap();
        assert_eq!(invs.len(), base.len());
        for (p, q) in invs.iter().zip(&base) {
            assert_eq!(p.degree(), q.degree());
            for w in &weyl {
                assert_eq!(weyl_act(w, p), *p);
            }
        }
    }
}

#[test]
fn degree_two_invariant_is_the_quadratic_form() {
    // In rank 2 the degree-2 invariant is unique up to scale, so both the
    // averaging construction and the invariant bilinear form must land on
    // proportional quadratics.
    let (rs, weyl) = setup('A', 2);
    let invs = fundamental_invariants(&rs, &weyl).unwrap();
    let quadratic = &invs[0];
    let reference = Polynomial::parse("a^2 + a*b + b^2", 2).unwrap();
    assert_eq!(quadratic.monic(), reference.monic());
}
