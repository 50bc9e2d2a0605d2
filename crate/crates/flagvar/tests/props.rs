//! Property tests: algebra laws that must hold for every input, checked on
//! randomized small cases.

use flagvar::{
    buchberger, build_root_system, enumerate_weyl, inversion_count, normal_form, rat,
    ratio, reflect, weyl_act, Family, Monomial, Polynomial, WeylElement,
    DEFAULT_WEYL_CAP,
};
use num::rational::BigRational;
use proptest::prelude::*;

/// A small rank-2 monomial of degree at most `max_degree`.
fn monomial2(max_degree: u16) -> impl Strategy<Value = Monomial> {
    (0..=max_degree).prop_flat_map(move |e0| {
        (Just(e0), 0..=(max_degree - e0)).prop_map(|(e0, e1)| Monomial::new(&[e0, e1]))
    })
}

/// A rank-2 polynomial with small integer coefficients and degree at most
/// `max_degree`.
fn poly2(max_degree: u16) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec((monomial2(max_degree), -6i64..=6), 0..5).prop_map(|terms| {
        Polynomial::from_terms(2, terms.into_iter().map(|(m, c)| (m, rat(c))))
    })
}

/// A small exact rational number.
fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=7).prop_map(|(n, d)| ratio(n, d))
}

fn a2_basis() -> flagvar::GroebnerBasis {
    let g1 = Polynomial::parse("a^2 + a*b + b^2", 2).unwrap();
    let g2 = Polynomial::parse("(a - b)*(2*a + b)*(2*b + a)", 2).unwrap();
    buchberger(&[g1, g2], 4).unwrap()
}

fn matrix_product(v: &[Vec<i64>], w: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = v.len();
    (0..n)
        .map(|r| (0..n).map(|c| (0..n).map(|k| v[r][k] * w[k][c]).sum()).collect())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_commutes_and_distributes(
        p in poly2(3),
        q in poly2(3),
        r in poly2(2),
    ) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn display_parse_round_trip(p in poly2(5)) {
        let text = p.to_string();
        let back = Polynomial::parse(&text, 2).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn grevlex_order_is_multiplicative(
        m1 in monomial2(4),
        m2 in monomial2(4),
        m in monomial2(3),
    ) {
        let direct = m1.cmp(&m2);
        let scaled = m1.mul(&m).cmp(&m2.mul(&m));
        prop_assert_eq!(direct, scaled);
    }

    #[test]
    fn reflections_are_involutions(
        letter in prop::sample::select(vec!['A', 'B', 'G']),
        x in rational(),
        y in rational(),
    ) {
        let rs = build_root_system(Family::from_letter(letter).unwrap(), 2).unwrap();
        let v = vec![x, y];
        for i in 0..2 {
            let twice = reflect(&rs, i, &reflect(&rs, i, &v));
            prop_assert_eq!(&twice, &v);
        }
    }

    #[test]
    fn weyl_action_composes_with_matrix_product(
        i in 0usize..6,
        j in 0usize..6,
        p in poly2(3),
    ) {
        let rs = build_root_system(Family::A, 2).unwrap();
        let weyl = enumerate_weyl(&rs, DEFAULT_WEYL_CAP).unwrap();
        let v = &weyl[i];
        let w = &weyl[j];
        let composite = WeylElement {
            action: matrix_product(&v.action, &w.action),
            length: 0,
            reduced_word: vec![],
        };
        prop_assert_eq!(
            weyl_act(v, &weyl_act(w, &p)),
            weyl_act(&composite, &p)
        );
    }

    #[test]
    fn normal_form_is_linear_and_multiplicative(
        p in poly2(2),
        q in poly2(2),
    ) {
        let gb = a2_basis();
        let nf = |x: &Polynomial| normal_form(&gb, x).unwrap();
        prop_assert_eq!(nf(&(&p + &q)), &nf(&p) + &nf(&q));
        // Multiplicativity holds after re-reducing the product of normal
        // forms, since the normal form is a ring map onto the quotient.
        prop_assert_eq!(nf(&(&p * &q)), nf(&(&nf(&p) * &nf(&q))));
    }

    #[test]
    fn normal_form_is_idempotent(p in poly2(4)) {
        let gb = a2_basis();
        let once = normal_form(&gb, &p).unwrap();
        let twice = normal_form(&gb, &once).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn inversion_counts_match_word_lengths(k in 0usize..8) {
        let rs = build_root_system(Family::B, 2).unwrap();
        let weyl = enumerate_weyl(&rs, DEFAULT_WEYL_CAP).unwrap();
        let w = &weyl[k];
        prop_assert_eq!(u32::from(inversion_count(&rs, w)), u32::from(w.length));
        prop_assert_eq!(w.reduced_word.len(), w.length as usize);
    }

    #[test]
    fn weyl_elements_permute_the_roots(k in 0usize..12) {
        let rs = build_root_system(Family::G, 2).unwrap();
        let weyl = enumerate_weyl(&rs, DEFAULT_WEYL_CAP).unwrap();
        let w = &weyl[k];
        let mut all = rs.all_roots();
        all.sort();
        let mut image: Vec<Vec<i64>> = all.iter().map(|r| w.apply_root(r)).collect();
        image.sort();
        prop_assert_eq!(image, all);
    }
}
