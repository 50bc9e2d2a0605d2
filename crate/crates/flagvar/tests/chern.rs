//! Unit tests for tangent-bundle Chern classes and their relations.

use flagvar::{
    chern_json, chern_total, find_relations, full_report, parabolic_ring, rat, ratio,
    total_chern_product, weighted_monomials, CPolynomial, ChernJson, CohomologyRing,
    ParabolicSpec, Polynomial, DEFAULT_WEYL_CAP,
};

fn ring(spec: &str) -> CohomologyRing {
    let p = ParabolicSpec::parse(spec).unwrap();
    parabolic_ring(p, DEFAULT_WEYL_CAP).unwrap()
}

fn parse2(s: &str) -> Polynomial {
    Polynomial::parse(s, 2).unwrap()
}

#[test]
fn chern_classes_of_the_full_rank_two_flags() {
    let report = chern_total(&ring("A2")).unwrap();
    assert_eq!(report.chern_classes.len(), 3);
    assert_eq!(report.chern_classes[0], parse2("-2*a - 2*b"));
    assert_eq!(report.chern_classes[1], parse2("2*a*b"));
    assert_eq!(report.chern_classes[2], parse2("b^3"));
    assert_eq!(report.c1_coords, vec![rat(-2), rat(-2)]);
    // With more than one crossed node there is no canonical degree-one
    // generator.
    assert!(report.epsilon.is_none());
    assert!(report.c1_multiple.is_none());

    let b2 = chern_total(&ring("B2")).unwrap();
    assert_eq!(b2.c1_coords, vec![rat(-4), rat(-3)]);
    let g2 = chern_total(&ring("G2")).unwrap();
    assert_eq!(g2.c1_coords, vec![rat(-10), rat(-6)]);
}

#[test]
fn unreduced_total_chern_product() {
    // For the projective plane the omitted roots are -a and -(a+b), so the
    // product is (1 - a)(1 - a - b).
    let p = ParabolicSpec::parse("A2[crossed=1]").unwrap();
    let product = total_chern_product(&p);
    assert_eq!(product, parse2("(1 - a)*(1 - a - b)"));
}

#[test]
fn degree_one_generator_and_multiple() {
    for (spec, epsilon, multiple) in [
        ("A2[crossed=1]", vec![2, 1], -1),
        ("A2[crossed=2]", vec![1, 2], -1),
        ("B2[crossed=1]", vec![2, 1], -2),
        ("B2[crossed=2]", vec![1, 1], -3),
        ("G2[crossed=1]", vec![2, 1], -5),
        ("G2[crossed=2]", vec![3, 2], -3),
    ] {
        let report = chern_total(&ring(spec)).unwrap();
        assert_eq!(report.epsilon, Some(epsilon), "{spec}");
        assert_eq!(report.c1_multiple, Some(rat(multiple)), "{spec}");
        // c1 really is that multiple of epsilon.
        let eps = report.epsilon.as_ref().unwrap();
        for (i, coord) in report.c1_coords.iter().enumerate() {
            assert_eq!(*coord, rat(multiple * eps[i]), "{spec} coordinate {i}");
        }
    }
}

#[test]
fn projective_plane_relation_is_exact() {
    let r = ring("A2[crossed=1]");
    let report = full_report(&r, None, false).unwrap();
    let degree2: Vec<&flagvar::RelationSet> =
        report.relations.iter().filter(|s| s.degree == 2).collect();
    assert_eq!(degree2.len(), 1);
    assert!(!degree2[0].trivial);
    assert_eq!(degree2[0].relations.len(), 1);
    assert_eq!(degree2[0].relations[0].to_string(), "c2 - (1/3)*c1^2");
}

#[test]
fn three_dimensional_quadric_relations() {
    let report = full_report(&ring("B2[crossed=2]"), None, false).unwrap();
    let mut lines = Vec::new();
    for set in &report.relations {
        for rel in &set.relations {
            lines.push(format!("degree {}: {}", set.degree, rel));
        }
    }
    assert_eq!(
        lines,
        vec![
            "degree 2: c2 - (4/9)*c1^2",
            "degree 3: c3 - (2/27)*c1^3",
            "degree 3: c1*c2 - (4/9)*c1^3",
        ]
    );
}

#[test]
fn projective_three_space_relations() {
    let report = full_report(&ring("B2[crossed=1]"), None, false).unwrap();
    let mut lines = Vec::new();
    for set in &report.relations {
        for rel in &set.relations {
            lines.push(format!("degree {}: {}", set.degree, rel));
        }
    }
    assert_eq!(
        lines,
        vec![
            "degree 2: c2 - (3/8)*c1^2",
            "degree 3: c3 - (1/16)*c1^3",
            "degree 3: c1*c2 - (3/8)*c1^3",
        ]
    );
}

#[test]
fn five_dimensional_quadric_relations() {
    // The short-root parabolic of G2 is the five-dimensional quadric; its
    // tangent Chern numbers are classical: c = (1+h)^7 / (1+2h) with
    // c1 = 5h, so c2/c1^2 = 11/25, c3/c1^3 = 13/125, c4/c1^4 = 9/625,
    // c5/c1^5 = 3/3125.
    let report = full_report(&ring("G2[crossed=1]"), None, false).unwrap();
    let firsts: Vec<String> = report
        .relations
        .iter()
        .filter(|s| !s.relations.is_empty())
        .map(|s| s.relations[0].to_string())
        .collect();
    assert_eq!(firsts[0], "c2 - (11/25)*c1^2");
    assert_eq!(firsts[1], "c3 - (13/125)*c1^3");
    assert_eq!(firsts[2], "c4 - (9/625)*c1^4");
    assert_eq!(firsts[3], "c5 - (3/3125)*c1^5");
}

#[test]
fn trivial_degrees_are_suppressed_by_default() {
    let r = ring("A2[crossed=1]");
    let quiet = full_report(&r, None, false).unwrap();
    assert!(quiet.relations.iter().all(|s| !s.trivial));
    assert!(quiet.relations.iter().all(|s| s.degree <= 2));
    // Degree 3 exceeds the dimension: every weighted monomial vanishes.
    let loud = full_report(&r, Some(3), true).unwrap();
    let top = loud.relations.iter().find(|s| s.degree == 3).unwrap();
    assert!(top.trivial);
    assert!(!top.relations.is_empty());
}

#[test]
fn every_relation_evaluates_to_zero() {
    for spec in ["A2", "B2[crossed=1]", "G2[crossed=2]"] {
        let r = ring(spec);
        let report = full_report(&r, None, false).unwrap();
        for set in &report.relations {
            for rel in &set.relations {
                let value = rel.evaluate(&r, &report.chern_classes).unwrap();
                assert!(value.is_zero(), "{spec}: {rel} does not vanish");
            }
        }
    }
}

#[test]
fn weighted_monomial_enumeration() {
    // Weight of c_p is p. In two classes the weight-2 monomials are c2 and
    // c1^2, in ascending lexicographic exponent order.
    assert_eq!(weighted_monomials(2, 2), vec![vec![0, 1], vec![2, 0]]);
    assert_eq!(
        weighted_monomials(2, 3),
        vec![vec![1, 1], vec![3, 0]]
    );
    assert_eq!(weighted_monomials(3, 3), vec![vec![0, 0, 1], vec![1, 1, 0], vec![3, 0, 0]]);
    assert_eq!(weighted_monomials(2, 0), vec![vec![0, 0]]);
    // Total weight is respected.
    for exps in weighted_monomials(4, 6) {
        let weight: u32 = exps.iter().enumerate().map(|(p, &e)| (p as u32 + 1) * e).sum();
        assert_eq!(weight, 6);
    }
}

#[test]
fn c_polynomial_construction_and_rendering() {
    let p = CPolynomial::new(2, vec![(rat(1), vec![0, 1]), (ratio(-1, 3), vec![2, 0])]);
    assert_eq!(p.to_string(), "c2 - (1/3)*c1^2");
    assert_eq!(p.weighted_degree(), 2);
    assert_eq!(p.nvars(), 2);
    assert_eq!(p.terms().len(), 2);
    assert_eq!(p.to_latex(), "c_2 - \\tfrac{1}{3} \\, c_1^2");
    // Zero coefficients are dropped; the zero polynomial renders as 0.
    let z = CPolynomial::new(2, vec![(rat(0), vec![0, 1])]);
    assert_eq!(z.to_string(), "0");
    assert_eq!(z.weighted_degree(), 0);
}

#[test]
fn evaluation_uses_the_ring() {
    let r = ring("A2[crossed=1]");
    let report = chern_total(&r).unwrap();
    // c2 - (1/3) c1^2 must evaluate to zero on the projective plane.
    let rel = CPolynomial::new(2, vec![(rat(1), vec![0, 1]), (ratio(-1, 3), vec![2, 0])]);
    assert!(rel.evaluate(&r, &report.chern_classes).unwrap().is_zero());
    // c1^2 alone does not vanish (it is 9 times the point class… up to the
    // sign conventions, what matters here: nonzero).
    let square = CPolynomial::new(2, vec![(rat(1), vec![2, 0])]);
    assert!(!square.evaluate(&r, &report.chern_classes).unwrap().is_zero());
}

#[test]
fn relation_counts_match_excess_dimensions() {
    // The number of independent degree-d relations is the number of
    // weighted monomials minus the rank of their evaluation span.
    let r = ring("A2");
    let report = full_report(&r, None, false).unwrap();
    for set in &report.relations {
        let monomials = weighted_monomials(3, set.degree).len();
        assert!(set.relations.len() <= monomials, "degree {}", set.degree);
    }
    // find_relations with an explicit degree window matches the report.
    let direct = find_relations(&r, &report, r.dim() as u32 + 1, false).unwrap();
    assert_eq!(direct.len(), report.relations.len());
    for (a, b) in direct.iter().zip(&report.relations) {
        assert_eq!(a.degree, b.degree);
        let left: Vec<String> = a.relations.iter().map(|x| x.to_string()).collect();
        let right: Vec<String> = b.relations.iter().map(|x| x.to_string()).collect();
        assert_eq!(left, right);
    }
}

#[test]
fn json_report_round_trip() {
    let r = ring("B2[crossed=2]");
    let report = full_report(&r, None, false).unwrap();
    let json = chern_json(&r, &report);
    assert_eq!(json.spec, "B2[crossed=2]");
    assert_eq!(json.dim, 3);
    assert_eq!(json.diagram, "o<=x");
    assert_eq!(json.filtration, vec![3]);
    assert_eq!(json.chern_classes.len(), 3);
    assert_eq!(json.epsilon, Some(vec![1, 1]));
    assert_eq!(json.c1_multiple.as_deref(), Some("-3"));
    let text = serde_json::to_string(&json).unwrap();
    let back: ChernJson = serde_json::from_str(&text).unwrap();
    assert_eq!(back, json);
}
