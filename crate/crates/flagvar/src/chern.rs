//! Chern classes of the tangent bundle of a flag variety, the grading
//! weight `ε`, and polynomial relations among the Chern classes.
//!
//! The tangent bundle is filtered by root spaces, so its total Chern class
//! is the product `Π (1 + γ)` over the omitted roots `γ` (the negatives of
//! the nilradical roots), read inside the cohomology ring. Each graded
//! component is reduced to normal form; the degree-`p` component is the
//! `p`-th Chern class.
//!
//! For a parabolic with a single crossed node the degree-one cohomology is
//! the line cut out of root space by the uncrossed Cartan rows; `ε` is the
//! primitive integer generator of that line with positive leading
//! coordinate, and `c₁` is reported as the exact rational multiple of `ε`.
//!
//! Relations are found degree by degree with exact linear algebra: the
//! monomials in `c_1, …, c_n` of weighted degree `d` (weight of `c_p` is
//! `p`) are evaluated in the ring and the kernel of the evaluation map,
//! row-reduced, is the canonical relation set. Degrees above the variety's
//! dimension, where *every* monomial vanishes for reasons of grading
//! alone, are suppressed unless explicitly requested.

use std::fmt;

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cohomology::CohomologyRing;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, rref};
use crate::parabolic::{classify_roots, filtration_ranks, ParabolicSpec};
use crate::poly::{rat, Polynomial};

/// A polynomial in the Chern classes `c_1, …, c_n` with rational
/// coefficients. Terms are kept in ascending lexicographic order of the
/// exponent vector, which places the pure `c_1` power last.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CPolynomial {
    nvars: usize,
    /// `(coefficient, exponent vector)` pairs; `exps[p]` is the exponent
    /// of `c_{p+1}`.
    terms: Vec<(BigRational, Vec<u32>)>,
}

impl CPolynomial {
    /// Builds from coefficient/exponent pairs, dropping zero coefficients
    /// and sorting terms into the canonical order.
    pub fn new(nvars: usize, terms: Vec<(BigRational, Vec<u32>)>) -> CPolynomial {
        let mut terms: Vec<(BigRational, Vec<u32>)> = terms
            .into_iter()
            .filter(|(c, _)| !c.is_zero())
            .collect();
        for (_, e) in &terms {
            assert_eq!(e.len(), nvars);
        }
        terms.sort_by(|a, b| a.1.cmp(&b.1));
        CPolynomial { nvars, terms }
    }

    /// Number of Chern-class variables.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// The terms in canonical order.
    pub fn terms(&self) -> &[(BigRational, Vec<u32>)] {
        &self.terms
    }

    /// The weighted degree (weight of `c_p` is `p`); zero polynomial gives 0.
    pub fn weighted_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(_, e)| weighted_degree(e))
            .max()
            .unwrap_or(0)
    }

    /// Evaluates in the cohomology ring by substituting the actual Chern
    /// classes and reducing to normal form.
    pub fn evaluate(&self, ring: &CohomologyRing, classes: &[Polynomial]) -> Result<Polynomial> {
        assert_eq!(classes.len(), self.nvars);
        let rank = ring.parabolic().root_system().rank();
        let mut total = Polynomial::zero(rank);
        for (coeff, exps) in &self.terms {
            let mut term = Polynomial::constant(rank, coeff.clone());
            for (p, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term = &term * &classes[p];
                    term = ring.normal_form(&term)?;
                }
            }
            total = &total + &term;
        }
        ring.normal_form(&total)
    }

    /// LaTeX rendering with subscripted class names.
    pub fn to_latex(&self) -> String {
        render_c_polynomial(self, true)
    }
}

impl fmt::Display for CPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_c_polynomial(self, false))
    }
}

fn render_c_monomial(exps: &[u32], latex: bool) -> String {
    let mut out = String::new();
    for (p, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() && !latex {
            out.push('*');
        }
        if latex {
            out.push_str(&format!("c_{}", p + 1));
        } else {
            out.push_str(&format!("c{}", p + 1));
        }
        if e > 1 {
            out.push_str(&format!("^{}", e));
        }
    }
    out
}

fn render_c_polynomial(p: &CPolynomial, latex: bool) -> String {
    if p.terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (c, exps)) in p.terms.iter().enumerate() {
        let neg = c.is_negative();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        let mono = render_c_monomial(exps, latex);
        if mono.is_empty() {
            if mag.is_integer() {
                out.push_str(&mag.numer().to_string());
            } else if latex {
                out.push_str(&format!("\\tfrac{{{}}}{{{}}}", mag.numer(), mag.denom()));
            } else {
                out.push_str(&format!("({})", mag));
            }
            continue;
        }
        if !mag.is_one() {
            if mag.is_integer() {
                out.push_str(&mag.numer().to_string());
                out.push_str(if latex { " \\, " } else { "*" });
            } else if latex {
                out.push_str(&format!(
                    "\\tfrac{{{}}}{{{}}} \\, ",
                    mag.numer(),
                    mag.denom()
                ));
            } else {
                out.push_str(&format!("({})*", mag));
            }
        }
        out.push_str(&mono);
    }
    out
}

fn weighted_degree(exps: &[u32]) -> u32 {
    exps.iter()
        .enumerate()
        .map(|(p, &e)| (p as u32 + 1) * e)
        .sum()
}

/// The relations of one weighted degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationSet {
    /// Weighted degree of every relation in the set.
    pub degree: u32,
    /// True when the degree exceeds the variety's dimension, so every
    /// monomial vanishes outright and the relations carry no information.
    pub trivial: bool,
    /// Canonical (row-reduced) relation polynomials.
    pub relations: Vec<CPolynomial>,
}

/// Chern data of the tangent bundle of one flag variety.
#[derive(Clone, Debug)]
pub struct ChernReport {
    /// `c_1, …, c_dim` in normal form on the standard monomials.
    pub chern_classes: Vec<Polynomial>,
    /// Simple-root coordinates of `c_1` (always length rank).
    pub c1_coords: Vec<BigRational>,
    /// Primitive integer generator of the degree-one line, present exactly
    /// when one node is crossed; leading (first nonzero) coordinate is
    /// positive.
    pub epsilon: Option<Vec<i64>>,
    /// The exact rational `m` with `c_1 = m · ε`, when `ε` is present.
    pub c1_multiple: Option<BigRational>,
    /// Relation sets by weighted degree (possibly empty per degree).
    pub relations: Vec<RelationSet>,
}

/// Serializable form of a [`ChernReport`] plus identifying context.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernJson {
    pub spec: String,
    pub dim: usize,
    pub diagram: String,
    pub filtration: Vec<usize>,
    pub chern_classes: Vec<String>,
    pub c1_coords: Vec<String>,
    pub epsilon: Option<Vec<i64>>,
    pub c1_multiple: Option<String>,
    pub relations: Vec<RelationSetJson>,
}

/// Serializable form of a [`RelationSet`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationSetJson {
    pub degree: u32,
    pub trivial: bool,
    pub relations: Vec<String>,
}

/// The unreduced total Chern class `Π (1 + γ)` over the omitted roots.
pub fn total_chern_product(p: &ParabolicSpec) -> Polynomial {
    let rank = p.root_system().rank();
    let cls = classify_roots(p);
    let mut total = Polynomial::one(rank);
    for gamma in &cls.omitted {
        let factor = &Polynomial::one(rank) + &Polynomial::linear_form_i(rank, gamma);
        total = &total * &factor;
    }
    total
}

/// Chern classes and the `ε`-multiple data, without relations.
pub fn chern_total(ring: &CohomologyRing) -> Result<ChernReport> {
    let p = ring.parabolic();
    let rank = p.root_system().rank();
    let dim = ring.dim();
    let product = total_chern_product(p);
    let mut chern_classes = Vec::with_capacity(dim);
    for degree in 1..=dim as u32 {
        let reduced = ring.normal_form(&product.graded_component(degree))?;
        chern_classes.push(reduced);
    }
    let cls = classify_roots(p);
    let mut c1_int = vec![0i64; rank];
    for root in &cls.omitted {
        for (i, &c) in root.iter().enumerate() {
            c1_int[i] += c;
        }
    }
    let c1_coords: Vec<BigRational> = c1_int.iter().map(|&c| rat(c)).collect();
    let epsilon = epsilon_weight(p)?;
    let c1_multiple = match &epsilon {
        None => None,
        Some(eps) => Some(proportionality(&c1_int, eps)?),
    };
    Ok(ChernReport { chern_classes, c1_coords, epsilon, c1_multiple, relations: Vec::new() })
}

/// The primitive integer generator of the line annihilated by the
/// uncrossed Cartan rows, with positive leading coordinate — present
/// exactly when one node is crossed (otherwise the solution space is not a
/// line).
pub fn epsilon_weight(p: &ParabolicSpec) -> Result<Option<Vec<i64>>> {
    if p.crossed().len() != 1 {
        return Ok(None);
    }
    let rs = p.root_system();
    let rank = rs.rank();
    let rows: Vec<Vec<BigRational>> = p
        .uncrossed()
        .iter()
        .map(|&i| (0..rank).map(|j| rat(rs.cartan_entry(i, j))).collect())
        .collect();
    let kernel = kernel_basis(&rows, rank);
    if kernel.len() != 1 {
        return Err(Error::Internal(format!(
            "degree-one fixed space of {} has dimension {}, expected a line",
            p.spec_string(),
            kernel.len()
        )));
    }
    Ok(Some(primitive_integer_vector(&kernel[0])?))
}

/// Scales a nonzero rational vector to the primitive integer vector with
/// positive leading (first nonzero) coordinate.
fn primitive_integer_vector(v: &[BigRational]) -> Result<Vec<i64>> {
    let mut denominator_lcm = BigInt::one();
    for entry in v {
        denominator_lcm = denominator_lcm.lcm(entry.denom());
    }
    let scaled: Vec<BigInt> = v
        .iter()
        .map(|entry| (entry * BigRational::from_integer(denominator_lcm.clone())).to_integer())
        .collect();
    let mut gcd = BigInt::zero();
    for n in &scaled {
        gcd = gcd.gcd(n);
    }
    if gcd.is_zero() {
        return Err(Error::Internal("primitive vector of the zero vector".to_string()));
    }
    let mut ints: Vec<BigInt> = scaled.into_iter().map(|n| n / &gcd).collect();
    if let Some(first) = ints.iter().find(|n| !n.is_zero()) {
        if first.is_negative() {
            for n in &mut ints {
                *n = -n.clone();
            }
        }
    }
    ints.into_iter()
        .map(|n| {
            n.to_i64().ok_or_else(|| {
                Error::Internal("primitive vector coordinate exceeds i64".to_string())
            })
        })
        .collect()
}

/// The exact rational `m` with `numerator = m · denominator` coordinatewise.
fn proportionality(numerator: &[i64], denominator: &[i64]) -> Result<BigRational> {
    let k = denominator
        .iter()
        .position(|&c| c != 0)
        .ok_or_else(|| Error::Internal("proportionality against zero vector".to_string()))?;
    let m = BigRational::new(BigInt::from(numerator[k]), BigInt::from(denominator[k]));
    for i in 0..denominator.len() {
        if rat(numerator[i]) != m.clone() * rat(denominator[i]) {
            return Err(Error::Internal(
                "first Chern class is not a multiple of the grading weight".to_string(),
            ));
        }
    }
    Ok(m)
}

/// All exponent vectors in `n` variables with `Σ p · e_p = d` (weight of
/// variable `p` is `p`), in ascending lexicographic order.
pub fn weighted_monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    descend(&mut out, &mut current, n, d);
    out.sort_unstable();
    out
}

fn descend(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, var: usize, remaining: u32) {
    if var == 0 {
        if remaining == 0 {
            out.push(current.clone());
        }
        return;
    }
    let weight = var as u32;
    for e in 0..=remaining / weight {
        current[var - 1] = e;
        descend(out, current, var - 1, remaining - e * weight);
    }
    current[var - 1] = 0;
}

/// Finds all relations among the Chern classes through `max_degree`.
///
/// For each weighted degree the kernel of the exact evaluation map from
/// formal `c`-monomials to the ring is computed and row-reduced, giving a
/// canonical generating set of the degree-`d` relations. Degrees above the
/// variety's dimension are trivial (every monomial vanishes) and are
/// omitted unless `include_trivial` is set.
pub fn find_relations(
    ring: &CohomologyRing,
    report: &ChernReport,
    max_degree: u32,
    include_trivial: bool,
) -> Result<Vec<RelationSet>> {
    let dim = ring.dim() as u32;
    let n = report.chern_classes.len();
    let mut sets = Vec::new();
    if n == 0 {
        return Ok(sets);
    }
    for d in 1..=max_degree {
        let monomials = weighted_monomials(n, d);
        if monomials.is_empty() {
            continue;
        }
        if d > dim {
            // Everything of weighted degree above the dimension vanishes;
            // the relation space is spanned by the monomials themselves.
            if include_trivial {
                let relations = monomials
                    .iter()
                    .map(|e| {
                        CPolynomial::new(n, vec![(BigRational::one(), e.clone())])
                    })
                    .collect();
                sets.push(RelationSet { degree: d, trivial: true, relations });
            }
            continue;
        }
        let std = ring.std_monomials(d)?;
        let mut values: Vec<Vec<BigRational>> = Vec::with_capacity(monomials.len());
        for exps in &monomials {
            let mono = CPolynomial::new(n, vec![(BigRational::one(), exps.clone())]);
            let value = mono.evaluate(ring, &report.chern_classes)?;
            values.push(ring.coordinates(&value, d)?);
        }
        let all_zero = values
            .iter()
            .all(|v| v.iter().all(BigRational::is_zero));
        if all_zero {
            if include_trivial {
                let relations = monomials
                    .iter()
                    .map(|e| {
                        CPolynomial::new(n, vec![(BigRational::one(), e.clone())])
                    })
                    .collect();
                sets.push(RelationSet { degree: d, trivial: true, relations });
            }
            continue;
        }
        // Kernel of the evaluation map: unknowns are monomial coefficients,
        // one equation per standard-monomial coordinate.
        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(std.len());
        for r in 0..std.len() {
            rows.push(values.iter().map(|v| v[r].clone()).collect());
        }
        let mut kernel = kernel_basis(&rows, monomials.len());
        rref(&mut kernel);
        let relations: Vec<CPolynomial> = kernel
            .into_iter()
            .filter(|v| !v.iter().all(BigRational::is_zero))
            .map(|v| {
                CPolynomial::new(
                    n,
                    v.into_iter()
                        .zip(monomials.iter().cloned())
                        .map(|(c, e)| (c, e))
                        .collect(),
                )
            })
            .collect();
        sets.push(RelationSet { degree: d, trivial: false, relations });
    }
    Ok(sets)
}

/// Complete report: classes, `ε` data, and relations through `max_degree`
/// (default: dimension + 1, which exposes the first trivial degree to the
/// suppression rule and everything real below it).
pub fn full_report(
    ring: &CohomologyRing,
    max_degree: Option<u32>,
    include_trivial: bool,
) -> Result<ChernReport> {
    let mut report = chern_total(ring)?;
    let max_degree = max_degree.unwrap_or(ring.dim() as u32 + 1);
    report.relations = find_relations(ring, &report, max_degree, include_trivial)?;
    Ok(report)
}

/// Serializable form of the report.
pub fn chern_json(ring: &CohomologyRing, report: &ChernReport) -> ChernJson {
    let p = ring.parabolic();
    ChernJson {
        spec: p.spec_string(),
        dim: ring.dim(),
        diagram: p.dynkin_ascii(),
        filtration: filtration_ranks(p),
        chern_classes: report.chern_classes.iter().map(|c| c.to_string()).collect(),
        c1_coords: report.c1_coords.iter().map(|c| c.to_string()).collect(),
        epsilon: report.epsilon.clone(),
        c1_multiple: report.c1_multiple.as_ref().map(|m| m.to_string()),
        relations: report
            .relations
            .iter()
            .map(|set| RelationSetJson {
                degree: set.degree,
                trivial: set.trivial,
                relations: set.relations.iter().map(|r| r.to_string()).collect(),
            })
            .collect(),
    }
}
