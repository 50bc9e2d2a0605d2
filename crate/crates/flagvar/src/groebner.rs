//! Degree-truncated Gröbner bases for homogeneous ideals, with normal
//! forms and standard-monomial bases.
//!
//! Buchberger's algorithm is run degree by degree in grevlex order and cut
//! off above a truncation degree. For a *homogeneous* ideal this loses
//! nothing below the cutoff: every S-polynomial of generators is
//! homogeneous of the degree of the leading-term lcm, so discarding pairs
//! above the truncation cannot change normal forms or standard monomials
//! in degrees up to the truncation. Queries above the truncation are
//! rejected with [`Error::Truncated`] rather than answered wrongly.
//!
//! The final basis is *reduced* (minimal leading terms, every generator
//! monic and tail-reduced against the others), which makes it the unique
//! reduced Gröbner basis of the ideal through the truncation degree —
//! callers can compare ideals by comparing bases.

use std::collections::BTreeSet;

use num::traits::One;
use num::BigRational;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};

/// A reduced, degree-truncated Gröbner basis of a homogeneous ideal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroebnerBasis {
    rank: usize,
    /// Monic, tail-reduced generators sorted by ascending leading monomial.
    generators: Vec<Polynomial>,
    truncation_degree: u32,
}

impl GroebnerBasis {
    /// Number of variables.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The reduced basis, sorted by ascending leading monomial.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Degree through which the basis is complete.
    pub fn truncation_degree(&self) -> u32 {
        self.truncation_degree
    }

    /// Leading monomials of the basis, ascending.
    pub fn leading_terms(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .map(|g| g.leading().expect("basis elements are nonzero").0)
            .collect()
    }
}

/// Runs degree-truncated Buchberger on homogeneous generators.
///
/// Pairs are processed in ascending order of the degree of the leading-term
/// lcm (ties by generator indices). The product criterion drops pairs with
/// coprime leading terms. Errors with [`Error::NonHomogeneous`] if any
/// generator mixes degrees.
pub fn buchberger(generators: &[Polynomial], max_degree: u32) -> Result<GroebnerBasis> {
    buchberger_driven(generators, max_degree, None)
}

/// [`buchberger`] with a Hilbert-function shortcut.
///
/// `quotient_counts[d]` must be a valid *lower bound* on the number of
/// standard monomials of degree `d` of the ideal actually generated
/// (entries past the end count as zero). Degree-`d` standard-monomial
/// counts of any partial leading-term staircase can only shrink toward the
/// true count as basis elements are added, so the moment the count at
/// degree `d` reaches `quotient_counts[d]`, no further leading term of
/// degree `d` can appear, and every remaining pair with lcm degree `d`
/// must reduce to zero. Those pairs are skipped wholesale.
///
/// The shortcut never changes the result — only the work: with a bound
/// that is not also exact, it simply skips nothing. The intended use is an
/// ideal whose quotient dimensions are known in advance (here: invariant
/// ideals, bounded below by the Weyl length generating function because
/// the generators are genuine invariants).
pub fn buchberger_with_hilbert(
    generators: &[Polynomial],
    max_degree: u32,
    quotient_counts: &[u64],
) -> Result<GroebnerBasis> {
    buchberger_driven(generators, max_degree, Some(quotient_counts))
}

fn buchberger_driven(
    generators: &[Polynomial],
    max_degree: u32,
    quotient_counts: Option<&[u64]>,
) -> Result<GroebnerBasis> {
    assert!(!generators.is_empty(), "at least one generator is required");
    let rank = generators[0].rank();
    assert!(generators.iter().all(|g| g.rank() == rank));
    for g in generators {
        if !g.is_homogeneous() {
            return Err(Error::NonHomogeneous(g.to_string()));
        }
    }
    let mut basis: Vec<Polynomial> = Vec::new();
    // Pair queue keyed by (lcm degree, index, index); BTreeSet pops the
    // lowest degree first, making the run order deterministic.
    let mut pairs: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let push_element = |basis: &mut Vec<Polynomial>,
                            pairs: &mut BTreeSet<(u32, usize, usize)>,
                            p: Polynomial| {
        let (lm_new, _) = p.leading().expect("nonzero");
        let new_idx = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let (lm_i, _) = g.leading().expect("nonzero");
            // Product criterion: coprime leading terms reduce to zero.
            if lm_i.lcm(&lm_new) == lm_i.mul(&lm_new) {
                continue;
            }
            let deg = lm_i.lcm(&lm_new).degree();
            if deg <= max_degree {
                pairs.insert((deg, i, new_idx));
            }
        }
        basis.push(p);
    };
    for g in generators {
        if g.is_zero() {
            continue;
        }
        if g.degree() > max_degree {
            continue;
        }
        let reduced = reduce(g, &basis);
        if !reduced.is_zero() {
            push_element(&mut basis, &mut pairs, reduced.monic());
        }
    }
    // Cache for the staircase count at one degree; stale when the basis
    // grows or the queue moves on to another degree.
    let mut count_cache: Option<(u32, usize, u64)> = None;
    while let Some(&(deg, i, j)) = pairs.iter().next() {
        pairs.remove(&(deg, i, j));
        if deg > max_degree {
            // The queue is sorted by degree and S-polynomial remainders
            // never create pairs when every remaining pair is over the cap.
            break;
        }
        if let Some(counts) = quotient_counts {
            let target = counts.get(deg as usize).copied().unwrap_or(0);
            let current = match count_cache {
                Some((d, len, c)) if d == deg && len == basis.len() => c,
                _ => {
                    let c = staircase_count(rank, &basis, deg);
                    count_cache = Some((deg, basis.len(), c));
                    c
                }
            };
            if current == target {
                // The staircase at this degree is final; the remaining
                // pairs of this degree all reduce to zero.
                continue;
            }
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let remainder = reduce(&s, &basis);
        if !remainder.is_zero() {
            push_element(&mut basis, &mut pairs, remainder.monic());
        }
    }
    let generators = inter_reduce(basis)?;
    Ok(GroebnerBasis { rank, generators, truncation_degree: max_degree })
}

/// Number of degree-`degree` monomials outside the leading-term staircase
/// of a (partial) basis.
fn staircase_count(rank: usize, basis: &[Polynomial], degree: u32) -> u64 {
    let leading: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading().expect("nonzero").0)
        .collect();
    monomials_of_degree(rank, degree)
        .into_iter()
        .filter(|m| !leading.iter().any(|lt| lt.divides(m)))
        .count() as u64
}

/// The S-polynomial of two monic polynomials.
fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (lm_f, lc_f) = f.leading().expect("nonzero");
    let (lm_g, lc_g) = g.leading().expect("nonzero");
    let lcm = lm_f.lcm(&lm_g);
    let mf = lcm.div(&lm_f).expect("lcm divisible by leading monomial");
    let mg = lcm.div(&lm_g).expect("lcm divisible by leading monomial");
    let left = f.scale(&lc_f.recip());
    let right = g.scale(&lc_g.recip());
    let lift_f = &left * &Polynomial::from_monomial(mf, BigRational::one());
    let lift_g = &right * &Polynomial::from_monomial(mg, BigRational::one());
    &lift_f - &lift_g
}

/// Full normal form of `p` against an ordered list of nonzero polynomials:
/// the leading remaining term is repeatedly cancelled with the *first*
/// divisor in list order, and irreducible terms move to the output. The
/// divisor choice makes reduction deterministic.
fn reduce(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut out = Polynomial::zero(p.rank());
    let mut work = p.clone();
    'outer: while let Some((m, c)) = work.leading().map(|(m, c)| (m, c.clone())) {
        for g in basis {
            let (lm, lc) = g.leading().expect("nonzero");
            if let Some(q) = m.div(&lm) {
                work.add_scaled_in_place(g, &q, &(-&c / lc));
                continue 'outer;
            }
        }
        // No divisor: the term is in normal form.
        out.add_term(m, c.clone());
        work.add_term(m, -c);
    }
    out
}

/// Minimalizes and tail-reduces a basis, yielding the unique reduced basis
/// sorted by ascending leading monomial.
fn inter_reduce(mut basis: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
    basis.sort_by_key(|g| g.leading().expect("nonzero").0);
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading().expect("nonzero").0;
        if minimal
            .iter()
            .all(|h| !h.leading().expect("nonzero").0.divides(&lm))
        {
            minimal.push(g);
        }
    }
    // Tail-reduce to a fixpoint. Leading terms never change (they are
    // mutually indivisible), so termination is a formality, but cap the
    // loop anyway.
    for _ in 0..200 {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let reduced = reduce(&minimal[i], &others).monic();
            if reduced != minimal[i] {
                minimal[i] = reduced;
                changed = true;
            }
        }
        if !changed {
            minimal.sort_by_key(|g| g.leading().expect("nonzero").0);
            return Ok(minimal);
        }
    }
    Err(Error::Internal(
        "basis inter-reduction failed to reach a fixpoint".to_string(),
    ))
}

/// Normal form of `p` modulo the ideal: the unique representative supported
/// on standard monomials. Errors with [`Error::Truncated`] when `p` has
/// degree above the truncation (where the basis might be incomplete).
pub fn normal_form(gb: &GroebnerBasis, p: &Polynomial) -> Result<Polynomial> {
    assert_eq!(p.rank(), gb.rank);
    if p.degree() > gb.truncation_degree {
        return Err(Error::Truncated {
            truncation: gb.truncation_degree,
            needed: p.degree(),
        });
    }
    Ok(reduce(p, &gb.generators))
}

/// The standard monomials of one degree — monomials divisible by no basis
/// leading term — in *descending* grevlex order (the canonical basis-listing
/// order). Errors with [`Error::Truncated`] above the truncation degree.
pub fn standard_monomials(gb: &GroebnerBasis, degree: u32) -> Result<Vec<Monomial>> {
    if degree > gb.truncation_degree {
        return Err(Error::Truncated {
            truncation: gb.truncation_degree,
            needed: degree,
        });
    }
    let leading: Vec<Monomial> = gb.leading_terms();
    let mut result: Vec<Monomial> = monomials_of_degree(gb.rank, degree)
        .into_iter()
        .filter(|m| !leading.iter().any(|lt| lt.divides(m)))
        .collect();
    result.sort_unstable();
    result.reverse();
    Ok(result)
}

/// All monomials of one total degree in `rank` variables.
pub fn monomials_of_degree(rank: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; rank];
    fill(&mut out, &mut exps, 0, degree);
    out
}

fn fill(out: &mut Vec<Monomial>, exps: &mut Vec<u16>, var: usize, remaining: u32) {
    if var + 1 == exps.len() {
        exps[var] = remaining as u16;
        out.push(Monomial::new(exps));
        exps[var] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[var] = e as u16;
        fill(out, exps, var + 1, remaining - e);
    }
    exps[var] = 0;
}
