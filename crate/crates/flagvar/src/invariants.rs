//! Weyl-invariant polynomials: Reynolds averaging and a fundamental set of
//! generators for the invariant ring.
//!
//! The invariant ring of a finite reflection group is a polynomial ring on
//! homogeneous generators whose degrees are the exponents plus one. The
//! generators are produced by Reynolds-averaging powers of a seed linear
//! form and certified algebraically independent by evaluating the Jacobian
//! determinant at explicit rational points: a nonzero value at any point is
//! a proof of independence. Since the candidate degrees are the Weyl
//! degrees and their product is the group order, independence forces the
//! candidates to generate the full invariant ring.
//!
//! Averaging a power of a *generic* linear form can still produce a
//! degenerate set for an unlucky seed, so the seed is perturbed
//! deterministically and the construction retried (a bounded number of
//! times) until the Jacobian witness succeeds.

use num::rational::BigRational;
use num::traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::det;
use crate::poly::{rat, ratio, weyl_act, Polynomial};
use crate::rootsys::{exponents, positive_root_sum, RootSystem, WeylElement};

/// Largest number of seed perturbations tried before giving up.
const MAX_SEED_ATTEMPTS: usize = 16;

/// The Reynolds operator: the average `(1/|group|) Σ_w w·p` of a polynomial
/// over an explicitly enumerated group. The result is invariant under every
/// element of the group.
pub fn reynolds(group: &[WeylElement], p: &Polynomial) -> Polynomial {
    assert!(!group.is_empty(), "cannot average over an empty group");
    let mut sum = Polynomial::zero(p.rank());
    for w in group {
        sum = &sum + &weyl_act(w, p);
    }
    sum.scale(&ratio(1, group.len() as i64))
}

/// A set of homogeneous fundamental invariants for the full Weyl group,
/// one per exponent, of degree exponent + 1, each monic. `weyl` must be
/// the complete enumeration of the Weyl group of `rs`.
pub fn fundamental_invariants(
    rs: &RootSystem,
    weyl: &[WeylElement],
) -> Result<Vec<Polynomial>> {
    fundamental_invariants_seeded(rs, weyl, 0)
}

/// [`fundamental_invariants`] with an explicit starting point for the seed
/// perturbation sequence, so a caller can demand a fresh generating set.
pub fn fundamental_invariants_seeded(
    rs: &RootSystem,
    weyl: &[WeylElement],
    seed: usize,
) -> Result<Vec<Polynomial>> {
    let rank = rs.rank();
    let degrees: Vec<u32> = exponents(rs.family(), rank)
        .iter()
        .map(|&m| m + 1)
        .collect();
    let base = positive_root_sum(rs);
    for attempt in seed..seed + MAX_SEED_ATTEMPTS {
        let coeffs: Vec<i64> = base
            .iter()
            .enumerate()
            .map(|(i, &c)| c + (attempt as i64) * (i as i64 + 1))
            .collect();
        let linear = Polynomial::linear_form_i(rank, &coeffs);
        let averages = averaged_powers(weyl, &linear, &degrees);
        let mut candidates = Vec::with_capacity(degrees.len());
        let mut degenerate = false;
        for averaged in averages {
            if averaged.is_zero() {
                degenerate = true;
                break;
            }
            candidates.push(averaged.monic());
        }
        if degenerate {
            continue;
        }
        if jacobian_witness(&candidates) {
            return Ok(candidates);
        }
    }
    Err(Error::Internal(format!(
        "no algebraically independent invariant set found for {} after {} seeds",
        rs.label(),
        MAX_SEED_ATTEMPTS
    )))
}

/// Reynolds averages of `linear^d` for each requested degree, computed in
/// one pass over the group: the image of the linear form under each element
/// is raised to successive powers incrementally (cheap multiplications by a
/// linear form) instead of acting on the expanded power.
fn averaged_powers(
    weyl: &[WeylElement],
    linear: &Polynomial,
    degrees: &[u32],
) -> Vec<Polynomial> {
    let rank = linear.rank();
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    let mut sums: Vec<Polynomial> = degrees.iter().map(|_| Polynomial::zero(rank)).collect();
    for w in weyl {
        let image = weyl_act(w, linear);
        let mut power = Polynomial::one(rank);
        for d in 1..=max_degree {
            power = &power * &image;
            for (slot, &want) in degrees.iter().enumerate() {
                if want == d {
                    sums[slot] = &sums[slot] + &power;
                }
            }
        }
    }
    let scale = ratio(1, weyl.len() as i64);
    sums.into_iter().map(|s| s.scale(&scale)).collect()
}

/// Tries to certify algebraic independence of `rank` polynomials in `rank`
/// variables: evaluates the Jacobian determinant at a short list of exact
/// rational points and accepts on the first nonzero value. (A nonzero
/// evaluation proves the Jacobian is not the zero polynomial, which proves
/// independence; failure at every point is merely inconclusive, and the
/// caller retries with a different seed.)
fn jacobian_witness(polys: &[Polynomial]) -> bool {
    let rank = polys.len();
    assert!(polys.iter().all(|p| p.rank() == rank));
    let jacobian: Vec<Vec<Polynomial>> = polys
        .iter()
        .map(|p| (0..rank).map(|i| p.partial_derivative(i)).collect())
        .collect();
    for point in witness_points(rank) {
        let matrix: Vec<Vec<BigRational>> = jacobian
            .iter()
            .map(|row| row.iter().map(|entry| entry.eval(&point)).collect())
            .collect();
        if !det(&matrix).is_zero() {
            return true;
        }
    }
    false
}

/// Deterministic evaluation points used by the Jacobian witness.
fn witness_points(rank: usize) -> Vec<Vec<BigRational>> {
    const PRIMES: [i64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];
    let ascending: Vec<BigRational> = (0..rank).map(|i| rat(i as i64 + 1)).collect();
    let harmonic: Vec<BigRational> = (0..rank).map(|i| ratio(1, i as i64 + 1)).collect();
    let primes: Vec<BigRational> = (0..rank).map(|i| rat(PRIMES[i])).collect();
    let alternating: Vec<BigRational> = (0..rank)
        .map(|i| {
            let v = i as i64 + 1;
            rat(if i % 2 == 0 { v } else { -v })
        })
        .collect();
    vec![ascending, harmonic, primes, alternating]
}
