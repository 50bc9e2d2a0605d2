//! Simple root systems, their Weyl groups, and the invariant bilinear form.
//!
//! A [`RootSystem`] is built from a family letter and a rank. The data is
//! all integral or rational and is derived from the Cartan matrix alone:
//! the symmetrizer and bilinear form by propagation along the Dynkin
//! diagram, and the positive roots by closing the simple roots under
//! root-string addition. Weyl groups are enumerated explicitly (as integer
//! matrices acting on the simple-root basis) by breadth-first search, with
//! a hard cap on the group order so pathological requests fail fast.
//!
//! Conventions:
//! * The Cartan matrix entry `a[i][j]` is `⟨α_j, α_i^∨⟩`, so the simple
//!   reflection `s_i` sends `λ` to `λ − (Σ_j a[i][j] λ_j) α_i` when `λ` is
//!   written in simple-root coordinates.
//! * Node numbering follows the usual chain order; in family `B` the last
//!   node is the short root, in family `C` the last node is the long root,
//!   in rank 2 (`B2`, `G2`) the *first* node is the short root.
//! * `C2` names the same root system as `B2` and is normalized to it.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num::rational::BigRational;
use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::rat;

/// Default cap on the order of any Weyl group we agree to enumerate.
/// (The largest Weyl group among the built-in tests is F4, order 1152;
/// the cap equals the order of W(E6) and comfortably covers rank ≤ 5.)
pub const DEFAULT_WEYL_CAP: u128 = 51840;

/// The simple families supported here.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
    F,
}

impl Family {
    /// The family letter.
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::G => 'G',
            Family::F => 'F',
        }
    }

    /// Parses a family letter (case sensitive).
    pub fn from_letter(c: char) -> Option<Family> {
        match c {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'G' => Some(Family::G),
            'F' => Some(Family::F),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// An element of the Weyl group, stored as its action on the simple-root
/// basis: column `j` of `action` holds the simple-root coordinates of the
/// image of `α_{j+1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeylElement {
    /// Integer matrix of the action on simple-root coordinates.
    pub action: Vec<Vec<i64>>,
    /// Coxeter length (number of letters in any reduced word).
    pub length: u32,
    /// One reduced word, as 0-based simple-reflection indices.
    pub reduced_word: Vec<usize>,
}

impl WeylElement {
    /// The identity element.
    pub fn identity(rank: usize) -> WeylElement {
        let mut action = vec![vec![0i64; rank]; rank];
        for (i, row) in action.iter_mut().enumerate() {
            row[i] = 1;
        }
        WeylElement { action, length: 0, reduced_word: Vec::new() }
    }

    /// Applies the element to a vector with integer simple-root coordinates.
    pub fn apply_root(&self, coords: &[i64]) -> Vec<i64> {
        let rank = self.action.len();
        assert_eq!(coords.len(), rank);
        (0..rank)
            .map(|i| (0..rank).map(|j| self.action[i][j] * coords[j]).sum())
            .collect()
    }

    /// Applies the element to a vector with rational simple-root coordinates.
    pub fn apply(&self, coords: &[BigRational]) -> Vec<BigRational> {
        let rank = self.action.len();
        assert_eq!(coords.len(), rank);
        (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| rat(self.action[i][j]) * &coords[j])
                    .fold(BigRational::zero(), |acc, v| acc + v)
            })
            .collect()
    }
}

/// A simple root system of rank at most [`crate::poly::MAX_RANK`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<BigRational>,
    positive_roots: Vec<Vec<i64>>,
}

impl RootSystem {
    /// The family letter.
    pub fn family(&self) -> Family {
        self.family
    }

    /// The rank.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The Cartan matrix, `a[i][j] = ⟨α_j, α_i^∨⟩`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// One Cartan matrix entry.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    /// The diagonal symmetrizer `d`: `d_i · a[i][j]` is symmetric, entries
    /// are positive rationals normalized so the minimum is 1.
    pub fn symmetrizer(&self) -> &[BigRational] {
        &self.symmetrizer
    }

    /// Positive roots in simple-root coordinates, sorted by height and then
    /// by descending coordinate order (so `α_1` precedes `α_2`).
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// All roots: the positive roots followed by their negatives, in
    /// matching order.
    pub fn all_roots(&self) -> Vec<Vec<i64>> {
        let mut roots = self.positive_roots.clone();
        roots.extend(
            self.positive_roots
                .iter()
                .map(|r| r.iter().map(|&c| -c).collect::<Vec<i64>>()),
        );
        roots
    }

    /// Type label such as `A`, `B`, `D`, `G2`, `F4`.
    pub fn type_label(&self) -> String {
        match self.family {
            Family::G => "G2".to_string(),
            Family::F => "F4".to_string(),
            f => f.letter().to_string(),
        }
    }

    /// Compact label such as `A3` or `G2`.
    pub fn label(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }
}

/// Builds the root system for a family letter and rank.
///
/// `C2` is normalized to `B2` (they are the same root system). Errors with
/// [`Error::InvalidRootSystem`] when the pair is not a simple system of
/// rank 1 through 8.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    let label = format!("{}{}", family.letter(), rank);
    let invalid = |reason: &str| Error::InvalidRootSystem {
        label: label.clone(),
        reason: reason.to_string(),
    };
    if rank == 0 || rank > crate::poly::MAX_RANK {
        return Err(invalid("rank must be between 1 and 8"));
    }
    let family = match (family, rank) {
        (Family::A, _) => Family::A,
        (Family::B, r) if r >= 2 => Family::B,
        (Family::B, _) => return Err(invalid("family B requires rank at least 2")),
        // C2 and B2 name the same root system; normalize to B.
        (Family::C, 2) => Family::B,
        (Family::C, r) if r >= 3 => Family::C,
        (Family::C, _) => return Err(invalid("family C requires rank at least 2")),
        (Family::D, r) if r >= 3 => Family::D,
        (Family::D, _) => return Err(invalid("family D requires rank at least 3")),
        (Family::G, 2) => Family::G,
        (Family::G, _) => return Err(invalid("G exists in rank 2 only")),
        (Family::F, 4) => Family::F,
        (Family::F, _) => return Err(invalid("F exists in rank 4 only")),
    };
    let cartan = cartan_matrix(family, rank);
    let symmetrizer = symmetrizer(&cartan)?;
    let positive_roots = close_positive_roots(&cartan);
    let expected = expected_positive_count(family, rank);
    if positive_roots.len() != expected {
        return Err(Error::Internal(format!(
            "{} closed to {} positive roots, expected {}",
            label,
            positive_roots.len(),
            expected
        )));
    }
    Ok(RootSystem { family, rank, cartan, symmetrizer, positive_roots })
}

fn cartan_matrix(family: Family, rank: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    // Simply laced chain edges first; families with a multiple edge then
    // overwrite one entry.
    let chain = |a: &mut Vec<Vec<i64>>| {
        for i in 0..rank.saturating_sub(1) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    match family {
        Family::A => chain(&mut a),
        Family::B => {
            if rank == 2 {
                // First node short: s_1(α_2) = α_2 + 2 α_1.
                a[0][1] = -2;
                a[1][0] = -1;
            } else {
                chain(&mut a);
                // Last node short.
                a[rank - 1][rank - 2] = -2;
            }
        }
        Family::C => {
            chain(&mut a);
            // Last node long.
            a[rank - 2][rank - 1] = -2;
        }
        Family::D => {
            for i in 0..rank - 2 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            a[rank - 3][rank - 1] = -1;
            a[rank - 1][rank - 3] = -1;
        }
        Family::G => {
            // First node short: s_1(α_2) = α_2 + 3 α_1.
            a[0][1] = -3;
            a[1][0] = -1;
        }
        Family::F => {
            a = vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2],
            ];
        }
    }
    a
}

/// Solves `d_i a[i][j] = d_j a[j][i]` along the (connected) diagram and
/// normalizes the minimum entry to 1.
fn symmetrizer(cartan: &[Vec<i64>]) -> Result<Vec<BigRational>> {
    let rank = cartan.len();
    let mut d: Vec<Option<BigRational>> = vec![None; rank];
    d[0] = Some(BigRational::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let di = d[i].clone().expect("queued nodes are assigned");
        for j in 0..rank {
            if i == j || cartan[i][j] == 0 || d[j].is_some() {
                continue;
            }
            d[j] = Some(di.clone() * rat(cartan[i][j]) / rat(cartan[j][i]));
            queue.push_back(j);
        }
    }
    let mut values = Vec::with_capacity(rank);
    for entry in d {
        values.push(entry.ok_or_else(|| {
            Error::Internal("Dynkin diagram is not connected".to_string())
        })?);
    }
    let min = values.iter().min().expect("rank >= 1").clone();
    for v in &mut values {
        *v /= min.clone();
    }
    for i in 0..rank {
        for j in 0..rank {
            if values[i].clone() * rat(cartan[i][j]) != values[j].clone() * rat(cartan[j][i]) {
                return Err(Error::Internal(
                    "symmetrizer does not symmetrize the Cartan matrix".to_string(),
                ));
            }
        }
    }
    Ok(values)
}

/// Closes the simple roots under root-string addition, height by height.
///
/// For a known positive root `γ` and simple root `α_i`, the `α_i`-string
/// through `γ` has `q = p − ⟨γ, α_i^∨⟩` steps upward, where `p` is the
/// number of steps downward that stay roots. `γ + α_i` is a root exactly
/// when `q ≥ 1`.
fn close_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = cartan.len();
    let mut known: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut level: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut simple = vec![0i64; rank];
        simple[i] = 1;
        known.insert(simple.clone());
        level.push(simple);
    }
    while !level.is_empty() {
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for gamma in &level {
            for i in 0..rank {
                // p: steps downward from γ along α_i that remain roots.
                let mut p = 0i64;
                let mut probe = gamma.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                // ⟨γ, α_i^∨⟩ = Σ_j a[i][j] γ_j.
                let pairing: i64 = (0..rank).map(|j| cartan[i][j] * gamma[j]).sum();
                if p - pairing >= 1 {
                    let mut up = gamma.clone();
                    up[i] += 1;
                    if !known.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        level = next.into_iter().collect();
        for r in &level {
            known.insert(r.clone());
        }
    }
    let mut roots: Vec<Vec<i64>> = known.into_iter().collect();
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    roots
}

fn expected_positive_count(family: Family, rank: usize) -> usize {
    match family {
        Family::A => rank * (rank + 1) / 2,
        Family::B | Family::C => rank * rank,
        Family::D => rank * (rank - 1),
        Family::G => 6,
        Family::F => 24,
    }
}

/// The exponents `m_1 ≤ … ≤ m_r` of the Weyl group (sorted ascending).
/// The degrees of the fundamental invariants are `m_i + 1` and the group
/// order is `Π (m_i + 1)`.
pub fn exponents(family: Family, rank: usize) -> Vec<u32> {
    let rank32 = rank as u32;
    let mut exps: Vec<u32> = match family {
        Family::A => (1..=rank32).collect(),
        Family::B | Family::C => (0..rank32).map(|i| 2 * i + 1).collect(),
        Family::D => {
            let mut v: Vec<u32> = (0..rank32 - 1).map(|i| 2 * i + 1).collect();
            v.push(rank32 - 1);
            v
        }
        Family::G => vec![1, 5],
        Family::F => vec![1, 5, 7, 11],
    };
    exps.sort_unstable();
    exps
}

/// The order of the Weyl group, `Π (m_i + 1)` over the exponents.
pub fn weyl_order(rs: &RootSystem) -> u128 {
    exponents(rs.family, rs.rank)
        .iter()
        .map(|&m| u128::from(m) + 1)
        .product()
}

/// Coefficients of the Poincaré polynomial `Σ_w t^{ℓ(w)} = Π_i (1 + t + … +
/// t^{m_i})`, index `d` giving the number of elements of length `d`.
pub fn poincare_polynomial(rs: &RootSystem) -> Vec<u64> {
    let mut coeffs = vec![1u64];
    for m in exponents(rs.family, rs.rank) {
        let block = m as usize + 1;
        let mut next = vec![0u64; coeffs.len() + block - 1];
        for (i, &c) in coeffs.iter().enumerate() {
            for j in 0..block {
                next[i + j] += c;
            }
        }
        coeffs = next;
    }
    coeffs
}

/// The simple reflection `s_{i+1}` applied to rational simple-root
/// coordinates: only coordinate `i` changes,
/// `λ_i ← λ_i − Σ_j a[i][j] λ_j`.
pub fn reflect(rs: &RootSystem, i: usize, coords: &[BigRational]) -> Vec<BigRational> {
    assert!(i < rs.rank);
    assert_eq!(coords.len(), rs.rank);
    let pairing = (0..rs.rank)
        .map(|j| rat(rs.cartan[i][j]) * &coords[j])
        .fold(BigRational::zero(), |acc, v| acc + v);
    let mut out = coords.to_vec();
    out[i] = &out[i] - &pairing;
    out
}

/// [`reflect`] for integer coordinates (roots stay integral).
pub fn reflect_root(rs: &RootSystem, i: usize, coords: &[i64]) -> Vec<i64> {
    assert!(i < rs.rank);
    assert_eq!(coords.len(), rs.rank);
    let pairing: i64 = (0..rs.rank).map(|j| rs.cartan[i][j] * coords[j]).sum();
    let mut out = coords.to_vec();
    out[i] -= pairing;
    out
}

/// The Weyl-invariant bilinear form on rational simple-root coordinates:
/// `B(λ, μ) = Σ_{i,j} λ_i d_i a[i][j] μ_j`.
pub fn form(rs: &RootSystem, lambda: &[BigRational], mu: &[BigRational]) -> BigRational {
    assert_eq!(lambda.len(), rs.rank);
    assert_eq!(mu.len(), rs.rank);
    let mut total = BigRational::zero();
    for i in 0..rs.rank {
        for j in 0..rs.rank {
            total += &lambda[i] * &rs.symmetrizer[i] * rat(rs.cartan[i][j]) * &mu[j];
        }
    }
    total
}

/// [`form`] for integer coordinate vectors.
pub fn form_roots(rs: &RootSystem, gamma: &[i64], delta: &[i64]) -> BigRational {
    let g: Vec<BigRational> = gamma.iter().map(|&c| rat(c)).collect();
    let d: Vec<BigRational> = delta.iter().map(|&c| rat(c)).collect();
    form(rs, &g, &d)
}

/// The matrix of the simple reflection `s_{i+1}` on the simple-root basis
/// (column `j` is the image of `α_{j+1}`).
pub fn simple_reflection_matrix(rs: &RootSystem, i: usize) -> Vec<Vec<i64>> {
    let rank = rs.rank;
    let mut m = vec![vec![0i64; rank]; rank];
    for j in 0..rank {
        m[j][j] = 1;
    }
    for j in 0..rank {
        m[i][j] -= rs.cartan[i][j];
    }
    m
}

fn matrix_product(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = (0..n).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

/// Number of positive roots sent negative by `w`; equals the Coxeter length.
pub fn inversion_count(rs: &RootSystem, w: &WeylElement) -> u32 {
    rs.positive_roots
        .iter()
        .filter(|gamma| w.apply_root(gamma).iter().all(|&c| c <= 0))
        .count() as u32
}

/// Enumerates the full Weyl group.
///
/// The group order is computed from the exponents first; when it exceeds
/// `cap` the function returns [`Error::WeylCapExceeded`] without starting
/// the search. On success the elements come back in breadth-first order
/// (by length, then by discovery order), starting with the identity, and
/// the element count is cross-checked against the order formula.
pub fn enumerate_weyl(rs: &RootSystem, cap: u128) -> Result<Vec<WeylElement>> {
    let order = weyl_order(rs);
    if order > cap {
        return Err(Error::WeylCapExceeded { order, cap });
    }
    let generators: Vec<usize> = (0..rs.rank).collect();
    let elements = bfs_closure(rs, &generators, None)?;
    if elements.len() as u128 != order {
        return Err(Error::Internal(format!(
            "Weyl enumeration found {} elements, order formula says {}",
            elements.len(),
            order
        )));
    }
    Ok(elements)
}

/// Enumerates the reflection subgroup generated by a subset of the simple
/// reflections (0-based indices). The subgroup order is not known in
/// advance, so the cap is enforced during the search.
pub fn enumerate_weyl_subgroup(
    rs: &RootSystem,
    generators: &[usize],
    cap: u128,
) -> Result<Vec<WeylElement>> {
    let mut gens: Vec<usize> = generators.to_vec();
    gens.sort_unstable();
    gens.dedup();
    assert!(gens.iter().all(|&g| g < rs.rank), "generator index out of range");
    bfs_closure(rs, &gens, Some(cap))
}

/// Breadth-first closure under right multiplication by the given simple
/// reflections. Deterministic: the frontier is processed in discovery
/// order and generators in ascending index order, so `reduced_word` is the
/// lexicographically least reduced word for each element.
fn bfs_closure(
    rs: &RootSystem,
    generators: &[usize],
    cap: Option<u128>,
) -> Result<Vec<WeylElement>> {
    let gen_matrices: BTreeMap<usize, Vec<Vec<i64>>> = generators
        .iter()
        .map(|&g| (g, simple_reflection_matrix(rs, g)))
        .collect();
    let identity = WeylElement::identity(rs.rank);
    let mut seen: BTreeSet<Vec<Vec<i64>>> = BTreeSet::from([identity.action.clone()]);
    let mut elements = vec![identity];
    let mut frontier: Vec<usize> = vec![0];
    while !frontier.is_empty() {
        let mut next_frontier = Vec::new();
        for &idx in &frontier {
            let parent_action = elements[idx].action.clone();
            let parent_length = elements[idx].length;
            let parent_word = elements[idx].reduced_word.clone();
            for (&g, matrix) in &gen_matrices {
                let product = matrix_product(&parent_action, matrix);
                if seen.contains(&product) {
                    continue;
                }
                if let Some(limit) = cap {
                    if elements.len() as u128 >= limit {
                        return Err(Error::WeylCapExceeded {
                            order: elements.len() as u128 + 1,
                            cap: limit,
                        });
                    }
                }
                seen.insert(product.clone());
                let mut word = parent_word.clone();
                word.push(g);
                next_frontier.push(elements.len());
                elements.push(WeylElement {
                    action: product,
                    length: parent_length + 1,
                    reduced_word: word,
                });
            }
        }
        frontier = next_frontier;
    }
    Ok(elements)
}

/// Sum of the positive roots (`2ρ`) in simple-root coordinates.
pub fn positive_root_sum(rs: &RootSystem) -> Vec<i64> {
    let mut sum = vec![0i64; rs.rank];
    for root in &rs.positive_roots {
        for (i, &c) in root.iter().enumerate() {
            sum[i] += c;
        }
    }
    sum
}

/// True when the integer coordinate vector is one of the roots.
pub fn is_root(rs: &RootSystem, coords: &[i64]) -> bool {
    if coords.iter().all(|&c| c >= 0) {
        rs.positive_roots.iter().any(|r| r == coords)
    } else if coords.iter().all(|&c| c <= 0) {
        let neg: Vec<i64> = coords.iter().map(|&c| -c).collect();
        rs.positive_roots.iter().any(|r| r == &neg)
    } else {
        false
    }
}
