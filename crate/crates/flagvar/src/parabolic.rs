//! Parabolic subalgebra data: crossed Dynkin diagrams, root partitions,
//! the grading element pairing, and nilradical filtrations.
//!
//! A parabolic is specified by crossing out a subset of the nodes of the
//! Dynkin diagram. Roots split into the *Levi* roots (those with zero
//! coefficient on every crossed simple root), the *nilradical* roots
//! (positive roots with a positive coefficient on some crossed node), and
//! their negatives, the *omitted* roots — the roots whose root spaces are
//! left out of the parabolic.
//!
//! The text form is `<TYPE><RANK>[crossed=<i,j,…>]` with 1-based node
//! numbers, e.g. `B2[crossed=1]`; omitting the bracket (`A3`) crosses
//! every node (the Borel case, i.e. the full flag variety).

use std::collections::BTreeSet;
use std::fmt;

use num::rational::BigRational;
use num::traits::Zero;

use crate::error::{Error, Result};
use crate::poly::ratio;
use crate::rootsys::{build_root_system, form, Family, RootSystem};

/// A root system together with a crossed subset of its Dynkin nodes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParabolicSpec {
    root_system: RootSystem,
    /// Crossed nodes, 0-based, sorted, deduplicated.
    crossed: Vec<usize>,
}

/// The partition of the roots induced by a parabolic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootClassification {
    /// Roots of the Levi factor: zero coefficient on every crossed node
    /// (positive roots first, then their negatives).
    pub levi: Vec<Vec<i64>>,
    /// Positive roots with positive coefficient on some crossed node.
    pub nilradical: Vec<Vec<i64>>,
    /// Negatives of the nilradical roots: the roots omitted from the
    /// parabolic subalgebra.
    pub omitted: Vec<Vec<i64>>,
}

/// One row of the grading-pairing table produced by [`delta_pairing_table`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeltaPairing {
    /// The root, in simple-root coordinates.
    pub root: Vec<i64>,
    /// `B(δ, root)` for the invariant form `B`.
    pub value: BigRational,
    /// True when the root belongs to the Levi factor.
    pub is_levi: bool,
}

impl ParabolicSpec {
    /// Wraps a root system with a set of crossed nodes (0-based).
    pub fn new(root_system: RootSystem, crossed: &[usize]) -> Result<ParabolicSpec> {
        let mut nodes: Vec<usize> = crossed.to_vec();
        nodes.sort_unstable();
        nodes.dedup();
        if let Some(&bad) = nodes.iter().find(|&&n| n >= root_system.rank()) {
            return Err(Error::Parse {
                input: format!("crossed node {}", bad + 1),
                message: format!(
                    "node index out of range for rank {}",
                    root_system.rank()
                ),
            });
        }
        Ok(ParabolicSpec { root_system, crossed: nodes })
    }

    /// The Borel case: every node crossed.
    pub fn borel(root_system: RootSystem) -> ParabolicSpec {
        let all: Vec<usize> = (0..root_system.rank()).collect();
        ParabolicSpec { root_system, crossed: all }
    }

    /// Parses `<TYPE><RANK>[crossed=<i,j,…>]` (1-based node numbers).
    /// Without the bracket every node is crossed.
    pub fn parse(input: &str) -> Result<ParabolicSpec> {
        let s = input.trim();
        let err = |message: String| Error::Parse { input: input.to_string(), message };
        let mut chars = s.char_indices();
        let family = match chars.next() {
            Some((_, c)) => Family::from_letter(c)
                .ok_or_else(|| err(format!("unknown family letter '{}'", c)))?,
            None => return Err(err("empty spec".to_string())),
        };
        let digits_end = s[1..]
            .find(|c: char| !c.is_ascii_digit())
            .map_or(s.len(), |i| i + 1);
        if digits_end == 1 {
            return Err(err("expected a rank after the family letter".to_string()));
        }
        let rank: usize = s[1..digits_end]
            .parse()
            .map_err(|_| err(format!("invalid rank '{}'", &s[1..digits_end])))?;
        let root_system = build_root_system(family, rank)?;
        let rest = &s[digits_end..];
        if rest.is_empty() {
            return Ok(ParabolicSpec::borel(root_system));
        }
        let inner = rest
            .strip_prefix("[crossed=")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| {
                err(format!("expected '[crossed=...]' after the type, found '{}'", rest))
            })?;
        if inner.is_empty() {
            return Err(err("crossed node list is empty".to_string()));
        }
        let mut crossed = Vec::new();
        for piece in inner.split(',') {
            let n: usize = piece
                .trim()
                .parse()
                .map_err(|_| err(format!("invalid node number '{}'", piece)))?;
            if n == 0 || n > rank {
                return Err(err(format!(
                    "node {} out of range 1..={}",
                    n, rank
                )));
            }
            crossed.push(n - 1);
        }
        ParabolicSpec::new(root_system, &crossed)
    }

    /// The underlying root system.
    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    /// Crossed nodes, 0-based, ascending.
    pub fn crossed(&self) -> &[usize] {
        &self.crossed
    }

    /// Uncrossed nodes, 0-based, ascending (the Levi simple reflections).
    pub fn uncrossed(&self) -> Vec<usize> {
        let crossed: BTreeSet<usize> = self.crossed.iter().copied().collect();
        (0..self.root_system.rank())
            .filter(|i| !crossed.contains(i))
            .collect()
    }

    /// True when node `i` (0-based) is crossed.
    pub fn is_crossed(&self, i: usize) -> bool {
        self.crossed.binary_search(&i).is_ok()
    }

    /// True when every node is crossed.
    pub fn is_borel(&self) -> bool {
        self.crossed.len() == self.root_system.rank()
    }

    /// Canonical spec string, e.g. `B2[crossed=1]` (1-based nodes); the
    /// Borel case renders without a bracket.
    pub fn spec_string(&self) -> String {
        if self.is_borel() {
            return self.root_system.label();
        }
        let nodes: Vec<String> =
            self.crossed.iter().map(|&n| (n + 1).to_string()).collect();
        format!("{}[crossed={}]", self.root_system.label(), nodes.join(","))
    }

    /// Complex dimension of the flag variety: the number of nilradical
    /// roots.
    pub fn dim(&self) -> usize {
        classify_roots(self).nilradical.len()
    }

    /// One-line text Dynkin diagram: `x` for crossed nodes, `o` for
    /// uncrossed ones. Edges render as `-` (single), `<=`/`=>` (double),
    /// `<#`/`#>` (triple), with the arrow pointing at the shorter root.
    /// The forked family D falls back to the plain spec label.
    pub fn dynkin_ascii(&self) -> String {
        let rank = self.root_system.rank();
        if self.root_system.family() == Family::D {
            return self.spec_string();
        }
        let node = |i: usize| if self.is_crossed(i) { "x" } else { "o" };
        let mut out = String::from(node(0));
        for i in 0..rank - 1 {
            out.push_str(&edge_text(self.root_system.cartan(), i, false));
            out.push_str(node(i + 1));
        }
        out
    }

    /// LaTeX Dynkin diagram along the same lines (`\times`, `\bullet`, and
    /// arrow glyphs for multiple edges).
    pub fn dynkin_latex(&self) -> String {
        let rank = self.root_system.rank();
        if self.root_system.family() == Family::D {
            return format!("\\text{{{}}}", self.spec_string());
        }
        let node = |i: usize| if self.is_crossed(i) { "\\times" } else { "\\bullet" };
        let mut out = String::from(node(0));
        for i in 0..rank - 1 {
            out.push_str(&edge_text(self.root_system.cartan(), i, true));
            out.push_str(node(i + 1));
        }
        out
    }
}

impl fmt::Display for ParabolicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec_string())
    }
}

/// Renders the Dynkin edge between adjacent nodes `i` and `i+1`. The bond
/// multiplicity is `a[i][i+1] · a[i+1][i]` and the arrow points toward the
/// shorter root (the node whose incoming Cartan entry is `-2` or `-3`).
fn edge_text(cartan: &[Vec<i64>], i: usize, latex: bool) -> String {
    let down = cartan[i][i + 1]; // ⟨α_{i+1}, α_i^∨⟩
    let up = cartan[i + 1][i]; // ⟨α_i, α_{i+1}^∨⟩
    let bond = down * up;
    let towards_left = down < -1; // α_i is the shorter root
    match (bond, towards_left, latex) {
        (1, _, false) => "-".to_string(),
        (1, _, true) => " - ".to_string(),
        (2, true, false) => "<=".to_string(),
        (2, false, false) => "=>".to_string(),
        (2, true, true) => " \\Leftarrow ".to_string(),
        (2, false, true) => " \\Rightarrow ".to_string(),
        (3, true, false) => "<#".to_string(),
        (3, false, false) => "#>".to_string(),
        (3, true, true) => " \\Lleftarrow ".to_string(),
        (3, false, true) => " \\Rrightarrow ".to_string(),
        _ => unreachable!("Dynkin bond multiplicity is 1, 2, or 3"),
    }
}

/// Splits all roots into Levi, nilradical, and omitted parts.
pub fn classify_roots(p: &ParabolicSpec) -> RootClassification {
    let rs = p.root_system();
    let crossed = p.crossed();
    let is_levi =
        |root: &[i64]| crossed.iter().all(|&c| root[c] == 0);
    let mut levi = Vec::new();
    let mut nilradical = Vec::new();
    for root in rs.positive_roots() {
        if is_levi(root) {
            levi.push(root.clone());
        } else {
            nilradical.push(root.clone());
        }
    }
    let negatives: Vec<Vec<i64>> = levi
        .iter()
        .map(|r| r.iter().map(|&c| -c).collect())
        .collect();
    levi.extend(negatives);
    let omitted: Vec<Vec<i64>> = nilradical
        .iter()
        .map(|r| r.iter().map(|&c| -c).collect())
        .collect();
    RootClassification { levi, nilradical, omitted }
}

/// Half the sum of the omitted roots, in rational simple-root coordinates.
///
/// Pairing this vector against roots under the invariant form separates the
/// parabolic from its complement: the pairing is negative on nilradical
/// roots, positive on omitted roots, and zero exactly on the Levi roots.
pub fn delta(p: &ParabolicSpec) -> Vec<BigRational> {
    let cls = classify_roots(p);
    let rank = p.root_system().rank();
    let mut sum = vec![BigRational::zero(); rank];
    for root in &cls.omitted {
        for (i, &c) in root.iter().enumerate() {
            sum[i] += ratio(c, 2);
        }
    }
    sum
}

/// Pairs `δ` against every root (positive roots in canonical order, then
/// their negatives) under the invariant form.
pub fn delta_pairing_table(p: &ParabolicSpec) -> Vec<DeltaPairing> {
    let rs = p.root_system();
    let crossed = p.crossed();
    let d = delta(p);
    rs.all_roots()
        .into_iter()
        .map(|root| {
            let rational: Vec<BigRational> =
                root.iter().map(|&c| ratio(c, 1)).collect();
            let value = form(rs, &d, &rational);
            let is_levi = crossed.iter().all(|&c| root[c] == 0);
            DeltaPairing { root, value, is_levi }
        })
        .collect()
}

/// Ranks of the grading filtration of the nilradical: entry `k − 1` counts
/// the nilradical roots whose crossed-coordinate sum is `k`.
pub fn filtration_ranks(p: &ParabolicSpec) -> Vec<usize> {
    let cls = classify_roots(p);
    let crossed = p.crossed();
    let mut counts: Vec<usize> = Vec::new();
    for root in &cls.nilradical {
        let grade: i64 = crossed.iter().map(|&c| root[c]).sum();
        assert!(grade >= 1, "nilradical roots have positive grade");
        let idx = grade as usize - 1;
        if counts.len() <= idx {
            counts.resize(idx + 1, 0);
        }
        counts[idx] += 1;
    }
    counts
}
