//! Sparse multivariate polynomials over exact rationals.
//!
//! Polynomials live in `Q[α_1, …, α_r]`, the polynomial ring on the simple
//! roots of a rank-`r` root system (`r ≤ 8`). Coefficients are
//! arbitrary-precision rationals kept in lowest terms; exponent vectors are
//! dense fixed-width arrays. No floating point is used anywhere.
//!
//! Monomials are compared in graded reverse-lexicographic order ("grevlex")
//! with `α_1 > α_2 > … > α_r`: larger total degree wins, and ties are
//! broken at the *last* coordinate where two exponent vectors differ — the
//! monomial with the *smaller* exponent there is the *larger* monomial.
//! In rank 2 this gives `α² > αβ > β²`.
//!
//! Rendered text uses the variable names `a, b, c, …, h` for
//! `α_1, …, α_8`. Terms print in descending monomial order, coefficients
//! as integers (`2*a*b`) or parenthesized fractions (`(1/3)*b^2`), with a
//! unit coefficient omitted.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rootsys::WeylElement;

/// Largest supported rank. Exponent vectors are dense arrays of this width.
pub const MAX_RANK: usize = 8;

/// Variable names used when rendering: `a` is `α_1`, `b` is `α_2`, and so on.
pub const VAR_NAMES: [&str; MAX_RANK] = ["a", "b", "c", "d", "e", "f", "g", "h"];

/// Shorthand for an integer as a [`BigRational`].
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d` as a [`BigRational`] (reduced, `d ≠ 0`).
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A monomial: an exponent vector in `rank` variables.
///
/// The [`Ord`] implementation is the grevlex order described in the module
/// docs; `BTreeMap<Monomial, _>` therefore iterates terms in *ascending*
/// order and the leading monomial is the maximum.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Monomial {
    rank: usize,
    exps: [u16; MAX_RANK],
}

impl Monomial {
    /// The constant monomial `1`.
    pub fn one(rank: usize) -> Self {
        assert!(rank >= 1 && rank <= MAX_RANK, "rank out of range");
        Monomial { rank, exps: [0; MAX_RANK] }
    }

    /// The single variable `α_{i+1}` (0-based index `i`).
    pub fn variable(rank: usize, i: usize) -> Self {
        let mut m = Monomial::one(rank);
        assert!(i < rank, "variable index out of range");
        m.exps[i] = 1;
        m
    }

    /// A monomial from an explicit exponent vector (`exps.len()` is the rank).
    pub fn new(exps: &[u16]) -> Self {
        let mut m = Monomial::one(exps.len());
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    /// Number of variables.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.exps[..self.rank].iter().map(|&e| u32::from(e)).sum()
    }

    /// Exponent of variable `i`.
    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    /// The exponent vector as a slice of length `rank`.
    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.rank]
    }

    /// True for the constant monomial.
    pub fn is_one(&self) -> bool {
        self.exps[..self.rank].iter().all(|&e| e == 0)
    }

    /// Product of two monomials.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.rank, other.rank);
        let mut m = *self;
        for i in 0..self.rank {
            m.exps[i] += other.exps[i];
        }
        m
    }

    /// True if `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.rank, other.rank);
        (0..self.rank).all(|i| self.exps[i] <= other.exps[i])
    }

    /// Exact quotient `self / other`, or `None` when `other ∤ self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        assert_eq!(self.rank, other.rank);
        if !other.divides(self) {
            return None;
        }
        let mut m = *self;
        for i in 0..self.rank {
            m.exps[i] -= other.exps[i];
        }
        Some(m)
    }

    /// Least common multiple.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.rank, other.rank);
        let mut m = *self;
        for i in 0..self.rank {
            m.exps[i] = m.exps[i].max(other.exps[i]);
        }
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.rank, other.rank, "rank mismatch in monomial compare");
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Equal degree: reverse-lexicographic tie break. Scan from the last
        // variable toward the first; at the first difference, the monomial
        // with the smaller exponent is the larger monomial.
        for i in (0..self.rank).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for i in 0..self.rank {
            let e = self.exps[i];
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", VAR_NAMES[i])?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

/// A polynomial with exact rational coefficients.
///
/// Terms are stored in a `BTreeMap` keyed by [`Monomial`], so iteration is
/// always in ascending grevlex order and every operation is deterministic.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    rank: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    /// The zero polynomial.
    pub fn zero(rank: usize) -> Self {
        assert!(rank >= 1 && rank <= MAX_RANK, "rank out of range");
        Polynomial { rank, terms: BTreeMap::new() }
    }

    /// The constant polynomial `1`.
    pub fn one(rank: usize) -> Self {
        Polynomial::constant(rank, BigRational::one())
    }

    /// A constant polynomial.
    pub fn constant(rank: usize, c: BigRational) -> Self {
        let mut p = Polynomial::zero(rank);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(rank), c);
        }
        p
    }

    /// The single variable `α_{i+1}` (0-based `i`).
    pub fn variable(rank: usize, i: usize) -> Self {
        Polynomial::from_monomial(Monomial::variable(rank, i), BigRational::one())
    }

    /// A single term `c · m`.
    pub fn from_monomial(m: Monomial, c: BigRational) -> Self {
        let mut p = Polynomial::zero(m.rank());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, combining
    /// duplicates and dropping zeros.
    pub fn from_terms<I>(rank: usize, iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Polynomial::zero(rank);
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    /// The linear form `Σ coeffs[i] · α_{i+1}` with rational coefficients.
    pub fn linear_form(rank: usize, coeffs: &[BigRational]) -> Self {
        assert_eq!(coeffs.len(), rank);
        Polynomial::from_terms(
            rank,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::variable(rank, i), c.clone())),
        )
    }

    /// The linear form `Σ coeffs[i] · α_{i+1}` with integer coefficients.
    pub fn linear_form_i(rank: usize, coeffs: &[i64]) -> Self {
        let rational: Vec<BigRational> = coeffs.iter().map(|&c| rat(c)).collect();
        Polynomial::linear_form(rank, &rational)
    }

    /// Number of variables.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `0` for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// True when all terms share one total degree (the zero polynomial
    /// counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// The leading term (maximal monomial in grevlex order).
    pub fn leading(&self) -> Option<(Monomial, &BigRational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// Coefficient of `m` (zero when absent).
    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Terms in descending monomial order (rendering order).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    /// Adds `c · m` in place.
    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        assert_eq!(m.rank(), self.rank);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Adds `c · m · other` in place (the inner loop of polynomial
    /// reduction, kept allocation-light on purpose).
    pub fn add_scaled_in_place(&mut self, other: &Polynomial, m: &Monomial, c: &BigRational) {
        assert_eq!(self.rank, other.rank);
        if c.is_zero() {
            return;
        }
        for (mo, co) in &other.terms {
            self.add_term(mo.mul(m), co * c);
        }
    }

    /// The polynomial scaled by `c`.
    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.rank);
        }
        Polynomial {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    /// The polynomial divided by its leading coefficient (zero stays zero).
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => self.scale(&lc.recip()),
        }
    }

    /// `self` raised to the power `n` (with `p^0 = 1`).
    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.rank);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The sum of the terms of total degree exactly `d`.
    pub fn graded_component(&self, d: u32) -> Polynomial {
        Polynomial {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Substitutes `images[i]` for variable `i`. All images must share one
    /// rank, which becomes the rank of the result.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.rank, "one image per variable required");
        let out_rank = images.first().map_or(self.rank, Polynomial::rank);
        assert!(images.iter().all(|p| p.rank() == out_rank));
        // Cache successive powers of each image as they are needed.
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|_| vec![Polynomial::one(out_rank)]).collect();
        let mut result = Polynomial::zero(out_rank);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(out_rank, c.clone());
            for i in 0..self.rank {
                let e = usize::from(m.exponent(i));
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    term = &term * &powers[i][e];
                }
            }
            result = &result + &term;
        }
        result
    }

    /// Partial derivative with respect to variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Polynomial {
        assert!(i < self.rank);
        let mut out = Polynomial::zero(self.rank);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let mut exps: Vec<u16> = m.exponents().to_vec();
            exps[i] -= 1;
            out.add_term(Monomial::new(&exps), c * rat(i64::from(e)));
        }
        out
    }

    /// Evaluates at an exact rational point.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.rank);
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for i in 0..self.rank {
                let e = m.exponent(i);
                if e > 0 {
                    v *= point[i].pow(i32::from(e));
                }
            }
            total += v;
        }
        total
    }

    /// Renders with caller-supplied variable names (used for LaTeX output,
    /// where rank-2 variables become `\alpha, \beta`). Multiplication is
    /// juxtaposition and fractional coefficients render as `\tfrac`.
    pub fn to_latex(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.rank);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms_desc().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let show_coeff = !mag.is_one() || m.is_one();
            if show_coeff {
                if mag.is_integer() {
                    out.push_str(&mag.numer().to_string());
                } else {
                    out.push_str(&format!(
                        "\\tfrac{{{}}}{{{}}}",
                        mag.numer(),
                        mag.denom()
                    ));
                }
                if !m.is_one() {
                    out.push_str(" \\, ");
                }
            }
            for i in 0..self.rank {
                let e = m.exponent(i);
                if e == 0 {
                    continue;
                }
                out.push_str(names[i]);
                match e {
                    1 => {}
                    2..=9 => out.push_str(&format!("^{}", e)),
                    _ => out.push_str(&format!("^{{{}}}", e)),
                }
            }
        }
        out
    }

    /// Parses the textual form produced by `Display`.
    ///
    /// Grammar: sums and differences of terms; terms are `*`- and
    /// `/`-separated factors (divisors must be nonzero constants); factors
    /// are parenthesized expressions, nonnegative integers, or the variable
    /// names `a, …` for the given rank, each optionally raised with `^` to a
    /// nonnegative integer. Whitespace is allowed between tokens.
    pub fn parse(input: &str, rank: usize) -> Result<Polynomial> {
        assert!(rank >= 1 && rank <= MAX_RANK, "rank out of range");
        let mut parser = Parser { input, bytes: input.as_bytes(), pos: 0, rank };
        let poly = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.bytes.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(poly)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms_desc().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mag = c.abs();
            if m.is_one() {
                if mag.is_integer() {
                    write!(f, "{}", mag.numer())?;
                } else {
                    write!(f, "({})", mag)?;
                }
            } else {
                if !mag.is_one() {
                    if mag.is_integer() {
                        write!(f, "{}*", mag.numer())?;
                    } else {
                        write!(f, "({})*", mag)?;
                    }
                }
                write!(f, "{}", m)?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.rank, rhs.rank);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.rank, rhs.rank);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-BigRational::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.rank, rhs.rank);
        let mut out = Polynomial::zero(self.rank);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

/// Applies a Weyl group element to a polynomial: each variable `α_j` is
/// replaced by its image `Σ_i action[i][j] · α_i` under the element's action
/// on the simple-root basis.
pub fn weyl_act(w: &WeylElement, p: &Polynomial) -> Polynomial {
    let rank = p.rank();
    assert_eq!(w.action.len(), rank, "Weyl element rank mismatch");
    let images: Vec<Polynomial> = (0..rank)
        .map(|j| {
            let coeffs: Vec<i64> = (0..rank).map(|i| w.action[i][j]).collect();
            Polynomial::linear_form_i(rank, &coeffs)
        })
        .collect();
    p.substitute(&images)
}

struct Parser<'a> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
    rank: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            input: self.input.to_string(),
            message: format!("{} at byte {}", message, self.pos),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    /// expr := ['-'] term (('+' | '-') term)*
    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate_first = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate_first = true;
        }
        let mut acc = self.term()?;
        if negate_first {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    /// term := factor (('*' factor) | ('/' factor))*
    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    let c = match f.leading() {
                        Some((m, c)) if m.is_one() && f.term_count() == 1 => c.clone(),
                        _ => return Err(self.error("divisor must be a nonzero constant")),
                    };
                    acc = acc.scale(&c.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    /// factor := base ['^' uint]
    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let n = self.uint()?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    /// base := '(' expr ')' | uint | variable
    fn base(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = &self.input[start..self.pos];
                let n: BigInt = digits.parse().expect("digit run parses as BigInt");
                Ok(Polynomial::constant(self.rank, BigRational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = (c as char).to_string();
                match VAR_NAMES[..self.rank].iter().position(|&v| v == name) {
                    Some(i) => {
                        self.pos += 1;
                        Ok(Polynomial::variable(self.rank, i))
                    }
                    None => Err(self.error(&format!(
                        "unknown variable '{}' (rank {} uses {})",
                        name,
                        self.rank,
                        VAR_NAMES[..self.rank].join(", ")
                    ))),
                }
            }
            _ => Err(self.error("expected '(', a number, or a variable")),
        }
    }

    fn uint(&mut self) -> Result<u32> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                self.input[start..self.pos]
                    .parse::<u32>()
                    .map_err(|_| self.error("exponent out of range"))
            }
            _ => Err(self.error("expected a nonnegative integer exponent")),
        }
    }
}
