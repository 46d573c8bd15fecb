//! Sparse multivariate polynomials in variables `x_i` indexed by all of `Z`,
//! with exact `i64` coefficients. Terms live in a `BTreeMap` keyed by exponent
//! vector under the graded revlex order, so iteration (and printing) is
//! deterministic.

use crate::nvector::NVector;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<NVector, i64>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn one() -> Polynomial {
        Polynomial::term(NVector::zero(), 1)
    }

    pub fn term(exponents: NVector, coeff: i64) -> Polynomial {
        let mut p = Polynomial::zero();
        p.add_term(&exponents, coeff);
        p
    }

    /// The variable `x_i`.
    pub fn variable(index: i32) -> Polynomial {
        Polynomial::term(NVector::from_pairs([(index, 1)]), 1)
    }

    /// The monomial `x_{C_1} ... x_{C_m}` of a word, counting multiplicities.
    pub fn monomial_of_word(word: &[i32]) -> Polynomial {
        let mut c = NVector::zero();
        for &v in word {
            c.add_at(v, 1);
        }
        Polynomial::term(c, 1)
    }

    pub fn add_term(&mut self, exponents: &NVector, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exponents.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(exponents);
        }
    }

    pub fn coeff(&self, exponents: &NVector) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&NVector, i64)> {
        self.terms.iter().map(|(c, &k)| (c, k))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: i64) -> Polynomial {
        if k == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(c, &v)| (c.clone(), v * k)).collect(),
        }
    }

    /// Maximum term weight, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|c| c.weight()).max()
    }

    /// The common term weight, or an error when terms mix weights.
    pub fn homogeneous_degree(&self) -> Result<u32> {
        let mut weights = self.terms.keys().map(|c| c.weight());
        let first = weights.next().ok_or(Error::ZeroPolynomial)?;
        if weights.all(|w| w == first) {
            Ok(first)
        } else {
            Err(Error::Inhomogeneous)
        }
    }

    /// Splits into homogeneous components, ascending by degree.
    pub fn homogeneous_components(&self) -> Vec<Polynomial> {
        let mut by_degree: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (c, k) in self.terms() {
            by_degree.entry(c.weight()).or_default().add_term(c, k);
        }
        by_degree.into_values().collect()
    }

    /// The revlex-greatest exponent vector and its coefficient. Requires a
    /// nonzero homogeneous input.
    pub fn revlex_leading(&self) -> Result<(NVector, i64)> {
        self.homogeneous_degree()?;
        let (c, &k) = self.terms.iter().next_back().unwrap();
        Ok((c.clone(), k))
    }

    /// Kills every term using a variable outside `[lo, hi]`.
    pub fn truncate(&self, lo: i32, hi: i32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(c, _)| {
                    c.support().all(|i| lo <= i && i <= hi)
                })
                .map(|(c, &k)| (c.clone(), k))
                .collect(),
        }
    }

    /// Shifts every variable index by `offset`.
    pub fn shift(&self, offset: i32) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(c, &k)| (c.shift(offset), k)).collect(),
        }
    }

    /// The smallest variable index used, `None` for constants.
    pub fn min_variable(&self) -> Option<i32> {
        self.terms.keys().filter_map(|c| c.min_index()).min()
    }

    /// Machine rendering: one `<exponents> <coeff>` line per term, revlex
    /// descending.
    pub fn to_machine(&self) -> String {
        let mut out = String::from("polynomial\n");
        for (c, k) in self.terms().rev() {
            out.push_str(&format!("{c} {k}\n"));
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (c, k) in rhs.terms() {
            out.add_term(c, k);
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (c, k) in rhs.terms() {
            out.add_term(c, -k);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, ka) in self.terms() {
            for (b, kb) in rhs.terms() {
                out.add_term(&a.plus(b), ka * kb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(-1)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, coeff: i64, c: &NVector) -> fmt::Result {
    let coeff = coeff.unsigned_abs();
    if c.is_zero() {
        return write!(f, "{coeff}");
    }
    if coeff != 1 {
        write!(f, "{coeff}*")?;
    }
    let mut first = true;
    for (i, n) in c.entries() {
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if n == 1 {
            write!(f, "x({i})")?;
        } else {
            write!(f, "x({i})^{n}")?;
        }
    }
    Ok(())
}

/// Renders terms revlex descending, factors by ascending variable index,
/// e.g. `3*x(-1)*x(2)^2 + x(1) - 2`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (pos, (c, k)) in self.terms().rev().enumerate() {
            if pos == 0 {
                if k < 0 {
                    write!(f, "-")?;
                }
            } else if k < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write_monomial(f, k, c)?;
        }
        Ok(())
    }
}

/// Parses expressions in the printed grammar: signed terms joined by `+`/`-`,
/// each a `*`-product of integer constants and `x(i)^k` factors.
impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        let mut rest = s.trim();
        if rest.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut sign = 1i64;
        let mut expect_term = true;
        while !rest.is_empty() {
            if expect_term {
                let (coeff, c, r) = parse_term(rest)?;
                out.add_term(&c, sign * coeff);
                rest = r.trim_start();
                expect_term = false;
            } else if let Some(r) = rest.strip_prefix('+') {
                sign = 1;
                rest = r.trim_start();
                expect_term = true;
            } else if let Some(r) = rest.strip_prefix('-') {
                sign = -1;
                rest = r.trim_start();
                expect_term = true;
            } else {
                return Err(Error::Parse(format!("unexpected input at {rest:?}")));
            }
        }
        if expect_term {
            return Err(Error::Parse("dangling sign in polynomial".into()));
        }
        Ok(out)
    }
}

/// Parses one term, returning (coefficient, exponents, remaining input).
fn parse_term(s: &str) -> Result<(i64, NVector, &str)> {
    let mut rest = s.trim_start();
    let mut coeff = 1i64;
    let mut c = NVector::zero();
    let mut seen_factor = false;
    loop {
        if let Some(r) = rest.strip_prefix('-') {
            if seen_factor {
                break;
            }
            coeff = -coeff;
            rest = r.trim_start();
            continue;
        }
        if rest.starts_with("x(") {
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed x( in {s:?}")))?;
            let idx: i32 = rest[2..close]
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable index in {s:?}")))?;
            rest = &rest[close + 1..];
            let mut exp = 1u32;
            if let Some(r) = rest.strip_prefix('^') {
                let end = r
                    .find(|ch: char| !ch.is_ascii_digit())
                    .unwrap_or(r.len());
                exp = r[..end]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
                rest = &r[end..];
            }
            c.add_at(idx, exp);
            seen_factor = true;
        } else {
            let end = rest
                .find(|ch: char| !ch.is_ascii_digit())
                .unwrap_or(rest.len());
            if end == 0 {
                if seen_factor {
                    break;
                }
                return Err(Error::Parse(format!("expected term at {rest:?}")));
            }
            let k: i64 = rest[..end]
                .parse()
                .map_err(|_| Error::Parse(format!("bad constant in {s:?}")))?;
            coeff *= k;
            rest = &rest[end..];
            seen_factor = true;
        }
        let trimmed = rest.trim_start();
        if let Some(r) = trimmed.strip_prefix('*') {
            rest = r.trim_start();
        } else {
            rest = trimmed;
            break;
        }
    }
    Ok((coeff, c, rest))
}
