//! Slide polynomials: generating polynomials of flagged chains, indexed by
//! exponent vectors with positive support, and the triangular change of basis
//! expanding arbitrary positive polynomials in them.

use crate::letter::InjectiveWord;
use crate::nvector::NVector;
use crate::poly::Polynomial;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// Enumerates the chain generating polynomial of a word: weakly decreasing
/// positive sequences, strictly decreasing across letter descents, each entry
/// bounded by its letter's value. The empty word gives 1; an unsatisfiable
/// word gives 0.
pub fn slide_series(word: &InjectiveWord) -> Polynomial {
    let mut out = Polynomial::zero();
    let mut exponents = NVector::zero();
    series_rec(word, 0, i32::MAX, &mut exponents, &mut out);
    out
}

fn series_rec(
    word: &InjectiveWord,
    pos: usize,
    prev_cap: i32,
    exponents: &mut NVector,
    out: &mut Polynomial,
) {
    if pos == word.len() {
        out.add_term(exponents, 1);
        return;
    }
    let letters = word.letters();
    let a = letters[pos];
    let mut hi = a.value();
    if pos > 0 {
        let strict = letters[pos - 1] > a;
        hi = hi.min(prev_cap - if strict { 1 } else { 0 });
    } else {
        hi = hi.min(prev_cap);
    }
    let mut i = hi;
    while i >= 1 {
        exponents.add_at(i, 1);
        series_rec(word, pos + 1, i, exponents, out);
        exponents.set(i, exponents.get(i) - 1);
        i -= 1;
    }
}

/// The slide polynomial indexed by an exponent vector with positive support:
/// the series of its canonical word. Its revlex-leading monomial is the
/// indexing vector itself, with coefficient 1.
pub fn slide_polynomial(c: &NVector) -> Result<Polynomial> {
    if let Some(m) = c.min_index() {
        if m < 1 {
            return Err(Error::NonPositiveSupport(m));
        }
    }
    Ok(slide_series(&c.word_of()))
}

/// An integer combination of slide-basis elements.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SlideExpansion {
    terms: BTreeMap<NVector, i64>,
}

impl SlideExpansion {
    pub fn new() -> SlideExpansion {
        SlideExpansion::default()
    }

    pub fn add_term(&mut self, index: &NVector, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(index.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(index);
        }
    }

    pub fn coeff(&self, index: &NVector) -> i64 {
        self.terms.get(index).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&NVector, i64)> {
        self.terms.iter().map(|(c, &k)| (c, k))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Reassembles the polynomial the expansion stands for.
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (c, k) in self.terms() {
            out = &out + &slide_polynomial(c)?.scale(k);
        }
        Ok(out)
    }

    pub fn to_machine(&self) -> String {
        let mut out = String::from("slide-expansion\n");
        for (c, k) in self.terms().rev() {
            out.push_str(&format!("{c} {k}\n"));
        }
        out
    }
}

impl fmt::Display for SlideExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expansion(f, self.terms().rev(), "S")
    }
}

/// Shared renderer for basis expansions: signed terms `k*TAG(index)`,
/// revlex-descending keys.
pub(crate) fn write_expansion<'a, I>(f: &mut fmt::Formatter<'_>, terms: I, tag: &str) -> fmt::Result
where
    I: Iterator<Item = (&'a NVector, i64)>,
{
    let mut any = false;
    for (pos, (c, k)) in terms.enumerate() {
        any = true;
        if pos == 0 {
            if k < 0 {
                write!(f, "-")?;
            }
        } else if k < 0 {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if k.unsigned_abs() != 1 {
            write!(f, "{}*", k.unsigned_abs())?;
        }
        write!(f, "{tag}({c})")?;
    }
    if !any {
        write!(f, "0")?;
    }
    Ok(())
}

/// Expands a polynomial with positive-support variables in the slide basis by
/// repeated elimination of the revlex-leading term, degree by degree.
pub fn expand_in_slide_basis(p: &Polynomial) -> Result<SlideExpansion> {
    if let Some(m) = p.min_variable() {
        if m < 1 {
            return Err(Error::NonPositiveSupport(m));
        }
    }
    let mut out = SlideExpansion::new();
    for mut component in p.homogeneous_components() {
        while !component.is_zero() {
            let (lead, coeff) = component.revlex_leading()?;
            out.add_term(&lead, coeff);
            component = &component - &slide_polynomial(&lead)?.scale(coeff);
        }
    }
    Ok(out)
}
