//! The augmented alphabet: letters `l(i,j)` sitting strictly between the
//! integers `i` and `i+1`, ordered lexicographically by `(value, tier)`.

use crate::nvector::NVector;
use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// A letter `l(i,j)` with value `i` and tier `j >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    value: i32,
    tier: u32,
}

impl Letter {
    pub fn new(value: i32, tier: u32) -> Letter {
        assert!(tier >= 1, "letter tier must be positive");
        Letter { value, tier }
    }

    pub fn value(self) -> i32 {
        self.value
    }

    pub fn tier(self) -> u32 {
        self.tier
    }

    /// Compares against a plain integer: `i < l(i,j) < i+1`.
    pub fn cmp_int(self, n: i32) -> std::cmp::Ordering {
        if self.value >= n {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Less
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "l({},{})", self.value, self.tier)
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Letter> {
        let bad = || Error::Parse(format!("expected letter like l(2,1), got {s:?}"));
        let body = s
            .trim()
            .strip_prefix("l(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (v, t) = body.split_once(',').ok_or_else(bad)?;
        let value: i32 = v.trim().parse().map_err(|_| bad())?;
        let tier: u32 = t.trim().parse().map_err(|_| bad())?;
        if tier == 0 {
            return Err(Error::Parse(format!("letter tier must be positive in {s:?}")));
        }
        Ok(Letter::new(value, tier))
    }
}

/// A finite word of pairwise distinct letters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InjectiveWord {
    letters: Vec<Letter>,
}

impl InjectiveWord {
    pub fn new(letters: Vec<Letter>) -> Result<InjectiveWord> {
        let mut seen = BTreeSet::new();
        for &l in &letters {
            if !seen.insert(l) {
                return Err(Error::RepeatedLetter(l));
            }
        }
        Ok(InjectiveWord { letters })
    }

    pub fn empty() -> InjectiveWord {
        InjectiveWord { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The nonincreasing scan `U`: `u_1 = val(w_1)`, then at a descent
    /// `w_{k+1} < w_k` the next entry is `min(val(w_{k+1}), u_k - 1)`,
    /// otherwise it repeats `u_k`.
    pub fn rs_scan(&self) -> Vec<i32> {
        let mut u: Vec<i32> = Vec::with_capacity(self.letters.len());
        for (k, &w) in self.letters.iter().enumerate() {
            if k == 0 {
                u.push(w.value());
            } else if w < self.letters[k - 1] {
                u.push(w.value().min(u[k - 1] - 1));
            } else {
                u.push(u[k - 1]);
            }
        }
        u
    }

    /// Canonical exponent vector in the back-stable setting: the multiplicity
    /// vector of the scan word, whatever its support.
    pub fn rs_backstable(&self) -> NVector {
        let mut c = NVector::zero();
        for v in self.rs_scan() {
            c.add_at(v, 1);
        }
        c
    }

    /// Polynomial-mode normalization: `None` when the scan leaves the
    /// positive integers (the associated slide polynomial is zero).
    pub fn rs_polynomial(&self) -> Option<NVector> {
        let u = self.rs_scan();
        if u.iter().any(|&v| v <= 0) {
            return None;
        }
        let mut c = NVector::zero();
        for v in u {
            c.add_at(v, 1);
        }
        Some(c)
    }
}

impl fmt::Display for InjectiveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "()");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Standardization of an integer word: occurrences of each value receive
/// tiers 1, 2, ... from left to right.
pub fn standardize(word: &[i32]) -> InjectiveWord {
    let mut counts = std::collections::BTreeMap::new();
    let letters = word
        .iter()
        .map(|&v| {
            let t = counts.entry(v).or_insert(0u32);
            *t += 1;
            Letter::new(v, *t)
        })
        .collect();
    InjectiveWord { letters }
}

/// Parses a whitespace- or comma-separated list of letters.
pub fn parse_word(s: &str) -> Result<InjectiveWord> {
    let mut letters = Vec::new();
    let mut rest = s;
    loop {
        rest = rest.trim_start_matches(|ch: char| ch.is_whitespace() || ch == ',');
        if rest.is_empty() {
            break;
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unterminated letter in {s:?}")))?;
        letters.push(rest[..=close].parse()?);
        rest = &rest[close + 1..];
    }
    InjectiveWord::new(letters)
}
