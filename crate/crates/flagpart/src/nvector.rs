//! Finitely supported vectors of nonnegative integers indexed by all of `Z`.
//! These serve as monomial exponent vectors and as indices for the slide,
//! forest, and back-slide bases.

use crate::composition::Composition;
use crate::letter::{InjectiveWord, Letter};
use crate::{Error, Result};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// A finitely supported map `Z -> N`; entries with count zero are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct NVector {
    counts: BTreeMap<i32, u32>,
}

impl NVector {
    pub fn zero() -> NVector {
        NVector::default()
    }

    /// Builds from `(index, count)` pairs; zero counts are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (i32, u32)>>(pairs: I) -> NVector {
        let mut c = NVector::zero();
        for (i, n) in pairs {
            c.add_at(i, n);
        }
        c
    }

    /// Builds from counts at indices 1, 2, 3, ...
    pub fn from_positive(counts: &[u32]) -> NVector {
        NVector::from_pairs(counts.iter().enumerate().map(|(i, &n)| (i as i32 + 1, n)))
    }

    pub fn get(&self, index: i32) -> u32 {
        self.counts.get(&index).copied().unwrap_or(0)
    }

    pub fn set(&mut self, index: i32, count: u32) {
        if count == 0 {
            self.counts.remove(&index);
        } else {
            self.counts.insert(index, count);
        }
    }

    pub fn add_at(&mut self, index: i32, delta: u32) {
        if delta > 0 {
            *self.counts.entry(index).or_insert(0) += delta;
        }
    }

    /// Indices with positive count, ascending.
    pub fn support(&self) -> impl DoubleEndedIterator<Item = i32> + '_ {
        self.counts.keys().copied()
    }

    pub fn entries(&self) -> impl DoubleEndedIterator<Item = (i32, u32)> + '_ {
        self.counts.iter().map(|(&i, &n)| (i, n))
    }

    pub fn weight(&self) -> u32 {
        self.counts.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn min_index(&self) -> Option<i32> {
        self.counts.keys().next().copied()
    }

    pub fn max_index(&self) -> Option<i32> {
        self.counts.keys().next_back().copied()
    }

    pub fn has_positive_support(&self) -> bool {
        self.min_index().is_none_or(|m| m >= 1)
    }

    /// Componentwise sum.
    pub fn plus(&self, other: &NVector) -> NVector {
        let mut out = self.clone();
        for (i, n) in other.entries() {
            out.add_at(i, n);
        }
        out
    }

    /// Componentwise difference; `None` if any entry would go negative.
    pub fn minus(&self, other: &NVector) -> Option<NVector> {
        let mut out = self.clone();
        for (i, n) in other.entries() {
            let have = out.get(i);
            if have < n {
                return None;
            }
            out.set(i, have - n);
        }
        Some(out)
    }

    /// Moves every index up by `offset` (negative shifts left).
    pub fn shift(&self, offset: i32) -> NVector {
        NVector::from_pairs(self.entries().map(|(i, n)| (i + offset, n)))
    }

    /// The composition of positive entries read in increasing index order.
    pub fn flatten(&self) -> Composition {
        Composition::new(self.counts.values().copied().collect()).expect("counts positive")
    }

    /// The canonical word: for each supported index `i` the letters
    /// `l(i,1)..l(i,c_i)`, blocks ordered by decreasing value.
    pub fn word_of(&self) -> InjectiveWord {
        let mut letters = Vec::with_capacity(self.weight() as usize);
        for (i, n) in self.entries().rev() {
            for t in 1..=n {
                letters.push(Letter::new(i, t));
            }
        }
        InjectiveWord::new(letters).expect("distinct by construction")
    }

    /// Revlex comparison for equal-weight vectors: the one with the larger
    /// count at the largest differing index is greater.
    fn revlex_cmp(&self, other: &NVector) -> Ordering {
        let mut a = self.entries().rev().peekable();
        let mut b = other.entries().rev().peekable();
        loop {
            match (a.peek().copied(), b.peek().copied()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((ia, na)), Some((ib, nb))) => {
                    if ia > ib {
                        return Ordering::Greater;
                    }
                    if ib > ia {
                        return Ordering::Less;
                    }
                    if na != nb {
                        return na.cmp(&nb);
                    }
                    a.next();
                    b.next();
                }
            }
        }
    }
}

/// Total order: by weight first, then revlex. On equal weights this is exactly
/// the revlex order used for triangular basis changes.
impl Ord for NVector {
    fn cmp(&self, other: &NVector) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.revlex_cmp(other))
    }
}

impl PartialOrd for NVector {
    fn partial_cmp(&self, other: &NVector) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders with the paper-style bar notation: counts at indices <= 0 come
/// before a `|`, counts at positive indices after it. Vectors with positive
/// support print without the bar, e.g. `3,1,1,0,3`; the zero vector prints
/// as `0`.
impl fmt::Display for NVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let lo = self.min_index().unwrap();
        let hi = self.max_index().unwrap();
        if lo >= 1 {
            let parts: Vec<String> = (1..=hi).map(|i| self.get(i).to_string()).collect();
            return write!(f, "{}", parts.join(","));
        }
        let left: Vec<String> = (lo..=0).map(|i| self.get(i).to_string()).collect();
        write!(f, "{}|", left.join(","))?;
        if hi >= 1 {
            let right: Vec<String> = (1..=hi).map(|i| self.get(i).to_string()).collect();
            write!(f, "{}", right.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for NVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<NVector> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty exponent vector".into()));
        }
        let parse_counts = |part: &str| -> Result<Vec<u32>> {
            if part.is_empty() {
                return Ok(Vec::new());
            }
            part.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad count {tok:?} in {s:?}")))
                })
                .collect()
        };
        match s.split_once('|') {
            None => {
                let counts = parse_counts(s)?;
                Ok(NVector::from_positive(&counts))
            }
            Some((left, right)) => {
                let lc = parse_counts(left)?;
                let rc = parse_counts(right)?;
                let mut c = NVector::zero();
                // Left half ends at index 0.
                for (k, &n) in lc.iter().rev().enumerate() {
                    c.add_at(-(k as i32), n);
                }
                for (k, &n) in rc.iter().enumerate() {
                    c.add_at(k as i32 + 1, n);
                }
                Ok(c)
            }
        }
    }
}
