//! Strong compositions: finite sequences of positive integers, identified
//! with subsets of `{1..r-1}` by partial sums.

use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Composition> {
        if parts.contains(&0) {
            return Err(Error::Parse("composition parts must be positive".into()));
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Composition {
        Composition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Concatenation: appends the parts of `other`.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Composition { parts }
    }

    /// Near-concatenation: merges the last part of `self` with the first part
    /// of `other`. When either side is empty it degenerates to the other.
    pub fn near_concat(&self, other: &Composition) -> Composition {
        if self.is_empty() {
            return other.clone();
        }
        if other.is_empty() {
            return self.clone();
        }
        let mut parts = self.parts.clone();
        *parts.last_mut().unwrap() += other.parts[0];
        parts.extend_from_slice(&other.parts[1..]);
        Composition { parts }
    }

    pub fn reverse(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts }
    }

    /// The subset `{a_1, a_1+a_2, ...}` of `{1..r-1}`; `r` must equal the weight.
    pub fn to_subset(&self, r: u32) -> Result<BTreeSet<u32>> {
        if self.weight() != r {
            return Err(Error::WeightMismatch { expected: r, actual: self.weight() });
        }
        let mut out = BTreeSet::new();
        let mut acc = 0;
        for &p in &self.parts[..self.parts.len().saturating_sub(1)] {
            acc += p;
            out.insert(acc);
        }
        Ok(out)
    }

    /// Inverse of [`Composition::to_subset`].
    pub fn from_subset(set: &BTreeSet<u32>, r: u32) -> Result<Composition> {
        for &s in set {
            if s == 0 || s >= r {
                return Err(Error::SubsetOutOfRange(s, r.saturating_sub(1)));
            }
        }
        if r == 0 {
            return Ok(Composition::empty());
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &s in set {
            parts.push(s - prev);
            prev = s;
        }
        parts.push(r - prev);
        Composition::new(parts)
    }

    /// The conjugate composition: same weight `r`, with subset the complement
    /// in `{1..r-1}` of the reversed subset `{r - s}`. It is an involution and
    /// satisfies `len(t(a)) = r - len(a) + 1`.
    pub fn transpose(&self) -> Composition {
        let r = self.weight();
        let s = self.to_subset(r).unwrap();
        let complement: BTreeSet<u32> = (1..r).filter(|k| !s.contains(&(r - k))).collect();
        Composition::from_subset(&complement, r).unwrap()
    }

    /// All ways to write `self` as `b . g` (concatenation) or `b (.) g`
    /// (near-concatenation with both sides nonempty). There is exactly one
    /// split for each left weight `0..=r`, listed in that order.
    pub fn splits(&self) -> Vec<(Composition, Composition)> {
        let mut out = Vec::new();
        for k in 0..=self.parts.len() {
            out.push((
                Composition { parts: self.parts[..k].to_vec() },
                Composition { parts: self.parts[k..].to_vec() },
            ));
        }
        for k in 0..self.parts.len() {
            for s in 1..self.parts[k] {
                let mut left = self.parts[..k].to_vec();
                left.push(s);
                let mut right = vec![self.parts[k] - s];
                right.extend_from_slice(&self.parts[k + 1..]);
                out.push((Composition { parts: left }, Composition { parts: right }));
            }
        }
        out.sort_by_key(|(b, _)| b.weight());
        out
    }
}

/// Descent composition of a label sequence along a chain: part boundaries sit
/// exactly where a label exceeds its successor.
pub fn descent_composition(labels: &[u32]) -> Composition {
    let r = labels.len() as u32;
    if r == 0 {
        return Composition::empty();
    }
    let set: BTreeSet<u32> = labels
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i as u32 + 1)
        .collect();
    Composition::from_subset(&set, r).unwrap()
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Composition> {
        let s = s.trim();
        let body = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected composition like (1,2), got {s:?}")))?;
        if body.trim().is_empty() {
            return Ok(Composition::empty());
        }
        let parts = body
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad part {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Composition::new(parts)
    }
}
