//! The lattice of nonincreasing integer words of a fixed length, its Möbius
//! function, and the signed multiplicity-free expansion of monomials into
//! (back-stable) slides built from unit-drop perturbations.

use crate::backstable::BackSlideExpansion;
use crate::nvector::NVector;
use crate::slide::SlideExpansion;
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

/// A weakly decreasing word of integers; lengths 0 and 1 are allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NonincreasingWord {
    letters: Vec<i32>,
}

impl NonincreasingWord {
    pub fn new(letters: Vec<i32>) -> Result<NonincreasingWord> {
        if letters.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("word {letters:?} is not nonincreasing")));
        }
        Ok(NonincreasingWord { letters })
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Runs of equal letters: `(value, multiplicity)` with values decreasing.
    pub fn blocks(&self) -> Vec<(i32, usize)> {
        let mut out: Vec<(i32, usize)> = Vec::new();
        for &x in &self.letters {
            match out.last_mut() {
                Some((v, n)) if *v == x => *n += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }

    /// The multiplicity vector: the canonical basis index of this word.
    pub fn nvector(&self) -> NVector {
        let mut c = NVector::zero();
        for &x in &self.letters {
            c.add_at(x, 1);
        }
        c
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&x| x >= 1)
    }
}

impl fmt::Display for NonincreasingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for NonincreasingWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<NonincreasingWord> {
        let mut letters = Vec::new();
        for tok in s.split(|ch: char| ch.is_whitespace() || ch == ',') {
            if tok.is_empty() {
                continue;
            }
            letters.push(
                tok.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad letter {tok:?} in {s:?}")))?,
            );
        }
        NonincreasingWord::new(letters)
    }
}

/// The order on equal-length words: componentwise `<=` with descents of the
/// upper word forced strict in the lower one.
pub fn leq_m(lower: &NonincreasingWord, upper: &NonincreasingWord) -> Result<bool> {
    if lower.len() != upper.len() {
        return Err(Error::LengthMismatch(lower.len(), upper.len()));
    }
    let d = lower.letters();
    let c = upper.letters();
    let dominated = d.iter().zip(c).all(|(a, b)| a <= b);
    let strictness = (1..c.len()).all(|i| c[i - 1] <= c[i] || d[i - 1] > d[i]);
    Ok(dominated && strictness)
}

/// Least upper bound: componentwise maxima, then flattened rightward from the
/// positions where both inputs descend.
pub fn join(c: &NonincreasingWord, d: &NonincreasingWord) -> Result<NonincreasingWord> {
    if c.len() != d.len() {
        return Err(Error::LengthMismatch(c.len(), d.len()));
    }
    let m = c.len();
    let cw = c.letters();
    let dw = d.letters();
    let pointwise: Vec<i32> = (0..m).map(|i| cw[i].max(dw[i])).collect();
    let mut out = Vec::with_capacity(m);
    let mut anchor = 0usize;
    for i in 0..m {
        if i == 0 || (cw[i - 1] > cw[i] && dw[i - 1] > dw[i]) {
            anchor = i;
        }
        out.push(pointwise[anchor]);
    }
    NonincreasingWord::new(out)
}

/// Greatest lower bound: the join of every word lying below both inputs and
/// above the strictly decreasing floor word built from the least letter.
pub fn meet(c: &NonincreasingWord, d: &NonincreasingWord) -> Result<NonincreasingWord> {
    if c.len() != d.len() {
        return Err(Error::LengthMismatch(c.len(), d.len()));
    }
    let m = c.len();
    if m == 0 {
        return Ok(NonincreasingWord::default());
    }
    let k = c.letters().iter().chain(d.letters()).copied().min().unwrap();
    let floor: Vec<i32> = (0..m as i32).map(|i| k - i).collect();
    let floor = NonincreasingWord::new(floor).unwrap();
    let mut best = floor.clone();
    let hi: Vec<i32> = (0..m).map(|i| c.letters()[i].min(d.letters()[i])).collect();
    let mut candidate = Vec::with_capacity(m);
    collect_lower_bounds(&floor, &hi, c, d, &mut candidate, &mut |e| {
        best = join(&best, e).unwrap();
    });
    Ok(best)
}

fn collect_lower_bounds(
    floor: &NonincreasingWord,
    hi: &[i32],
    c: &NonincreasingWord,
    d: &NonincreasingWord,
    candidate: &mut Vec<i32>,
    found: &mut impl FnMut(&NonincreasingWord),
) {
    if candidate.len() == hi.len() {
        let word = NonincreasingWord::new(candidate.clone()).unwrap();
        if leq_m(&word, c).unwrap()
            && leq_m(&word, d).unwrap()
            && leq_m(floor, &word).unwrap()
        {
            found(&word);
        }
        return;
    }
    let i = candidate.len();
    let lo = floor.letters()[i];
    let mut cap = hi[i];
    if i > 0 {
        cap = cap.min(candidate[i - 1]);
    }
    let mut x = cap;
    while x >= lo {
        candidate.push(x);
        collect_lower_bounds(floor, hi, c, d, candidate, found);
        candidate.pop();
        x -= 1;
    }
}

/// A unit-drop perturbation of a word, with the set of dropped step indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BSubsetCertificate {
    word: NonincreasingWord,
    marks: BTreeSet<usize>,
}

impl BSubsetCertificate {
    pub fn word(&self) -> &NonincreasingWord {
        &self.word
    }

    pub fn marks(&self) -> &BTreeSet<usize> {
        &self.marks
    }

    pub fn sign(&self) -> i64 {
        if self.marks.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Rebuilds the perturbed word from the base word and the marks.
    pub fn reconstruct(base: &NonincreasingWord, marks: &BTreeSet<usize>) -> NonincreasingWord {
        let blocks = base.blocks();
        let mut out = Vec::with_capacity(base.len());
        let mut pos = 0usize;
        for (value, mult) in blocks {
            let mut x = value;
            for _ in 0..mult {
                if marks.contains(&pos) {
                    x -= 1;
                }
                out.push(x);
                pos += 1;
            }
        }
        NonincreasingWord::new(out).expect("unit drops keep words nonincreasing")
    }
}

/// The unit-drop set of a word: per block, all chains of unit drops starting
/// at the block value and ending above the next block's value (the last block
/// is unbounded below), concatenated across blocks.
pub fn b_set(c: &NonincreasingWord) -> Vec<BSubsetCertificate> {
    let blocks = c.blocks();
    let mut results = vec![(Vec::new(), BTreeSet::new())];
    let mut offset = 0usize;
    for (bi, &(value, mult)) in blocks.iter().enumerate() {
        let next_floor: Option<i32> = blocks.get(bi + 1).map(|&(v, _)| v);
        let mut block_chains: Vec<(Vec<i32>, BTreeSet<usize>)> = vec![(Vec::new(), BTreeSet::new())];
        for step in 0..mult {
            let mut grown = Vec::new();
            for (chain, marks) in block_chains {
                let prev = chain.last().copied().unwrap_or(value);
                for drop in [false, true] {
                    let x = if drop { prev - 1 } else { prev };
                    let mut chain2 = chain.clone();
                    chain2.push(x);
                    let mut marks2 = marks.clone();
                    if drop {
                        marks2.insert(offset + step);
                    }
                    grown.push((chain2, marks2));
                }
            }
            block_chains = grown;
        }
        if let Some(floor) = next_floor {
            block_chains.retain(|(chain, _)| *chain.last().unwrap() > floor);
        }
        let mut combined = Vec::with_capacity(results.len() * block_chains.len());
        for (prefix, marks) in &results {
            for (chain, block_marks) in &block_chains {
                let mut word = prefix.clone();
                word.extend_from_slice(chain);
                let mut all = marks.clone();
                all.extend(block_marks);
                combined.push((word, all));
            }
        }
        results = combined;
        offset += mult;
    }
    results
        .into_iter()
        .map(|(letters, marks)| BSubsetCertificate {
            word: NonincreasingWord::new(letters).expect("blocks stay nonincreasing"),
            marks,
        })
        .collect()
}

/// Closed-form Möbius function: the sign of the mark set on unit-drop
/// perturbations, zero elsewhere below.
pub fn mobius(lower: &NonincreasingWord, upper: &NonincreasingWord) -> Result<i64> {
    if !leq_m(lower, upper)? {
        return Err(Error::NotComparable);
    }
    Ok(b_set(upper)
        .into_iter()
        .find(|cert| cert.word() == lower)
        .map_or(0, |cert| cert.sign()))
}

/// Möbius values by direct recursion over the interval; the oracle for the
/// closed form.
pub fn mobius_recursive(lower: &NonincreasingWord, upper: &NonincreasingWord) -> Result<i64> {
    if !leq_m(lower, upper)? {
        return Err(Error::NotComparable);
    }
    let interval = enumerate_interval(lower, upper);
    let mut table: BTreeMap<NonincreasingWord, i64> = BTreeMap::new();
    // Sweep from the top: every word needs only values of words above it.
    let mut order = interval.clone();
    order.sort_by_key(|w| std::cmp::Reverse(w.letters().iter().map(|&x| x as i64).sum::<i64>()));
    for e in order {
        if e == *upper {
            table.insert(e, 1);
            continue;
        }
        let mut acc = 0i64;
        for (g, &mu) in &table {
            if *g != e && leq_m(&e, g).unwrap() {
                acc += mu;
            }
        }
        table.insert(e, -acc);
    }
    Ok(table[lower])
}

/// Every word of the closed interval, by componentwise search.
pub fn enumerate_interval(
    lower: &NonincreasingWord,
    upper: &NonincreasingWord,
) -> Vec<NonincreasingWord> {
    let m = lower.len();
    let mut out = Vec::new();
    let mut candidate = Vec::with_capacity(m);
    interval_rec(lower, upper, &mut candidate, &mut out);
    out
}

fn interval_rec(
    lower: &NonincreasingWord,
    upper: &NonincreasingWord,
    candidate: &mut Vec<i32>,
    out: &mut Vec<NonincreasingWord>,
) {
    let i = candidate.len();
    if i == lower.len() {
        let word = NonincreasingWord::new(candidate.clone()).unwrap();
        if leq_m(lower, &word).unwrap() && leq_m(&word, upper).unwrap() {
            out.push(word);
        }
        return;
    }
    let mut cap = upper.letters()[i];
    if i > 0 {
        cap = cap.min(candidate[i - 1]);
    }
    let mut x = cap;
    while x >= lower.letters()[i] {
        candidate.push(x);
        interval_rec(lower, upper, candidate, out);
        candidate.pop();
        x -= 1;
    }
}

/// The signed expansion of the monomial of `C` into back-stable slides,
/// keyed by multiplicity vectors of the perturbed words.
pub fn monomial_to_backslides(c: &NonincreasingWord) -> BackSlideExpansion {
    let mut out = BackSlideExpansion::new();
    for cert in b_set(c) {
        out.add_term(&cert.word().nvector(), cert.sign());
    }
    out
}

/// The same expansion restricted to strictly positive words: an exact
/// polynomial identity against the monomial. Requires positive input.
pub fn monomial_to_slides(c: &NonincreasingWord) -> Result<SlideExpansion> {
    if let Some(&bad) = c.letters().iter().find(|&&x| x < 1) {
        return Err(Error::NonPositiveLetter(bad));
    }
    let mut out = SlideExpansion::new();
    for cert in b_set(c) {
        if cert.word().is_positive() {
            out.add_term(&cert.word().nvector(), cert.sign());
        }
    }
    Ok(out)
}
