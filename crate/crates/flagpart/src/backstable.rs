//! Back-stable quasisymmetric functions, represented canonically in the
//! tensor basis: integer combinations of `F_a(x_-) * x^c` with `a` a
//! composition (the quasisymmetric factor lives in variables <= 0) and `c`
//! an arbitrary finitely supported exponent vector.
//!
//! Back-stable slides are the chain generating series with values ranging
//! over all integers; they form a basis of this space. The maps `eta0`,
//! `pi_plus`, and the variable shift `gamma` connect the back-stable picture
//! to quasisymmetric functions and to ordinary polynomials.

use crate::composition::Composition;
use crate::letter::{InjectiveWord, Letter};
use crate::nvector::NVector;
use crate::poly::Polynomial;
use crate::poset::FlaggedPoset;
use crate::slide::{expand_in_slide_basis, slide_polynomial, write_expansion};
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// An integer combination of tensor-basis terms `F_a(x_-) * x^c`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BackQSymElement {
    terms: BTreeMap<(Composition, NVector), i64>,
}

impl BackQSymElement {
    pub fn zero() -> BackQSymElement {
        BackQSymElement::default()
    }

    pub fn one() -> BackQSymElement {
        BackQSymElement::term(Composition::empty(), NVector::zero(), 1)
    }

    pub fn term(alpha: Composition, c: NVector, coeff: i64) -> BackQSymElement {
        let mut out = BackQSymElement::zero();
        out.add_term(&alpha, &c, coeff);
        out
    }

    pub fn add_term(&mut self, alpha: &Composition, c: &NVector, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let key = (alpha.clone(), c.clone());
        let entry = self.terms.entry(key.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &BackQSymElement) -> BackQSymElement {
        let mut out = self.clone();
        for ((a, c), &k) in &other.terms {
            out.add_term(a, c, k);
        }
        out
    }

    pub fn sub(&self, other: &BackQSymElement) -> BackQSymElement {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> BackQSymElement {
        if k == 0 {
            return BackQSymElement::zero();
        }
        BackQSymElement {
            terms: self
                .terms
                .iter()
                .map(|(key, &v)| (key.clone(), v * k))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, alpha: &Composition, c: &NVector) -> i64 {
        self.terms
            .get(&(alpha.clone(), c.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &NVector, i64)> {
        self.terms.iter().map(|((a, c), &k)| (a, c, k))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Multiplies the polynomial factor of every term by `x^m`.
    pub fn mul_monomial(&self, m: &NVector) -> BackQSymElement {
        BackQSymElement {
            terms: self
                .terms
                .iter()
                .map(|((a, c), &k)| ((a.clone(), c.plus(m)), k))
                .collect(),
        }
    }

    /// Evaluates with `x_i = 0` outside `[lo, hi]`: the quasisymmetric factor
    /// runs over the window's nonpositive part.
    pub fn window_eval(&self, lo: i32, hi: i32) -> Polynomial {
        let mut out = Polynomial::zero();
        for (alpha, c, k) in self.terms() {
            if !c.support().all(|i| lo <= i && i <= hi) {
                continue;
            }
            let qsym = fundamental_window(alpha, lo, hi.min(0));
            for (m, km) in qsym.terms() {
                out.add_term(&m.plus(c), km * k);
            }
        }
        out
    }

    /// Machine rendering: one `<alpha> <exponents> <coeff>` line per term.
    pub fn to_machine(&self) -> String {
        let mut out = String::from("tensor-element\n");
        for (alpha, c, k) in self.terms() {
            out.push_str(&format!("{alpha} {c} {k}\n"));
        }
        out
    }
}

impl fmt::Display for BackQSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (pos, (alpha, c, k)) in self.terms().enumerate() {
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
            write!(f, "F{alpha}|")?;
            if c.is_zero() {
                write!(f, "1")?;
            } else {
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
            }
        }
        Ok(())
    }
}

/// The fundamental quasisymmetric polynomial of a composition evaluated in
/// the variables `x_lo..x_hi`: weakly increasing index tuples, strictly
/// increasing across the composition's descent set.
pub fn fundamental_window(alpha: &Composition, lo: i32, hi: i32) -> Polynomial {
    let r = alpha.weight();
    let strict_after = descent_flags(alpha);
    let mut out = Polynomial::zero();
    let mut exponents = NVector::zero();
    window_rec(r, &strict_after, 0, lo, lo, hi, &mut exponents, &mut out);
    out
}

/// `F_alpha(x_1..x_n)`; zero when the composition is longer than `n`.
pub fn fundamental_truncated(alpha: &Composition, n: u32) -> Polynomial {
    fundamental_window(alpha, 1, n as i32)
}

// strict_after[j] is true when position j (0-based) must increase strictly
// to position j + 1.
fn descent_flags(alpha: &Composition) -> Vec<bool> {
    let r = alpha.weight() as usize;
    let mut flags = vec![false; r.saturating_sub(1)];
    let mut acc = 0usize;
    for &p in &alpha.parts()[..alpha.len().saturating_sub(1)] {
        acc += p as usize;
        flags[acc - 1] = true;
    }
    flags
}

#[allow(clippy::too_many_arguments)]
fn window_rec(
    r: u32,
    strict_after: &[bool],
    pos: u32,
    min: i32,
    lo: i32,
    hi: i32,
    exponents: &mut NVector,
    out: &mut Polynomial,
) {
    if pos == r {
        out.add_term(exponents, 1);
        return;
    }
    let mut i = min.max(lo);
    while i <= hi {
        exponents.add_at(i, 1);
        let next_min = if (pos as usize) < strict_after.len() && strict_after[pos as usize] {
            i + 1
        } else {
            i
        };
        window_rec(r, strict_after, pos + 1, next_min, lo, hi, exponents, out);
        exponents.set(i, exponents.get(i) - 1);
        i += 1;
    }
}

/// The decompositions `c = d + e` splitting the flattening as a concatenation
/// or a genuine near-concatenation: `d` takes an initial run of the support
/// (its last supported entry possibly partial). There is exactly one for each
/// weight of `d`, listed increasing.
pub fn good_decompositions(c: &NVector) -> Result<Vec<(NVector, NVector)>> {
    if let Some(m) = c.min_index() {
        if m < 1 {
            return Err(Error::NonPositiveSupport(m));
        }
    }
    let entries: Vec<(i32, u32)> = c.entries().collect();
    let total = c.weight();
    let mut out = Vec::with_capacity(total as usize + 1);
    for w in 0..=total {
        let mut d = NVector::zero();
        let mut left = w;
        for &(i, n) in &entries {
            if left == 0 {
                break;
            }
            let take = n.min(left);
            d.add_at(i, take);
            left -= take;
        }
        let e = c.minus(&d).expect("d <= c componentwise");
        out.push((d, e));
    }
    Ok(out)
}

/// The back-stable slide indexed by any exponent vector, in canonical tensor
/// form. For positive support this is the sum over good decompositions of
/// `F_{fl(d)} * (slide of e)`; general support reduces to that case by
/// shifting into positive indices and back.
pub fn backslide(c: &NVector) -> BackQSymElement {
    match c.min_index() {
        None => BackQSymElement::one(),
        Some(m) if m >= 1 => {
            let mut out = BackQSymElement::zero();
            for (d, e) in good_decompositions(c).expect("positive support") {
                let alpha = d.flatten();
                let poly = slide_polynomial(&e).expect("positive support");
                for (mono, k) in poly.terms() {
                    out.add_term(&alpha, mono, k);
                }
            }
            out
        }
        Some(m) => {
            let offset = 1 - m;
            gamma_shift(&backslide(&c.shift(offset)), -offset)
        }
    }
}

/// Projection to the quasisymmetric factor: keeps terms with trivial
/// polynomial part.
pub fn eta0(f: &BackQSymElement) -> BTreeMap<Composition, i64> {
    let mut out = BTreeMap::new();
    for (alpha, c, k) in f.terms() {
        if c.is_zero() {
            out.insert(alpha.clone(), k);
        }
    }
    out
}

/// Truncation killing the variables `x_i` with `i <= 0`: only terms with
/// empty quasisymmetric factor and positive polynomial support survive.
pub fn pi_plus(f: &BackQSymElement) -> Polynomial {
    let mut out = Polynomial::zero();
    for (alpha, c, k) in f.terms() {
        if alpha.is_empty() && c.has_positive_support() {
            out.add_term(c, k);
        }
    }
    out
}

/// The tensor expansion of `F_alpha(x_{<=b})`. For `b >= 1` the composition
/// splits across the boundary with the right factor expanded into monomials
/// of `x_1..x_b`; for `b <= -1` the right factor is removed instead, giving
/// signed terms with the conjugate composition in `x_{b+1}..x_0`.
pub fn expand_f_shifted(alpha: &Composition, b: i32) -> BackQSymElement {
    let mut out = BackQSymElement::zero();
    if b == 0 {
        out.add_term(alpha, &NVector::zero(), 1);
        return out;
    }
    for (beta, gamma) in alpha.splits() {
        if b >= 1 {
            let poly = fundamental_window(&gamma, 1, b);
            for (m, k) in poly.terms() {
                out.add_term(&beta, m, k);
            }
        } else {
            let sign = if gamma.weight() % 2 == 0 { 1 } else { -1 };
            let poly = fundamental_window(&gamma.transpose(), b + 1, 0);
            for (m, k) in poly.terms() {
                out.add_term(&beta, m, sign * k);
            }
        }
    }
    out
}

/// The variable shift `x_i -> x_{i+offset}` as a map of the tensor basis,
/// applied one unit at a time.
pub fn gamma_shift(f: &BackQSymElement, offset: i32) -> BackQSymElement {
    let mut current = f.clone();
    for _ in 0..offset.unsigned_abs() {
        let dir = offset.signum();
        let mut next = BackQSymElement::zero();
        for (alpha, c, k) in current.terms() {
            let moved = c.shift(dir);
            for (beta, m, k2) in expand_f_shifted(alpha, dir).terms() {
                next.add_term(beta, &m.plus(&moved), k * k2);
            }
        }
        current = next;
    }
    current
}

/// An integer combination of back-stable slides.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BackSlideExpansion {
    terms: BTreeMap<NVector, i64>,
}

impl BackSlideExpansion {
    pub fn new() -> BackSlideExpansion {
        BackSlideExpansion::default()
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

    /// Reassembles the element the expansion stands for.
    pub fn to_element(&self) -> BackQSymElement {
        let mut out = BackQSymElement::zero();
        for (c, k) in self.terms() {
            out = out.add(&backslide(c).scale(k));
        }
        out
    }

    pub fn to_machine(&self) -> String {
        let mut out = String::from("backslide-expansion\n");
        for (c, k) in self.terms().rev() {
            out.push_str(&format!("{c} {k}\n"));
        }
        out
    }
}

impl fmt::Display for BackSlideExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expansion(f, self.terms().rev(), "bS")
    }
}

/// Packs a composition at the nonpositive indices ending at 0, followed by a
/// positive-support vector.
fn pack_index(alpha: &Composition, c: &NVector) -> NVector {
    debug_assert!(c.has_positive_support());
    let p = alpha.len() as i32;
    let mut d = c.clone();
    for (j, &part) in alpha.parts().iter().enumerate() {
        d.set(j as i32 + 1 - p, part);
    }
    d
}

/// Expands an element in the back-slide basis. The polynomial factors are
/// first shifted into positive support; each pass rewrites the top-weight
/// layer through the slide basis and subtracts the matching back-slides,
/// strictly lowering the positive weight.
pub fn expand_in_backslide_basis(f: &BackQSymElement) -> BackSlideExpansion {
    let offset = f
        .terms()
        .filter_map(|(_, c, _)| c.min_index())
        .min()
        .map_or(0, |m| (1 - m).max(0));
    let mut g = gamma_shift(f, offset);
    let mut out = BackSlideExpansion::new();
    loop {
        let top = g
            .terms()
            .filter(|(_, c, _)| !c.is_zero())
            .map(|(_, c, _)| c.weight())
            .max();
        let Some(w) = top else { break };
        // Slide-expand the weight-w layer of each quasisymmetric factor.
        let mut layers: BTreeMap<Composition, Polynomial> = BTreeMap::new();
        for (alpha, c, k) in g.terms() {
            if c.weight() == w {
                layers.entry(alpha.clone()).or_default().add_term(c, k);
            }
        }
        for (alpha, poly) in layers {
            let slides = expand_in_slide_basis(&poly)
                .expect("shifted polynomial parts have positive support");
            for (cslide, k) in slides.terms() {
                let index = pack_index(&alpha, cslide);
                out.add_term(&index, k);
                g = g.sub(&backslide(&index).scale(k));
            }
        }
    }
    for (alpha, _, k) in g.terms() {
        out.add_term(&pack_index(alpha, &NVector::zero()), k);
    }
    if offset != 0 {
        let mut shifted = BackSlideExpansion::new();
        for (c, k) in out.terms() {
            shifted.add_term(&c.shift(-offset), k);
        }
        return shifted;
    }
    out
}

/// The shuffle rule: interleavings of the canonical words, the second word's
/// tiers raised past the first's, each normalized back to a basis index.
pub fn multiply_backslides(c: &NVector, d: &NVector) -> BackSlideExpansion {
    let base = c.word_of();
    let raised: Vec<Letter> = d
        .word_of()
        .letters()
        .iter()
        .map(|l| Letter::new(l.value(), l.tier() + c.get(l.value())))
        .collect();
    let mut out = BackSlideExpansion::new();
    let mut buffer = Vec::with_capacity(base.len() + raised.len());
    shuffle_rec(base.letters(), &raised, &mut buffer, &mut out);
    out
}

fn shuffle_rec(
    a: &[Letter],
    b: &[Letter],
    buffer: &mut Vec<Letter>,
    out: &mut BackSlideExpansion,
) {
    if a.is_empty() && b.is_empty() {
        let word =
            InjectiveWord::new(buffer.clone()).expect("tier raise keeps letters distinct");
        out.add_term(&word.rs_backstable(), 1);
        return;
    }
    if let Some((&first, rest)) = a.split_first() {
        buffer.push(first);
        shuffle_rec(rest, b, buffer, out);
        buffer.pop();
    }
    if let Some((&first, rest)) = b.split_first() {
        buffer.push(first);
        shuffle_rec(a, rest, buffer, out);
        buffer.pop();
    }
}

/// The product in the back-stable space: both factors are expanded in the
/// back-slide basis, multiplied pairwise by the shuffle rule, and assembled
/// back to tensor form.
pub fn multiply(f: &BackQSymElement, g: &BackQSymElement) -> BackQSymElement {
    let ef = expand_in_backslide_basis(f);
    let eg = expand_in_backslide_basis(g);
    let mut out = BackQSymElement::zero();
    for (c, kc) in ef.terms() {
        for (d, kd) in eg.terms() {
            let product = multiply_backslides(c, d);
            for (key, k) in product.terms() {
                out = out.add(&backslide(key).scale(kc * kd * k));
            }
        }
    }
    out
}

/// The back-stable generating series of a flagged poset: the sum of
/// back-slides over its linear extensions. Never zero on a nonempty poset.
pub fn back_k(poset: &FlaggedPoset) -> BackQSymElement {
    let mut out = BackQSymElement::zero();
    for ext in poset.linear_extensions() {
        let word = poset.extension_word(&ext);
        out = out.add(&backslide(&word.rs_backstable()));
    }
    out
}

/// Parses an element file: `<coeff> F(<alpha>)|<monomial>` lines, where the
/// monomial is `1` or a `*`-product of `x(i)^k` factors; `#` comments.
pub fn parse_element(input: &str) -> Result<BackQSymElement> {
    let mut out = BackQSymElement::zero();
    for (lineno, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
        let (coeff_str, term) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| bad("expected `<coeff> <term>`".into()))?;
        let coeff: i64 = coeff_str
            .parse()
            .map_err(|_| bad(format!("bad coefficient {coeff_str:?}")))?;
        let (alpha, c) = parse_tensor_term(term.trim())
            .map_err(|e| bad(format!("{e}")))?;
        out.add_term(&alpha, &c, coeff);
    }
    Ok(out)
}

/// Parses a `F(<alpha>)|<monomial>` token.
pub fn parse_tensor_term(s: &str) -> Result<(Composition, NVector)> {
    let rest = s
        .strip_prefix('F')
        .ok_or_else(|| Error::Parse(format!("expected F(...)|..., got {s:?}")))?;
    let (alpha_str, mono) = rest
        .split_once('|')
        .ok_or_else(|| Error::Parse(format!("missing `|` in tensor term {s:?}")))?;
    let alpha: Composition = alpha_str.parse()?;
    let mono = mono.trim();
    let c = if mono == "1" {
        NVector::zero()
    } else {
        let poly: Polynomial = mono.parse()?;
        let mut terms = poly.terms();
        match (terms.next(), terms.next()) {
            (Some((c, 1)), None) => c.clone(),
            _ => return Err(Error::Parse(format!("expected a plain monomial in {s:?}"))),
        }
    };
    Ok((alpha, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::slide::slide_polynomial;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn nv(counts: &[u32]) -> NVector {
        NVector::from_positive(counts)
    }

    #[test]
    fn fundamental_window_examples() {
        // F_(1,2) in three variables: tuples i1 < i2 <= i3.
        let p = fundamental_truncated(&comp(&[1, 2]), 3);
        let expected: Polynomial = "x(1)*x(2)^2 + x(1)*x(2)*x(3) + x(1)*x(3)^2 + x(2)*x(3)^2"
            .parse()
            .unwrap();
        assert_eq!(p, expected);

        assert_eq!(fundamental_truncated(&Composition::empty(), 0), Polynomial::one());

        let p = fundamental_truncated(&comp(&[2, 1]), 2);
        let expected: Polynomial = "x(1)^2*x(2)".parse().unwrap();
        assert_eq!(p, expected);

        // Too few variables for the length.
        assert!(fundamental_truncated(&comp(&[1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn good_decomposition_examples() {
        let c = nv(&[0, 2, 0, 2]);
        let decs = good_decompositions(&c).unwrap();
        assert_eq!(decs.len(), 5);
        let flats: Vec<(String, String)> = decs
            .iter()
            .map(|(d, e)| (d.flatten().to_string(), e.flatten().to_string()))
            .collect();
        assert_eq!(
            flats,
            vec![
                ("()".into(), "(2,2)".into()),
                ("(1)".into(), "(1,2)".into()),
                ("(2)".into(), "(2)".into()),
                ("(2,1)".into(), "(1)".into()),
                ("(2,2)".into(), "()".into()),
            ]
        );

        assert_eq!(good_decompositions(&NVector::zero()).unwrap().len(), 1);
        assert_eq!(good_decompositions(&nv(&[0, 1])).unwrap().len(), 2);
        assert!(good_decompositions(&NVector::from_pairs([(0, 1)])).is_err());
    }

    #[test]
    fn backslide_positive_example() {
        // The five-term tensor expansion of the back-slide at (0,2,0,2).
        let f = backslide(&nv(&[0, 2, 0, 2]));
        let mut expected = BackQSymElement::zero();
        for (alpha, e) in [
            (comp(&[]), nv(&[0, 2, 0, 2])),
            (comp(&[1]), nv(&[0, 1, 0, 2])),
            (comp(&[2]), nv(&[0, 0, 0, 2])),
            (comp(&[2, 1]), nv(&[0, 0, 0, 1])),
            (comp(&[2, 2]), NVector::zero()),
        ] {
            for (m, k) in slide_polynomial(&e).unwrap().terms() {
                expected.add_term(&alpha, m, k);
            }
        }
        assert_eq!(f, expected);
    }

    #[test]
    fn backslide_degenerate_cases() {
        assert_eq!(backslide(&NVector::zero()), BackQSymElement::one());

        // Support packed at indices <= 0 gives a pure quasisymmetric factor.
        let c = NVector::from_pairs([(-1, 2), (0, 2)]);
        let f = backslide(&c);
        assert_eq!(f, BackQSymElement::term(comp(&[2, 2]), NVector::zero(), 1));

        // Mixed support: the scan example with c_0 = c_1 = 1.
        let c = NVector::from_pairs([(0, 1), (1, 1)]);
        let f = backslide(&c);
        let mut expected = BackQSymElement::term(comp(&[1, 1]), NVector::zero(), 1);
        expected.add_term(&comp(&[1]), &nv(&[1]), 1);
        assert_eq!(f, expected);
    }

    #[test]
    fn eta0_and_pi_plus() {
        let c = nv(&[0, 2, 0, 2]);
        let f = backslide(&c);
        let q = eta0(&f);
        assert_eq!(q.len(), 1);
        assert_eq!(q.get(&comp(&[2, 2])), Some(&1));
        assert_eq!(pi_plus(&f), slide_polynomial(&c).unwrap());

        let mixed = backslide(&NVector::from_pairs([(0, 1), (1, 1)]));
        assert!(pi_plus(&mixed).is_zero());
        assert_eq!(eta0(&mixed).get(&comp(&[1, 1])), Some(&1));

        let g = BackQSymElement::term(comp(&[2]), NVector::zero(), 1)
            .add(&BackQSymElement::term(comp(&[1]), nv(&[1]), 1));
        assert_eq!(eta0(&g).get(&comp(&[2])), Some(&1));
        assert_eq!(eta0(&g).len(), 1);
        assert!(pi_plus(&BackQSymElement::term(comp(&[1]), NVector::zero(), 1)).is_zero());
    }

    #[test]
    fn expand_f_shifted_examples() {
        let one = expand_f_shifted(&Composition::empty(), 2);
        assert_eq!(one, BackQSymElement::one());

        let f = expand_f_shifted(&comp(&[1]), 1);
        let mut expected = BackQSymElement::term(comp(&[1]), NVector::zero(), 1);
        expected.add_term(&Composition::empty(), &nv(&[1]), 1);
        assert_eq!(f, expected);

        let f = expand_f_shifted(&comp(&[1]), -1);
        let mut expected = BackQSymElement::term(comp(&[1]), NVector::zero(), 1);
        expected.add_term(&Composition::empty(), &NVector::from_pairs([(0, 1)]), -1);
        assert_eq!(f, expected);
    }

    #[test]
    fn gamma_shift_examples() {
        let f = BackQSymElement::term(Composition::empty(), nv(&[1]), 1);
        assert_eq!(
            gamma_shift(&f, 1),
            BackQSymElement::term(Composition::empty(), nv(&[0, 1]), 1)
        );

        let f = BackQSymElement::term(comp(&[1]), NVector::zero(), 1);
        let shifted = gamma_shift(&f, 1);
        let mut expected = BackQSymElement::term(comp(&[1]), NVector::zero(), 1);
        expected.add_term(&Composition::empty(), &nv(&[1]), 1);
        assert_eq!(shifted, expected);

        // Unit shifts invert.
        let f = backslide(&nv(&[1, 0, 2]));
        assert_eq!(gamma_shift(&gamma_shift(&f, 2), -2), f);

        // Shift equivariance of back-slides.
        let c = nv(&[0, 1, 1]);
        assert_eq!(gamma_shift(&backslide(&c), -2), backslide(&c.shift(-2)));
    }

    #[test]
    fn backslide_expansion_round_trip() {
        for c in [
            nv(&[0, 2, 0, 2]),
            nv(&[1, 2]),
            NVector::from_pairs([(-1, 1), (2, 1)]),
            NVector::from_pairs([(0, 1), (1, 1)]),
            NVector::zero(),
        ] {
            let e = expand_in_backslide_basis(&backslide(&c));
            assert_eq!(e.len(), 1, "expansion of a basis element is itself");
            assert_eq!(e.coeff(&c), 1);
        }

        // A pure quasisymmetric factor is already a back-slide.
        let f = BackQSymElement::term(comp(&[2, 2]), NVector::zero(), 1);
        let e = expand_in_backslide_basis(&f);
        assert_eq!(e.len(), 1);
        assert_eq!(e.coeff(&NVector::from_pairs([(-1, 2), (0, 2)])), 1);
    }

    #[test]
    fn monomial_backslide_expansion() {
        // x(2)*x(4)^2 as a tensor element expands with six signed terms.
        let f = BackQSymElement::term(
            Composition::empty(),
            NVector::from_pairs([(2, 1), (4, 2)]),
            1,
        );
        let e = expand_in_backslide_basis(&f);
        let expect: Vec<(&[u32], i64)> = vec![
            (&[0, 1, 0, 2], 1),
            (&[0, 1, 2], -1),
            (&[0, 1, 1, 1], -1),
            (&[1, 0, 0, 2], -1),
            (&[1, 0, 2], 1),
            (&[1, 0, 1, 1], 1),
        ];
        assert_eq!(e.len(), expect.len());
        for (counts, k) in expect {
            assert_eq!(e.coeff(&nv(counts)), k);
        }
        assert_eq!(e.to_element(), f);
    }

    #[test]
    fn shuffle_example() {
        let e = multiply_backslides(&nv(&[0, 1, 0, 2]), &nv(&[0, 1]));
        assert_eq!(e.len(), 4);
        assert_eq!(e.coeff(&nv(&[0, 2, 0, 2])), 1);
        assert_eq!(e.coeff(&nv(&[1, 1, 0, 2])), 1);
        assert_eq!(e.coeff(&nv(&[1, 2, 0, 1])), 1);
        assert_eq!(e.coeff(&nv(&[1, 3])), 1);

        let e = multiply_backslides(&nv(&[0, 1, 0, 2]), &NVector::zero());
        assert_eq!(e.len(), 1);
        assert_eq!(e.coeff(&nv(&[0, 1, 0, 2])), 1);
    }

    #[test]
    fn multiply_properties() {
        let f = backslide(&nv(&[0, 1, 0, 2]));
        let g = backslide(&nv(&[0, 1]));
        let product = multiply(&f, &g);
        // eta0 of the product is the flattened shuffle.
        let q = eta0(&product);
        for alpha in [comp(&[2, 2]), comp(&[1, 1, 2]), comp(&[1, 2, 1]), comp(&[1, 3])] {
            assert_eq!(q.get(&alpha), Some(&1), "missing {alpha}");
        }
        assert_eq!(q.len(), 4);
        // pi_plus is multiplicative here.
        assert_eq!(pi_plus(&product), &pi_plus(&f) * &pi_plus(&g));
        // Multiplying by one changes nothing.
        assert_eq!(multiply(&f, &BackQSymElement::one()), f);
    }

    #[test]
    fn back_k_examples() {
        use crate::letter::Letter;
        let p = FlaggedPoset::new(
            vec![
                ("v1".into(), Letter::new(1, 2)),
                ("v2".into(), Letter::new(1, 1)),
            ],
            vec![("v1".into(), "v2".into())],
        )
        .unwrap();
        let f = back_k(&p);
        assert_eq!(f, backslide(&NVector::from_pairs([(0, 1), (1, 1)])));
        assert!(!f.is_zero());

        let single = FlaggedPoset::new(vec![("a".into(), Letter::new(3, 1))], vec![]).unwrap();
        let f = back_k(&single);
        assert_eq!(f, backslide(&nv(&[0, 0, 1])));
    }

    #[test]
    fn back_k_quasisymmetric_projection() {
        use crate::letter::Letter;
        // The two-extension poset: a weak below b, c strict below b. The
        // projection is F(2,1) + F(1,2) for every flag value.
        for n in [2, 9] {
            let p = FlaggedPoset::new(
                vec![
                    ("a".into(), Letter::new(n, 1)),
                    ("b".into(), Letter::new(n, 2)),
                    ("c".into(), Letter::new(n, 3)),
                ],
                vec![("a".into(), "b".into()), ("c".into(), "b".into())],
            )
            .unwrap();
            let q = eta0(&back_k(&p));
            assert_eq!(q.len(), 2);
            assert_eq!(q.get(&comp(&[2, 1])), Some(&1));
            assert_eq!(q.get(&comp(&[1, 2])), Some(&1));
        }
    }

    #[test]
    fn display_and_parse() {
        let f = backslide(&NVector::from_pairs([(0, 1), (1, 1)]));
        assert_eq!(f.to_string(), "F(1)|x(1) + F(1,1)|1");
        let text = "1 F(1)|x(1)\n1 F(1,1)|1\n";
        assert_eq!(parse_element(text).unwrap(), f);
        let round = parse_element(
            &f.terms()
                .map(|(a, c, k)| {
                    let mono = if c.is_zero() {
                        "1".to_string()
                    } else {
                        Polynomial::term(c.clone(), 1).to_string()
                    };
                    format!("{k} F{a}|{mono}")
                })
                .collect::<Vec<_>>()
                .join("\n"),
        )
        .unwrap();
        assert_eq!(round, f);
        assert!(parse_element("1 G(1)|1").is_err());
    }

    #[test]
    fn window_eval_matches_series() {
        // The back-slide at c_1 = 1 is the sum of all x_i with i <= 1.
        let f = backslide(&nv(&[1]));
        let p = f.window_eval(-2, 3);
        let expected: Polynomial = "x(-2) + x(-1) + x(0) + x(1)".parse().unwrap();
        assert_eq!(p, expected);
    }
}
