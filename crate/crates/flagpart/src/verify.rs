//! The invariant suites behind the `verify` command: exhaustive and seeded
//! property checks at desk-scale bounds, one named check per property.

use crate::backstable::{
    backslide, eta0, expand_f_shifted, expand_in_backslide_basis, fundamental_truncated,
    fundamental_window, gamma_shift, multiply, pi_plus, BackQSymElement,
};
use crate::composition::Composition;
use crate::forest::{expand_in_forest_basis, IndexedForest, PlaneTree};
use crate::kostka::{
    b_set, join, leq_m, meet, mobius, mobius_recursive, monomial_to_slides,
    BSubsetCertificate, NonincreasingWord,
};
use crate::letter::{standardize, InjectiveWord, Letter};
use crate::nvector::NVector;
use crate::poly::Polynomial;
use crate::poset::FlaggedPoset;
use crate::rng::Rng;
use crate::slide::{expand_in_slide_basis, slide_polynomial, slide_series};
use std::collections::{BTreeMap, BTreeSet};

/// Outcome of one named property check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub detail: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.detail.is_empty()
    }
}

/// Desk-scale bounds for the suites.
#[derive(Debug, Clone)]
pub struct Bounds {
    /// Number of generated flagged posets in the corpus.
    pub poset_corpus: usize,
    /// Maximum elements per generated poset.
    pub poset_elems: usize,
    /// Maximum flag value in the corpus.
    pub poset_flag_value: i32,
    /// Maximum length of words in the slide-consistency sweep.
    pub slide_word_len: usize,
    /// Seed for every randomized corpus.
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Bounds {
        Bounds {
            poset_corpus: 220,
            poset_elems: 6,
            poset_flag_value: 5,
            slide_word_len: 5,
            seed: 0x5eed_f1a6,
        }
    }
}

type CheckResult = std::result::Result<(), String>;

/// Runs every suite, returning one entry per property.
pub fn run_all(bounds: &Bounds) -> Vec<Check> {
    type NamedCheck = (&'static str, Box<dyn Fn() -> CheckResult>);
    let checks: Vec<NamedCheck> = vec![
        ("core/standardize-injective", Box::new(check_standardize_injective)),
        ("core/word-of-round-trip", Box::new(check_word_round_trip)),
        ("core/rs-fixed-point", Box::new(check_rs_fixed_point)),
        ("core/subset-round-trip", Box::new(check_subset_round_trip)),
        ("core/transpose-involution", Box::new(check_transpose)),
        ("poly/ring-axioms", {
            let seed = bounds.seed;
            Box::new(move || check_ring_axioms(seed))
        }),
        ("poly/revlex-total-order", Box::new(check_revlex_order)),
        ("poly/slide-triangularity", Box::new(check_slide_triangularity)),
        ("poset/stanley-decomposition", {
            let b = bounds.clone();
            Box::new(move || check_stanley_corpus(&b))
        }),
        ("poset/extension-expansion", {
            let b = bounds.clone();
            Box::new(move || check_k_expansion(&b))
        }),
        ("poset/fundamental-truncation", Box::new(check_fundamental_truncation)),
        ("poset/omega-rho-round-trip", {
            let b = bounds.clone();
            Box::new(move || check_omega_rho_corpus(&b))
        }),
        ("slide/rs-consistency", {
            let len = bounds.slide_word_len;
            Box::new(move || check_slide_rs_consistency(len))
        }),
        ("slide/unique-expansion", Box::new(check_slide_unique_expansion)),
        ("slide/linearity", {
            let seed = bounds.seed;
            Box::new(move || check_slide_linearity(seed))
        }),
        ("slide/signed-formula-agreement", Box::new(check_slide_kostka_agreement)),
        ("forest/bijection-round-trip", Box::new(check_forest_bijection)),
        ("forest/leading-monomial", Box::new(check_forest_leading)),
        ("forest/slide-sum", Box::new(check_forest_slide_sum)),
        ("forest/basis-round-trip", Box::new(check_forest_basis)),
        ("back/tensor-lemma", Box::new(check_twz_lemma)),
        ("back/gamma-equivariance", Box::new(check_gamma_equivariance)),
        ("back/stabilization", {
            let seed = bounds.seed;
            Box::new(move || check_stabilization(seed, 20))
        }),
        ("back/basis-round-trip", {
            let seed = bounds.seed;
            Box::new(move || check_backslide_basis(seed))
        }),
        ("back/alphabet-split-oracle", Box::new(check_option_oracle)),
        ("back/product-laws", Box::new(check_product_laws)),
        ("kostka/mobius-oracle", Box::new(check_mobius_oracle)),
        ("kostka/lattice-laws", Box::new(check_lattice_laws)),
        ("kostka/unit-drop-ideal", Box::new(check_bset_ideal)),
        ("kostka/monomial-identity", Box::new(check_monomial_identity)),
        ("kostka/backstable-truncation", Box::new(check_backstable_truncation)),
        ("kostka/mobius-inversion", Box::new(check_mobius_inversion)),
    ];
    checks
        .into_iter()
        .map(|(name, f)| Check {
            name,
            detail: f().err().unwrap_or_default(),
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Enumerators shared with the acceptance suite.

/// All exponent vectors supported in `[lo, hi]` with weight at most `max`.
pub fn all_nvectors(lo: i32, hi: i32, max_weight: u32) -> Vec<NVector> {
    let mut out = Vec::new();
    let mut counts = Vec::new();
    fn rec(lo: i32, hi: i32, left: u32, counts: &mut Vec<(i32, u32)>, out: &mut Vec<NVector>) {
        let i = lo + counts.len() as i32;
        if i > hi {
            out.push(NVector::from_pairs(counts.iter().copied()));
            return;
        }
        for n in 0..=left {
            counts.push((i, n));
            rec(lo, hi, left - n, counts, out);
            counts.pop();
        }
    }
    rec(lo, hi, max_weight, &mut counts, &mut out);
    out.sort();
    out.dedup();
    out
}

/// All compositions of weight at most `max`.
pub fn all_compositions(max_weight: u32) -> Vec<Composition> {
    let mut out = vec![Composition::empty()];
    for w in 1..=max_weight {
        rec(w, &mut Vec::new(), &mut out);
    }
    fn rec(left: u32, parts: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if left == 0 {
            out.push(Composition::new(parts.clone()).unwrap());
            return;
        }
        for p in 1..=left {
            parts.push(p);
            rec(left - p, parts, out);
            parts.pop();
        }
    }
    out
}

/// All nonincreasing words of exactly length `len` with letters in `[lo, hi]`.
pub fn all_nonincreasing_words(lo: i32, hi: i32, len: usize) -> Vec<NonincreasingWord> {
    let mut out = Vec::new();
    let mut letters = Vec::new();
    fn rec(lo: i32, hi: i32, len: usize, letters: &mut Vec<i32>, out: &mut Vec<NonincreasingWord>) {
        if letters.len() == len {
            out.push(NonincreasingWord::new(letters.clone()).unwrap());
            return;
        }
        let cap = letters.last().copied().unwrap_or(hi);
        let mut x = cap;
        while x >= lo {
            letters.push(x);
            rec(lo, hi, len, letters, out);
            letters.pop();
            x -= 1;
        }
    }
    rec(lo, hi, len, &mut letters, &mut out);
    out
}

/// All plane binary trees with `n` internal nodes.
pub fn all_trees(n: usize) -> Vec<PlaneTree> {
    if n == 0 {
        return vec![PlaneTree::Leaf];
    }
    let mut out = Vec::new();
    for k in 0..n {
        for left in all_trees(k) {
            for right in all_trees(n - 1 - k) {
                out.push(PlaneTree::node(left.clone(), right));
            }
        }
    }
    out
}

/// All indexed forests with intervals inside `[lo, hi]` and at most
/// `max_size` internal nodes.
pub fn all_forests(lo: i32, hi: i32, max_size: usize) -> Vec<IndexedForest> {
    let mut out = Vec::new();
    let mut acc: Vec<(i32, i32, PlaneTree)> = Vec::new();
    fn rec(
        start: i32,
        hi: i32,
        left: usize,
        acc: &mut Vec<(i32, i32, PlaneTree)>,
        out: &mut Vec<IndexedForest>,
    ) {
        out.push(IndexedForest::new(acc.clone()).unwrap());
        let mut a = start;
        while a < hi {
            let mut b = a + 1;
            while b <= hi && (b - a) as usize <= left {
                for tree in all_trees((b - a) as usize) {
                    acc.push((a, b, tree));
                    rec(b + 1, hi, left - (b - a) as usize, acc, out);
                    acc.pop();
                }
                b += 1;
            }
            a += 1;
        }
    }
    rec(lo, hi, max_size, &mut acc, &mut out);
    out
}

/// All injective words up to `max_len` over letters with the given values
/// and tiers.
pub fn all_injective_words(values: &[i32], tiers: &[u32], max_len: usize) -> Vec<InjectiveWord> {
    let pool: Vec<Letter> = values
        .iter()
        .flat_map(|&v| tiers.iter().map(move |&t| Letter::new(v, t)))
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(pool: &[Letter], max_len: usize, current: &mut Vec<Letter>, out: &mut Vec<InjectiveWord>) {
        out.push(InjectiveWord::new(current.clone()).unwrap());
        if current.len() == max_len {
            return;
        }
        for &l in pool {
            if !current.contains(&l) {
                current.push(l);
                rec(pool, max_len, current, out);
                current.pop();
            }
        }
    }
    rec(&pool, max_len, &mut current, &mut out);
    out
}

/// Deterministic corpus of flagged posets with positive flag values.
pub fn poset_corpus(count: usize, max_elems: usize, max_value: i32, seed: u64) -> Vec<FlaggedPoset> {
    let mut rng = Rng::new(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = 1 + rng.below(max_elems as u64) as usize;
        // Sample n distinct letters from a small pool.
        let mut pool: Vec<Letter> = (1..=max_value)
            .flat_map(|v| (1..=3).map(move |t| Letter::new(v, t)))
            .collect();
        for i in (1..pool.len()).rev() {
            let j = rng.below(i as u64 + 1) as usize;
            pool.swap(i, j);
        }
        let elements: Vec<(String, Letter)> = (0..n)
            .map(|i| (format!("e{i}"), pool[i]))
            .collect();
        let mut covers = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.chance(1, 3) {
                    covers.push((format!("e{i}"), format!("e{j}")));
                }
            }
        }
        out.push(FlaggedPoset::new(elements, covers).expect("generated posets are valid"));
    }
    out
}

/// Random polynomial with terms in the given index window.
pub fn random_polynomial(rng: &mut Rng, terms: usize, lo: i32, hi: i32, max_exp: u32) -> Polynomial {
    let mut p = Polynomial::zero();
    for _ in 0..terms {
        let mut c = NVector::zero();
        for i in lo..=hi {
            c.set(i, rng.below(max_exp as u64 + 1) as u32);
        }
        let coeff = rng.range_i32(-3, 3) as i64;
        p.add_term(&c, coeff);
    }
    p
}

/// Random tensor element of bounded total weight.
pub fn random_element(rng: &mut Rng, max_weight: u32) -> BackQSymElement {
    let mut f = BackQSymElement::zero();
    let terms = 1 + rng.below(2);
    for _ in 0..terms {
        let alpha_weight = rng.below(max_weight as u64 + 1) as u32;
        let compositions = all_compositions(alpha_weight);
        let alpha = compositions[rng.below(compositions.len() as u64) as usize].clone();
        let mut c = NVector::zero();
        let mut left = max_weight - alpha.weight().min(max_weight);
        while left > 0 && rng.chance(2, 3) {
            c.add_at(rng.range_i32(-2, 2), 1);
            left -= 1;
        }
        let coeff = [-2, -1, 1, 2][rng.below(4) as usize];
        f.add_term(&alpha, &c, coeff);
    }
    f
}

// ---------------------------------------------------------------------------
// core

fn check_standardize_injective() -> CheckResult {
    let mut words = vec![Vec::new()];
    for _ in 0..4 {
        let mut next = Vec::new();
        for w in &words {
            for v in 1..=3 {
                let mut w2 = w.clone();
                w2.push(v);
                next.push(w2);
            }
        }
        words.extend(next.clone());
        words = words.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    }
    let mut seen: BTreeMap<InjectiveWord, Vec<i32>> = BTreeMap::new();
    for w in words {
        let std = standardize(&w);
        if let Some(prev) = seen.insert(std, w.clone()) {
            return Err(format!("{prev:?} and {w:?} standardize identically"));
        }
    }
    Ok(())
}

fn check_word_round_trip() -> CheckResult {
    for c in all_nvectors(-3, 5, 5) {
        let word = c.word_of();
        let mut back = NVector::zero();
        for l in word.letters() {
            back.add_at(l.value(), 1);
        }
        if back != c {
            return Err(format!("multiplicity recount of the word of {c} gives {back}"));
        }
        if word.rs_backstable() != c {
            return Err(format!("scan of the word of {c} is not a fixed point"));
        }
    }
    Ok(())
}

fn check_rs_fixed_point() -> CheckResult {
    for c in all_nvectors(-3, 5, 5) {
        let word = c.word_of();
        if word.rs_backstable() != c {
            return Err(format!("back-stable scan moved {c}"));
        }
        let positive = c.has_positive_support();
        match word.rs_polynomial() {
            Some(got) if positive && got == c => {}
            None if !positive => {}
            other => return Err(format!("polynomial scan of {c} gave {other:?}")),
        }
    }
    Ok(())
}

fn check_subset_round_trip() -> CheckResult {
    for alpha in all_compositions(7) {
        let r = alpha.weight();
        let s = alpha.to_subset(r).map_err(|e| e.to_string())?;
        let back = Composition::from_subset(&s, r).map_err(|e| e.to_string())?;
        if back != alpha {
            return Err(format!("subset round trip moved {alpha} to {back}"));
        }
    }
    Ok(())
}

fn check_transpose() -> CheckResult {
    for alpha in all_compositions(7) {
        let t = alpha.transpose();
        if t.transpose() != alpha {
            return Err(format!("transpose not involutive on {alpha}"));
        }
        if t.weight() != alpha.weight() {
            return Err(format!("transpose changed the weight of {alpha}"));
        }
        if alpha.weight() > 0
            && t.len() as u32 != alpha.weight() - alpha.len() as u32 + 1
        {
            return Err(format!("transpose length identity fails on {alpha}"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// poly

fn check_ring_axioms(seed: u64) -> CheckResult {
    let mut rng = Rng::new(seed);
    for _ in 0..60 {
        let a = random_polynomial(&mut rng, 3, -2, 3, 2);
        let b = random_polynomial(&mut rng, 3, -2, 3, 2);
        let c = random_polynomial(&mut rng, 3, -2, 3, 2);
        if &(&a * &b) * &c != &a * &(&b * &c) {
            return Err(format!("associativity fails on {a}; {b}; {c}"));
        }
        if &a * &(&b + &c) != &(&a * &b) + &(&a * &c) {
            return Err(format!("distributivity fails on {a}; {b}; {c}"));
        }
        if &a * &b != &b * &a {
            return Err(format!("commutativity fails on {a}; {b}"));
        }
    }
    Ok(())
}

fn check_revlex_order() -> CheckResult {
    let vectors = all_nvectors(-2, 4, 4);
    let by_weight: BTreeMap<u32, Vec<&NVector>> = {
        let mut m: BTreeMap<u32, Vec<&NVector>> = BTreeMap::new();
        for v in &vectors {
            m.entry(v.weight()).or_default().push(v);
        }
        m
    };
    for group in by_weight.values() {
        for &a in group {
            for &b in group {
                let ab = a.cmp(b);
                let ba = b.cmp(a);
                if ab != ba.reverse() {
                    return Err(format!("antisymmetry fails on {a}, {b}"));
                }
                if ab == std::cmp::Ordering::Equal && a != b {
                    return Err(format!("distinct vectors {a}, {b} compare equal"));
                }
            }
        }
        for &a in group {
            for &b in group {
                if a.cmp(b).is_lt() {
                    for &c in group {
                        if b.cmp(c).is_lt() && !a.cmp(c).is_lt() {
                            return Err(format!("transitivity fails on {a} < {b} < {c}"));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_slide_triangularity() -> CheckResult {
    for c in all_nvectors(1, 4, 4) {
        let p = slide_polynomial(&c).map_err(|e| e.to_string())?;
        let (lead, k) = p.revlex_leading().map_err(|e| e.to_string())?;
        if lead != c || k != 1 {
            return Err(format!("leading term of the slide at {c} is {k} at {lead}"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// poset

fn check_stanley_corpus(bounds: &Bounds) -> CheckResult {
    let corpus = poset_corpus(
        bounds.poset_corpus,
        bounds.poset_elems,
        bounds.poset_flag_value,
        bounds.seed,
    );
    for (idx, poset) in corpus.iter().enumerate() {
        let all = poset.enumerate_partitions().map_err(|e| e.to_string())?;
        let blocks = poset.stanley_decomposition().map_err(|e| e.to_string())?;
        let mut union: Vec<_> = blocks.iter().flat_map(|(_, ps)| ps.clone()).collect();
        let mut expected = all.clone();
        union.sort();
        expected.sort();
        if union != expected {
            return Err(format!(
                "poset #{idx}: blocks cover {} partitions, expected {}",
                union.len(),
                expected.len()
            ));
        }
    }
    Ok(())
}

fn check_k_expansion(bounds: &Bounds) -> CheckResult {
    let corpus = poset_corpus(
        bounds.poset_corpus,
        bounds.poset_elems,
        bounds.poset_flag_value,
        bounds.seed ^ 1,
    );
    for (idx, poset) in corpus.iter().enumerate() {
        let k = poset.k_polynomial().map_err(|e| e.to_string())?;
        let mut sum = Polynomial::zero();
        for ext in poset.linear_extensions() {
            let word = poset.extension_word(&ext);
            sum = &sum + &slide_series(&word);
        }
        if k != sum {
            return Err(format!("poset #{idx}: extension sum differs from the partition sum"));
        }
    }
    Ok(())
}

fn check_fundamental_truncation() -> CheckResult {
    let f21 = Composition::new(vec![2, 1]).unwrap();
    let f12 = Composition::new(vec![1, 2]).unwrap();
    for n in 1..=6 {
        let poset = FlaggedPoset::new(
            vec![
                ("a".into(), Letter::new(n, 1)),
                ("b".into(), Letter::new(n, 2)),
                ("c".into(), Letter::new(n, 3)),
            ],
            vec![("a".into(), "b".into()), ("c".into(), "b".into())],
        )
        .unwrap();
        let k = poset.k_polynomial().map_err(|e| e.to_string())?;
        let sum = &fundamental_truncated(&f21, n as u32) + &fundamental_truncated(&f12, n as u32);
        if k != sum {
            return Err(format!("mismatch at {n} variables"));
        }
    }
    Ok(())
}

fn check_omega_rho_corpus(bounds: &Bounds) -> CheckResult {
    let corpus = poset_corpus(60, bounds.poset_elems, bounds.poset_flag_value, bounds.seed ^ 2);
    for (idx, poset) in corpus.iter().enumerate() {
        let (omega, rho) = poset.omega_rho();
        if !crate::poset::lf_flag_holds(&omega, &rho) {
            return Err(format!("poset #{idx}: recovered labeling violates the flag condition"));
        }
        let covers = poset
            .covers()
            .iter()
            .map(|&(u, v)| (poset.names()[u].clone(), poset.names()[v].clone()))
            .collect();
        let rebuilt =
            FlaggedPoset::from_omega_rho(poset.names().to_vec(), covers, &omega, &rho)
                .map_err(|e| e.to_string())?;
        let a = poset.enumerate_partitions().map_err(|e| e.to_string())?;
        let b = rebuilt.enumerate_partitions().map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("poset #{idx}: partition sets differ after the round trip"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// slide

fn check_slide_rs_consistency(max_len: usize) -> CheckResult {
    let words = all_injective_words(&[1, 2, 3, 4, 5], &[1, 2], max_len);
    for w in &words {
        let series = slide_series(w);
        match w.rs_polynomial() {
            Some(c) => {
                let expected = slide_polynomial(&c).map_err(|e| e.to_string())?;
                if series != expected {
                    return Err(format!("series of {w} differs from its normal form {c}"));
                }
            }
            None => {
                if !series.is_zero() {
                    return Err(format!("series of {w} should vanish"));
                }
            }
        }
    }
    Ok(())
}

fn check_slide_unique_expansion() -> CheckResult {
    for c in all_nvectors(1, 4, 4) {
        let e = expand_in_slide_basis(&slide_polynomial(&c).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        if e.len() != 1 || e.coeff(&c) != 1 {
            return Err(format!("expansion of the slide at {c} is not a single term"));
        }
    }
    Ok(())
}

fn check_slide_linearity(seed: u64) -> CheckResult {
    let mut rng = Rng::new(seed ^ 3);
    for _ in 0..40 {
        let p = random_polynomial(&mut rng, 3, 1, 4, 2);
        let q = random_polynomial(&mut rng, 3, 1, 4, 2);
        let ep = expand_in_slide_basis(&p).map_err(|e| e.to_string())?;
        let eq = expand_in_slide_basis(&q).map_err(|e| e.to_string())?;
        let esum = expand_in_slide_basis(&(&p + &q)).map_err(|e| e.to_string())?;
        let mut combined = ep;
        for (c, k) in eq.terms() {
            combined.add_term(c, k);
        }
        if combined != esum {
            return Err(format!("expansion is not additive on {p}; {q}"));
        }
    }
    Ok(())
}

fn check_slide_kostka_agreement() -> CheckResult {
    for len in 0..=4 {
        for word in all_nonincreasing_words(1, 4, len) {
            let p = Polynomial::monomial_of_word(word.letters());
            let triangular = expand_in_slide_basis(&p).map_err(|e| e.to_string())?;
            let signed = monomial_to_slides(&word).map_err(|e| e.to_string())?;
            if triangular != signed {
                return Err(format!("expansions of the monomial of {word} disagree"));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// forest

fn check_forest_bijection() -> CheckResult {
    let forests = all_forests(1, 6, 4);
    let mut seen: BTreeMap<NVector, IndexedForest> = BTreeMap::new();
    for f in &forests {
        let c = f.c_vector();
        if let Some(prev) = seen.insert(c.clone(), f.clone()) {
            return Err(format!("distinct forests share the index {c}: {prev:?} and {f:?}"));
        }
        if &IndexedForest::from_c(&c) != f {
            return Err(format!("round trip rebuilt a different forest for {c}"));
        }
    }
    Ok(())
}

fn check_forest_leading() -> CheckResult {
    for f in all_forests(1, 6, 4) {
        if f.size() == 0 {
            continue;
        }
        let p = f.polynomial().map_err(|e| e.to_string())?;
        let (lead, k) = p.revlex_leading().map_err(|e| e.to_string())?;
        if lead != f.c_vector() || k != 1 {
            return Err(format!("leading monomial of the forest at {} is off", f.c_vector()));
        }
    }
    Ok(())
}

fn check_forest_slide_sum() -> CheckResult {
    for f in all_forests(1, 6, 4) {
        let sum = f
            .slide_expansion()
            .and_then(|e| e.to_polynomial())
            .map_err(|e| e.to_string())?;
        if sum != f.polynomial().map_err(|e| e.to_string())? {
            return Err(format!("slide sum differs from the partition sum at {}", f.c_vector()));
        }
    }
    Ok(())
}

fn check_forest_basis() -> CheckResult {
    for c in all_nvectors(1, 4, 4) {
        let p = IndexedForest::from_c(&c).polynomial().map_err(|e| e.to_string())?;
        let e = expand_in_forest_basis(&p).map_err(|e| e.to_string())?;
        if e.len() != 1 || e.coeff(&c) != 1 {
            return Err(format!("forest expansion of the basis element at {c} is not trivial"));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// backstable

fn check_twz_lemma() -> CheckResult {
    for c in all_nvectors(-2, 4, 4) {
        let f = backslide(&c);
        let q = eta0(&f);
        if q.len() != 1 || q.get(&c.flatten()) != Some(&1) {
            return Err(format!("quasisymmetric projection of the back-slide at {c} is off"));
        }
        let projected = pi_plus(&f);
        let expected = if c.has_positive_support() {
            slide_polynomial(&c).map_err(|e| e.to_string())?
        } else {
            Polynomial::zero()
        };
        if projected != expected {
            return Err(format!("positive truncation of the back-slide at {c} is off"));
        }
    }
    Ok(())
}

fn check_gamma_equivariance() -> CheckResult {
    for c in all_nvectors(-2, 4, 4) {
        let f = backslide(&c);
        for offset in -2..=2 {
            if gamma_shift(&f, offset) != backslide(&c.shift(offset)) {
                return Err(format!("shift by {offset} is not equivariant at {c}"));
            }
        }
    }
    Ok(())
}

fn check_stabilization(seed: u64, samples: usize) -> CheckResult {
    let mut rng = Rng::new(seed ^ 4);
    for _ in 0..samples {
        let f = random_element(&mut rng, 3);
        let mut predicted = Polynomial::zero();
        for (alpha, k) in eta0(&f) {
            predicted = &predicted + &fundamental_truncated(&alpha, 3).scale(k);
        }
        for b in [6, 7] {
            let projected = pi_plus(&gamma_shift(&f, b)).truncate(1, 3);
            if projected != predicted {
                return Err(format!(
                    "projection at shift {b} has not stabilized for {f}"
                ));
            }
        }
    }
    Ok(())
}

fn check_backslide_basis(seed: u64) -> CheckResult {
    for c in all_nvectors(-2, 4, 4) {
        let e = expand_in_backslide_basis(&backslide(&c));
        if e.len() != 1 || e.coeff(&c) != 1 {
            return Err(format!("expansion of the back-slide at {c} is not a single term"));
        }
    }
    let mut rng = Rng::new(seed ^ 5);
    for _ in 0..15 {
        let f = random_element(&mut rng, 3);
        let e = expand_in_backslide_basis(&f);
        if e.to_element() != f {
            return Err(format!("round trip through the back-slide basis moved {f}"));
        }
    }
    Ok(())
}

fn check_option_oracle() -> CheckResult {
    for alpha in all_compositions(4) {
        if alpha.len() > 3 {
            continue;
        }
        for b in -2..=2 {
            let lhs = fundamental_window(&alpha, -5, b);
            let mut rhs = Polynomial::zero();
            for (beta, gamma) in alpha.splits() {
                let left = fundamental_window(&beta, -5, 0);
                let right = if b >= 1 {
                    fundamental_window(&gamma, 1, b)
                } else if b <= -1 {
                    let sign = if gamma.weight() % 2 == 0 { 1 } else { -1 };
                    fundamental_window(&gamma.transpose(), b + 1, 0).scale(sign)
                } else if gamma.is_empty() {
                    Polynomial::one()
                } else {
                    Polynomial::zero()
                };
                rhs = &rhs + &(&left * &right);
            }
            if lhs != rhs {
                return Err(format!("alphabet split fails for {alpha} at boundary {b}"));
            }
            // The expansion map agrees with the windowed identity.
            let expanded = expand_f_shifted(&alpha, b).window_eval(-5, b.max(0));
            if expanded != lhs {
                return Err(format!("expansion map disagrees for {alpha} at boundary {b}"));
            }
        }
    }
    Ok(())
}

fn check_product_laws() -> CheckResult {
    let composite = BackQSymElement::term(
        Composition::new(vec![1]).unwrap(),
        NVector::from_pairs([(0, 1)]),
        2,
    )
    .add(&BackQSymElement::term(
        Composition::empty(),
        NVector::from_positive(&[1]),
        -1,
    ));
    let sample: Vec<BackQSymElement> = vec![
        backslide(&NVector::from_positive(&[1])),
        backslide(&NVector::from_positive(&[0, 1])),
        backslide(&NVector::from_pairs([(0, 1)])),
        backslide(&NVector::from_pairs([(-1, 1), (1, 1)])),
        backslide(&NVector::from_positive(&[2])),
        composite,
    ];
    for f in &sample {
        for g in &sample {
            let product = multiply(f, g);
            if product != multiply(g, f) {
                return Err(format!("product not commutative on {f}; {g}"));
            }
            // Evaluation with variables zeroed outside a window is a ring
            // map, so it must carry products to products exactly.
            let window = (-6, 3);
            let direct = &f.window_eval(window.0, window.1) * &g.window_eval(window.0, window.1);
            if product.window_eval(window.0, window.1) != direct {
                return Err(format!("window evaluation breaks the product on {f}; {g}"));
            }
        }
    }
    let triples = [
        (&sample[0], &sample[1], &sample[2]),
        (&sample[0], &sample[2], &sample[4]),
        (&sample[1], &sample[3], &sample[0]),
    ];
    for (a, b, c) in triples {
        if multiply(&multiply(a, b), c) != multiply(a, &multiply(b, c)) {
            return Err("product not associative on a sample triple".into());
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// kostka

fn check_mobius_oracle() -> CheckResult {
    let mut pairs = 0usize;
    for len in 0..=3 {
        for upper in all_nonincreasing_words(0, 4, len) {
            for lower in all_nonincreasing_words(0, 4, len) {
                if !leq_m(&lower, &upper).map_err(|e| e.to_string())? {
                    continue;
                }
                pairs += 1;
                let closed = mobius(&lower, &upper).map_err(|e| e.to_string())?;
                let recursive = mobius_recursive(&lower, &upper).map_err(|e| e.to_string())?;
                if closed != recursive {
                    return Err(format!(
                        "mobius({lower}, {upper}): closed {closed}, recursive {recursive}"
                    ));
                }
            }
        }
    }
    if pairs < 300 {
        return Err(format!("only {pairs} comparable pairs enumerated"));
    }
    Ok(())
}

fn check_lattice_laws() -> CheckResult {
    for len in 0..=3 {
        let words = all_nonincreasing_words(0, 4, len);
        for a in &words {
            if join(a, a).unwrap() != *a || meet(a, a).unwrap() != *a {
                return Err(format!("idempotence fails at {a}"));
            }
            for b in &words {
                let j = join(a, b).unwrap();
                let m = meet(a, b).unwrap();
                if j != join(b, a).unwrap() || m != meet(b, a).unwrap() {
                    return Err(format!("commutativity fails at {a}, {b}"));
                }
                if join(a, &m).unwrap() != *a || meet(a, &j).unwrap() != *a {
                    return Err(format!("absorption fails at {a}, {b}"));
                }
                // Least upper bound within a bounding box.
                if !leq_m(a, &j).unwrap() || !leq_m(b, &j).unwrap() {
                    return Err(format!("join of {a}, {b} is not an upper bound"));
                }
                for e in upper_bounds_in_box(a, b, 8) {
                    if !leq_m(&j, &e).unwrap() {
                        return Err(format!("{e} is an upper bound of {a}, {b} below the join {j}"));
                    }
                }
            }
        }
        if len <= 2 {
            for a in &words {
                for b in &words {
                    for c in &words {
                        if join(&join(a, b).unwrap(), c).unwrap()
                            != join(a, &join(b, c).unwrap()).unwrap()
                        {
                            return Err(format!("join associativity fails at {a}, {b}, {c}"));
                        }
                        if meet(&meet(a, b).unwrap(), c).unwrap()
                            != meet(a, &meet(b, c).unwrap()).unwrap()
                        {
                            return Err(format!("meet associativity fails at {a}, {b}, {c}"));
                        }
                    }
                }
            }
        }
    }
    // Associativity spot checks at length 3.
    let words = all_nonincreasing_words(0, 4, 3);
    let mut rng = Rng::new(0xa550c);
    for _ in 0..400 {
        let a = &words[rng.below(words.len() as u64) as usize];
        let b = &words[rng.below(words.len() as u64) as usize];
        let c = &words[rng.below(words.len() as u64) as usize];
        if join(&join(a, b).unwrap(), c).unwrap() != join(a, &join(b, c).unwrap()).unwrap() {
            return Err(format!("join associativity fails at {a}, {b}, {c}"));
        }
        if meet(&meet(a, b).unwrap(), c).unwrap() != meet(a, &meet(b, c).unwrap()).unwrap() {
            return Err(format!("meet associativity fails at {a}, {b}, {c}"));
        }
    }
    Ok(())
}

/// All common upper bounds of `a` and `b` with letters at most `cap`.
fn upper_bounds_in_box(
    a: &NonincreasingWord,
    b: &NonincreasingWord,
    cap: i32,
) -> Vec<NonincreasingWord> {
    let len = a.len();
    let mut out = Vec::new();
    let mut current: Vec<i32> = Vec::with_capacity(len);
    fn rec(
        a: &NonincreasingWord,
        b: &NonincreasingWord,
        cap: i32,
        current: &mut Vec<i32>,
        out: &mut Vec<NonincreasingWord>,
    ) {
        let i = current.len();
        if i == a.len() {
            let w = NonincreasingWord::new(current.clone()).unwrap();
            if leq_m(a, &w).unwrap() && leq_m(b, &w).unwrap() {
                out.push(w);
            }
            return;
        }
        let lo = a.letters()[i].max(b.letters()[i]);
        let mut hi = cap;
        if i > 0 {
            hi = hi.min(current[i - 1]);
        }
        let mut x = hi;
        while x >= lo {
            current.push(x);
            rec(a, b, cap, current, out);
            current.pop();
            x -= 1;
        }
    }
    rec(a, b, cap, &mut current, &mut out);
    out
}

fn check_bset_ideal() -> CheckResult {
    for len in 0..=3 {
        for c in all_nonincreasing_words(0, 4, len) {
            let certs = b_set(&c);
            let marks: BTreeSet<BTreeSet<usize>> =
                certs.iter().map(|cert| cert.marks().clone()).collect();
            // Lower order ideal: subsets of members are members.
            for s in &marks {
                for &drop in s {
                    let mut smaller = s.clone();
                    smaller.remove(&drop);
                    if !marks.contains(&smaller) {
                        return Err(format!("marks of {c} are not an ideal: missing {smaller:?}"));
                    }
                }
            }
            // Order embedding: comparisons flip containment.
            for x in &certs {
                for y in &certs {
                    let le = leq_m(x.word(), y.word()).unwrap();
                    let contains = y.marks().is_subset(x.marks());
                    if le != contains {
                        return Err(format!(
                            "embedding fails inside {c}: {} vs {}",
                            x.word(),
                            y.word()
                        ));
                    }
                }
            }
            // Certificates reconstruct.
            for cert in &certs {
                if &BSubsetCertificate::reconstruct(&c, cert.marks()) != cert.word() {
                    return Err(format!("marks of {} do not rebuild it from {c}", cert.word()));
                }
            }
        }
    }
    Ok(())
}

fn check_monomial_identity() -> CheckResult {
    for len in 0..=4 {
        for c in all_nonincreasing_words(1, 4, len) {
            let e = monomial_to_slides(&c).map_err(|e| e.to_string())?;
            let sum = e.to_polynomial().map_err(|e| e.to_string())?;
            if sum != Polynomial::monomial_of_word(c.letters()) {
                return Err(format!("signed slide sum misses the monomial of {c}"));
            }
        }
    }
    Ok(())
}

fn check_backstable_truncation() -> CheckResult {
    for len in 0..=3 {
        for c in all_nonincreasing_words(-1, 3, len) {
            let expansion = crate::kostka::monomial_to_backslides(&c);
            for b in 0..=2 {
                let mut monomial = NVector::zero();
                for &x in c.letters() {
                    monomial.add_at(x + b, 1);
                }
                let lhs = if monomial.has_positive_support() {
                    Polynomial::term(monomial, 1)
                } else {
                    Polynomial::zero()
                };
                let mut rhs = Polynomial::zero();
                for (key, k) in expansion.terms() {
                    rhs = &rhs + &pi_plus(&gamma_shift(&backslide(key), b)).scale(k);
                }
                if lhs != rhs {
                    return Err(format!("truncated identity fails for {c} at shift {b}"));
                }
            }
        }
    }
    Ok(())
}

fn check_mobius_inversion() -> CheckResult {
    for len in 1..=3 {
        for c in all_nonincreasing_words(0, 3, len) {
            let lo = -3;
            let hi = c.letters()[0].max(0);
            let lhs = backslide(&c.nvector()).window_eval(lo, hi);
            let mut rhs = Polynomial::zero();
            for d in words_below(&c, lo) {
                rhs = &rhs + &Polynomial::monomial_of_word(d.letters());
            }
            if lhs != rhs {
                return Err(format!("windowed inversion fails at {c}"));
            }
        }
    }
    Ok(())
}

/// All words below `c` in the order with letters at least `lo`.
fn words_below(c: &NonincreasingWord, lo: i32) -> Vec<NonincreasingWord> {
    let len = c.len();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fn rec(
        c: &NonincreasingWord,
        lo: i32,
        current: &mut Vec<i32>,
        out: &mut Vec<NonincreasingWord>,
    ) {
        let i = current.len();
        if i == c.len() {
            let w = NonincreasingWord::new(current.clone()).unwrap();
            if leq_m(&w, c).unwrap() {
                out.push(w);
            }
            return;
        }
        let mut hi = c.letters()[i];
        if i > 0 {
            hi = hi.min(current[i - 1]);
        }
        let mut x = hi;
        while x >= lo {
            current.push(x);
            rec(c, lo, current, out);
            current.pop();
            x -= 1;
        }
    }
    rec(c, lo, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerators_sane() {
        assert_eq!(all_nvectors(1, 2, 1).len(), 3);
        assert_eq!(all_compositions(3).len(), 1 + 1 + 2 + 4);
        assert_eq!(all_nonincreasing_words(0, 1, 2).len(), 3);
        assert_eq!(all_trees(3).len(), 5);
        let forests = all_forests(1, 4, 2);
        assert!(forests.iter().any(|f| f.size() == 2));
        assert!(forests.iter().all(|f| f.size() <= 2));
    }

    #[test]
    fn corpus_is_deterministic() {
        let a = poset_corpus(10, 6, 5, 7);
        let b = poset_corpus(10, 6, 5, 7);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x, y);
        }
    }

    #[test]
    fn full_suite_passes() {
        for check in run_all(&Bounds::default()) {
            assert!(check.passed(), "{}: {}", check.name, check.detail);
        }
    }
}
