//! Acceptance suite: one test per criterion, exact arithmetic throughout.
//! Run with `cargo test -p flagpart --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use flagpart::backstable::{
    backslide, eta0, expand_in_backslide_basis, fundamental_truncated, gamma_shift, multiply,
    multiply_backslides, pi_plus, BackQSymElement,
};
use flagpart::composition::Composition;
use flagpart::forest::{expand_in_forest_basis, IndexedForest};
use flagpart::kostka::{b_set, join, leq_m, mobius, mobius_recursive, monomial_to_slides, NonincreasingWord};
use flagpart::letter::{InjectiveWord, Letter};
use flagpart::nvector::NVector;
use flagpart::poly::Polynomial;
use flagpart::poset::FlaggedPoset;
use flagpart::slide::{expand_in_slide_basis, slide_polynomial, slide_series};
use flagpart::verify;
use std::collections::BTreeSet;

fn letter(v: i32, t: u32) -> Letter {
    Letter::new(v, t)
}

fn word(letters: &[(i32, u32)]) -> InjectiveWord {
    InjectiveWord::new(letters.iter().map(|&(v, t)| letter(v, t)).collect()).unwrap()
}

fn nv(counts: &[u32]) -> NVector {
    NVector::from_positive(counts)
}

fn comp(parts: &[u32]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

fn poly(s: &str) -> Polynomial {
    s.parse().unwrap()
}

fn report(n: u32, what: &str) {
    println!("criterion {n:2}: PASS - {what}");
}

#[test]
fn criterion_01_slide_series_examples() {
    let s = slide_series(&word(&[(3, 1), (3, 2), (1, 1)]));
    assert_eq!(s, poly("x(3)^2*x(1) + x(3)*x(2)*x(1) + x(2)^2*x(1)"));
    assert!(slide_series(&word(&[(1, 2), (1, 1)])).is_zero());
    report(1, "slide series of the flagged chains match exactly");
}

#[test]
fn criterion_02_rs_normalization() {
    let w = word(&[
        (5, 1),
        (6, 5),
        (8, 3),
        (3, 2),
        (3, 1),
        (1, 2),
        (2, 1),
        (3, 3),
    ]);
    assert_eq!(w.rs_scan(), vec![5, 5, 5, 3, 2, 1, 1, 1]);
    assert_eq!(w.rs_polynomial(), Some(nv(&[3, 1, 1, 0, 3])));
    report(2, "scan word 55532111 and normal form (3,1,1,0,3)");
}

#[test]
fn criterion_03_forest_polynomial_and_slides() {
    let f = IndexedForest::from_c(&nv(&[0, 2, 0, 1]));
    let p = f.polynomial().unwrap();
    let expected = poly(
        "x(2)^2*x(4) + x(1)*x(2)*x(4) + x(1)^2*x(4) + x(2)^2*x(3) + x(1)*x(2)*x(3) \
         + x(1)^2*x(3) + x(1)^2*x(2) + x(1)*x(2)^2",
    );
    assert_eq!(p, expected);
    assert_eq!(p.num_terms(), 8);
    let e = f.slide_expansion().unwrap();
    assert_eq!(e.len(), 2);
    assert_eq!(e.coeff(&nv(&[1, 2])), 1);
    assert_eq!(e.coeff(&nv(&[0, 2, 0, 1])), 1);
    // The triangular route agrees with the extension sum.
    assert_eq!(expand_in_slide_basis(&p).unwrap(), e);
    report(3, "forest polynomial has the 8-monomial form and 2-term slide expansion");
}

#[test]
fn criterion_04_stanley_decomposition_corpus() {
    let bounds = verify::Bounds::default();
    assert!(bounds.poset_corpus >= 200);
    let corpus = verify::poset_corpus(
        bounds.poset_corpus,
        bounds.poset_elems,
        bounds.poset_flag_value,
        bounds.seed,
    );
    for poset in &corpus {
        let mut union: Vec<_> = poset
            .stanley_decomposition()
            .unwrap()
            .into_iter()
            .flat_map(|(_, ps)| ps)
            .collect();
        let mut all = poset.enumerate_partitions().unwrap();
        union.sort();
        all.sort();
        assert_eq!(union, all, "partition multiset mismatch");

        let k = poset.k_polynomial().unwrap();
        let mut sum = Polynomial::zero();
        for ext in poset.linear_extensions() {
            sum = &sum + &slide_series(&poset.extension_word(&ext));
        }
        assert_eq!(k, sum, "extension expansion mismatch");
    }
    report(4, "partition sets split by linear extension on 220 generated posets");
}

#[test]
fn criterion_05_fundamental_expansion_truncated() {
    for n in 1..=6 {
        let poset = FlaggedPoset::new(
            vec![
                ("a".into(), letter(n, 1)),
                ("b".into(), letter(n, 2)),
                ("c".into(), letter(n, 3)),
            ],
            vec![("a".into(), "b".into()), ("c".into(), "b".into())],
        )
        .unwrap();
        let k = poset.k_polynomial().unwrap();
        let sum = &fundamental_truncated(&comp(&[2, 1]), n as u32)
            + &fundamental_truncated(&comp(&[1, 2]), n as u32);
        assert_eq!(k, sum, "mismatch at {n} variables");
    }
    report(5, "K equals F(2,1) + F(1,2) truncated to 1..N for N = 1..6");
}

#[test]
fn criterion_06_backslide_structure() {
    // Five-term tensor expansion at (0,2,0,2).
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
    // Spot checks computed by hand from the defining sum.
    assert_eq!(f.coeff(&comp(&[]), &nv(&[2, 2])), 1);
    assert_eq!(f.coeff(&comp(&[1]), &nv(&[0, 1, 0, 2])), 1);
    assert_eq!(f.coeff(&comp(&[2, 2]), &NVector::zero()), 1);
    assert_eq!(f.coeff(&comp(&[2]), &nv(&[1, 1])), 1);
    assert_eq!(f.coeff(&comp(&[1, 1]), &NVector::zero()), 0);
    assert_eq!(f.num_terms(), 12 + 9 + 10 + 4 + 1);

    // Projection lemma over the stated range.
    for c in verify::all_nvectors(-2, 4, 4) {
        let f = backslide(&c);
        let q = eta0(&f);
        assert_eq!(q.len(), 1);
        assert_eq!(q.get(&c.flatten()), Some(&1), "eta0 at {c}");
        let projected = pi_plus(&f);
        if c.has_positive_support() {
            assert_eq!(projected, slide_polynomial(&c).unwrap(), "pi_plus at {c}");
        } else {
            assert!(projected.is_zero(), "pi_plus at {c} should vanish");
        }
    }
    report(6, "five-term tensor expansion and both projection identities");
}

#[test]
fn criterion_07_shuffle_product() {
    let e = multiply_backslides(&nv(&[0, 1, 0, 2]), &nv(&[0, 1]));
    assert_eq!(e.len(), 4);
    for key in [nv(&[0, 2, 0, 2]), nv(&[1, 1, 0, 2]), nv(&[1, 2, 0, 1]), nv(&[1, 3])] {
        assert_eq!(e.coeff(&key), 1, "missing shuffle term {key}");
    }

    let mut rng_state = 0x7a57u64;
    let mut next = move || {
        rng_state = rng_state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (rng_state >> 33) as usize
    };
    let pool = verify::all_nvectors(-1, 3, 3);
    for _ in 0..50 {
        let c = &pool[next() % pool.len()];
        let d = &pool[next() % pool.len()];
        let product = multiply(&backslide(c), &backslide(d));
        assert_eq!(
            pi_plus(&product),
            &pi_plus(&backslide(c)) * &pi_plus(&backslide(d)),
            "pi_plus multiplicativity at {c}, {d}"
        );
    }
    report(7, "shuffle product example and 50 positive-truncation products");
}

#[test]
fn criterion_08_inverse_kostka_examples() {
    let c = NonincreasingWord::new(vec![4, 4, 2]).unwrap();
    let certs = b_set(&c);
    let got: BTreeSet<(String, Vec<usize>)> = certs
        .iter()
        .map(|cert| {
            (
                cert.word().to_string(),
                cert.marks().iter().copied().collect(),
            )
        })
        .collect();
    let expected: BTreeSet<(String, Vec<usize>)> = [
        ("4,4,2", vec![]),
        ("3,3,2", vec![0]),
        ("4,3,2", vec![1]),
        ("4,4,1", vec![2]),
        ("3,3,1", vec![0, 2]),
        ("4,3,1", vec![1, 2]),
    ]
    .into_iter()
    .map(|(s, v)| (s.to_string(), v))
    .collect();
    assert_eq!(got, expected);

    // Exact polynomial identity for x(2)*x(4)^2.
    let e = monomial_to_slides(&c).unwrap();
    assert_eq!(e.to_polynomial().unwrap(), Polynomial::monomial_of_word(&[4, 4, 2]));

    let j = join(
        &NonincreasingWord::new(vec![5, 5, 5, 3, 2, 2]).unwrap(),
        &NonincreasingWord::new(vec![6, 6, 4, 4, 2, 1]).unwrap(),
    )
    .unwrap();
    assert_eq!(j, NonincreasingWord::new(vec![6, 6, 6, 6, 2, 2]).unwrap());
    report(8, "unit-drop set of 442, signed monomial identity, and the join example");
}

#[test]
fn criterion_09_mobius_oracle_equivalence() {
    let mut pairs = 0usize;
    for len in 0..=3 {
        for upper in verify::all_nonincreasing_words(0, 4, len) {
            for lower in verify::all_nonincreasing_words(0, 4, len) {
                if !leq_m(&lower, &upper).unwrap() {
                    continue;
                }
                pairs += 1;
                assert_eq!(
                    mobius(&lower, &upper).unwrap(),
                    mobius_recursive(&lower, &upper).unwrap(),
                    "mobius({lower}, {upper})"
                );
            }
        }
    }
    report(9, &format!("closed form equals recursion on {pairs} comparable pairs"));
}

#[test]
fn criterion_10_basis_round_trips() {
    for c in verify::all_nvectors(1, 4, 4) {
        let e = expand_in_slide_basis(&slide_polynomial(&c).unwrap()).unwrap();
        assert!(e.len() == 1 && e.coeff(&c) == 1, "slide basis at {c}");

        let e = expand_in_forest_basis(&IndexedForest::from_c(&c).polynomial().unwrap()).unwrap();
        assert!(e.len() == 1 && e.coeff(&c) == 1, "forest basis at {c}");
    }
    for c in verify::all_nvectors(-2, 4, 4) {
        let e = expand_in_backslide_basis(&backslide(&c));
        assert!(e.len() == 1 && e.coeff(&c) == 1, "back-slide basis at {c}");
    }

    // Random polynomial round trips, exact.
    let mut rng = RngLite(0xdecaf);
    for _ in 0..20 {
        let p = random_positive_poly(&mut rng);
        let back = expand_in_slide_basis(&p).unwrap().to_polynomial().unwrap();
        assert_eq!(back, p);
        let back = {
            let e = expand_in_forest_basis(&p).unwrap();
            let mut sum = Polynomial::zero();
            for (c, k) in e.terms() {
                sum = &sum + &IndexedForest::from_c(c).polynomial().unwrap().scale(k);
            }
            sum
        };
        assert_eq!(back, p);
    }
    report(10, "slide, forest, and back-slide expansions invert their syntheses");
}

struct RngLite(u64);

impl RngLite {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }
}

fn random_positive_poly(rng: &mut RngLite) -> Polynomial {
    let mut p = Polynomial::zero();
    for _ in 0..3 {
        let mut c = NVector::zero();
        for i in 1..=4 {
            c.set(i, (rng.next() % 3) as u32);
        }
        p.add_term(&c, (rng.next() % 7) as i64 - 3);
    }
    p
}

#[test]
fn criterion_11_alphabet_split_oracle() {
    let mut checked = 0usize;
    for alpha in verify::all_compositions(4) {
        if alpha.len() > 3 {
            continue;
        }
        for b in -2..=2i32 {
            let lhs = flagpart::backstable::fundamental_window(&alpha, -5, b);
            let mut rhs = Polynomial::zero();
            for (beta, gamma) in alpha.splits() {
                let left = flagpart::backstable::fundamental_window(&beta, -5, 0);
                let right = if b >= 1 {
                    flagpart::backstable::fundamental_window(&gamma, 1, b)
                } else if b <= -1 {
                    let sign = if gamma.weight() % 2 == 0 { 1 } else { -1 };
                    flagpart::backstable::fundamental_window(&gamma.transpose(), b + 1, 0)
                        .scale(sign)
                } else if gamma.is_empty() {
                    Polynomial::one()
                } else {
                    Polynomial::zero()
                };
                rhs = &rhs + &(&left * &right);
            }
            assert_eq!(lhs, rhs, "split identity for {alpha} at boundary {b}");
            checked += 1;
        }
    }
    // The identity distinguishes the conjugate from the plain complement:
    // at (2,1) with b = -2 the wrong variant breaks.
    let alpha = comp(&[2, 1]);
    let lhs = flagpart::backstable::fundamental_window(&alpha, -5, -2);
    let mut wrong = Polynomial::zero();
    for (beta, gamma) in alpha.splits() {
        let sign = if gamma.weight() % 2 == 0 { 1 } else { -1 };
        let complement = {
            let r = gamma.weight();
            let s = gamma.to_subset(r).unwrap();
            let plain: BTreeSet<u32> = (1..r).filter(|k| !s.contains(k)).collect();
            Composition::from_subset(&plain, r).unwrap()
        };
        let right = flagpart::backstable::fundamental_window(&complement, -1, 0).scale(sign);
        wrong = &wrong + &(&flagpart::backstable::fundamental_window(&beta, -5, 0) * &right);
    }
    assert_ne!(lhs, wrong, "the plain complement must fail the oracle");
    report(11, &format!("alphabet-split identity on {checked} cases pins the conjugate"));
}

#[test]
fn criterion_12_stabilization() {
    for f in sample_elements(20) {
        let mut predicted = Polynomial::zero();
        for (alpha, k) in eta0(&f) {
            predicted = &predicted + &fundamental_truncated(&alpha, 3).scale(k);
        }
        for b in [6, 7] {
            let projected = pi_plus(&gamma_shift(&f, b)).truncate(1, 3);
            assert_eq!(projected, predicted, "unstabilized at shift {b} for {f}");
        }
    }
    report(12, "projections stabilize by shift 6 to the quasisymmetric prediction");
}

fn sample_elements(samples: usize) -> Vec<BackQSymElement> {
    // Deterministic sample of weight-<=3 elements mirroring the verify corpus.
    let mut rng = RngLite(0xced5);
    let compositions = verify::all_compositions(3);
    let mut out = Vec::with_capacity(samples);
    for _ in 0..samples {
        let mut f = BackQSymElement::zero();
        for _ in 0..1 + (rng.next() % 2) {
            let alpha = &compositions[(rng.next() as usize) % compositions.len()];
            let mut c = NVector::zero();
            let room = 3u32.saturating_sub(alpha.weight());
            for _ in 0..rng.next() % (room as u64 + 1) {
                c.add_at((rng.next() % 5) as i32 - 2, 1);
            }
            let coeff = [(-2i64), -1, 1, 2][(rng.next() as usize) % 4];
            f.add_term(alpha, &c, coeff);
        }
        if f.is_zero() {
            f = BackQSymElement::one();
        }
        out.push(f);
    }
    out
}
