mod common;

use std::collections::BTreeSet;

use common::{kostant, positive_roots, reduced_words, wt};
use dcrystal::characters::{demazure_op, demazure_word_op, key_expand, key_polynomial, Character, Composition};
use dcrystal::crystal::{enumerate_from, is_extremal, SetMembership};
use dcrystal::demazure::{demazure_set, demazure_set_along};
use dcrystal::{CrystalSet, Element, RootDatum, Weight, Window, WeylElement};
use proptest::prelude::*;

/// Axioms on every element of `set`: `φ = ε + ⟨wt, α^∨⟩`, and `e`, `f` are
/// mutually inverse partial maps shifting `wt`, `ε`, `φ` by one step.
fn check_axioms(d: &RootDatum, set: &CrystalSet) {
    for b in set.elements() {
        let w = b.wt(d);
        for i in 0..d.rank() {
            let p = d.pairing_int(&w, i).unwrap();
            let (eps, phi) = (b.epsilon(d, i), b.phi(d, i));
            match (eps, phi) {
                (Some(e), Some(f)) => assert_eq!(f, e + p, "C1 at {b:?}"),
                (None, None) => {}
                _ => panic!("one of ε, φ is -∞ at {b:?}"),
            }
            if let Some(up) = b.e(d, i) {
                assert_eq!(up.f(d, i).as_ref(), Some(b));
                assert_eq!(up.wt(d), &w + d.simple_root(i));
                assert_eq!(up.epsilon(d, i), eps.map(|x| x - 1));
                assert_eq!(up.phi(d, i), phi.map(|x| x + 1));
            }
            if let Some(down) = b.f(d, i) {
                assert_eq!(down.e(d, i).as_ref(), Some(b));
                assert_eq!(down.wt(d), &w - d.simple_root(i));
                assert_eq!(down.epsilon(d, i), eps.map(|x| x + 1));
                assert_eq!(down.phi(d, i), phi.map(|x| x - 1));
            }
        }
    }
}

#[test]
fn axioms_on_enumerated_sets() {
    let cases: [(&str, &[i64], &[i64]); 4] =
        [("A2", &[1, 1], &[1, 0]), ("B2", &[1, 1], &[0, 1]), ("G2", &[1, 0], &[0, 1]), ("A3", &[0, 1, 0], &[1, 0, 0])];
    for (name, lam, mu) in cases {
        let d = RootDatum::preset(name).unwrap();
        let bl = Element::highest_path(&d, &wt(lam)).unwrap();
        let bm = Element::highest_path(&d, &wt(mu)).unwrap();
        check_axioms(&d, &enumerate_from(&d, bl.clone(), Window::unbounded()));
        check_axioms(&d, &enumerate_from(&d, Element::b_infinity(), Window::depth(4)));
        let t = Element::tensor(bl.clone(), bm);
        check_axioms(&d, &enumerate_from(&d, t, Window::unbounded()));
        let t = Element::tensor(bl, Element::b_infinity());
        check_axioms(&d, &enumerate_from(&d, t, Window::depth(3)));
        let shifted = Element::b_infinity_shifted(&wt(lam));
        check_axioms(&d, &enumerate_from(&d, shifted, Window::depth(3)));
    }
    let d = RootDatum::preset("A1_aff").unwrap();
    check_axioms(&d, &enumerate_from(&d, Element::b_infinity(), Window::depth(4)));
    let lam = d.fundamental_weights().unwrap()[0].clone();
    let b = Element::highest_path(&d, &lam).unwrap();
    check_axioms(&d, &enumerate_from(&d, b, Window::depth(4)));
}

#[test]
fn kostant_counts() {
    for (name, max) in [("A2", 5), ("B2", 4), ("A3", 3)] {
        let d = RootDatum::preset(name).unwrap();
        let roots: Vec<Vec<i64>> = positive_roots(&d).into_iter().collect();
        let set = enumerate_from(&d, Element::b_infinity(), Window::depth(max));
        let mut counts = std::collections::BTreeMap::<Vec<i64>, u64>::new();
        for b in set.elements() {
            let beta = d.root_coords(&-&b.wt(&d)).unwrap();
            let beta: Vec<i64> = beta.0.iter().map(|q| q.to_integer()).collect();
            *counts.entry(beta).or_default() += 1;
        }
        // every β ∈ Q+ of height ≤ max
        fn all(n: usize, h: i64) -> Vec<Vec<i64>> {
            if n == 0 {
                return vec![vec![]];
            }
            (0..=h).flat_map(|a| all(n - 1, h - a).into_iter().map(move |mut r| { r.insert(0, a); r })).collect()
        }
        for beta in all(d.rank(), max as i64) {
            let expect = kostant(&roots, &beta);
            assert_eq!(counts.get(&beta).copied().unwrap_or(0), expect, "{name} β = {beta:?}");
        }
    }
}

#[test]
fn reduced_word_independence() {
    for name in ["A2", "B2"] {
        let d = RootDatum::preset(name).unwrap();
        let lam = wt(&[1, 1]);
        let bl = Element::highest_path(&d, &lam).unwrap();
        for w in WeylElement::enumerate(&d, 64) {
            let words = reduced_words(&d, &w);
            assert!(!words.is_empty());
            let first = &words[0];
            let fin = demazure_set_along(&d, &bl, first, Window::unbounded());
            let inf = demazure_set_along(&d, &Element::b_infinity(), first, Window::depth(5));
            let ch = demazure_word_op(&d, first, &Character::monomial(lam.clone())).unwrap();
            for other in &words[1..] {
                assert_eq!(demazure_set_along(&d, &bl, other, Window::unbounded()), fin);
                assert_eq!(demazure_set_along(&d, &Element::b_infinity(), other, Window::depth(5)), inf);
                assert_eq!(demazure_word_op(&d, other, &Character::monomial(lam.clone())).unwrap(), ch);
            }
        }
    }
}

#[test]
fn truncated_b_infinity_demazure_sets() {
    let d = RootDatum::preset("A3").unwrap();
    let all = WeylElement::enumerate(&d, 64);
    let sets: Vec<CrystalSet> = all
        .iter()
        .map(|w| demazure_set(&d, &Element::b_infinity(), w, Window::depth(6)))
        .collect();
    let distinct: BTreeSet<Vec<Element>> = sets
        .iter()
        .map(|s| {
            let mut v = s.elements().to_vec();
            v.sort();
            v
        })
        .collect();
    assert_eq!(distinct.len(), 24);
    for (a, sa) in all.iter().zip(&sets) {
        for (b, sb) in all.iter().zip(&sets) {
            assert_eq!(a.bruhat_leq(&d, b), sa.is_subset(sb), "{a} vs {b}");
        }
    }
}

#[test]
fn demazure_sets_and_unions_are_extremal() {
    let d = RootDatum::preset("A2").unwrap();
    let lam = wt(&[2, 1]);
    let bl = Element::highest_path(&d, &lam).unwrap();
    let all = WeylElement::enumerate(&d, 64);
    let sets: Vec<CrystalSet> = all.iter().map(|w| demazure_set(&d, &bl, w, Window::unbounded())).collect();
    for s in &sets {
        assert!(is_extremal(&d, s, &SetMembership(s), 1000).is_extremal());
    }
    for a in &sets {
        for b in &sets {
            let u = CrystalSet::from_elements(&d, a.elements().iter().chain(b.elements()).cloned(), lam.clone(), Window::unbounded());
            assert!(is_extremal(&d, &u, &SetMembership(&u), 1000).is_extremal());
        }
    }
    // a piece of a string is not
    let s1 = &sets[1];
    let top = s1.elements()[0].clone();
    let two = CrystalSet::from_elements(&d, [top.clone(), top.f(&d, 0).unwrap()], lam.clone(), Window::unbounded());
    let full = enumerate_from(&d, top, Window::unbounded());
    assert!(full.len() > 3);
    assert!(!is_extremal(&d, &two, &SetMembership(&two), 1000).is_extremal());
}

fn character(dim: usize) -> impl Strategy<Value = Character> {
    prop::collection::vec((prop::collection::vec(-3i64..=3, dim), -4i64..=4), 0..6)
        .prop_map(|terms| Character::from_terms(terms.into_iter().map(|(w, k)| (Weight::from_ints(&w), k))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn demazure_op_idempotent(f in character(2), i in 0usize..2, name in prop::sample::select(vec!["A2", "B2", "G2"])) {
        let d = RootDatum::preset(name).unwrap();
        let once = demazure_op(&d, i, &f).unwrap();
        prop_assert_eq!(demazure_op(&d, i, &once).unwrap(), once);
    }

    #[test]
    fn braid_relations(f in character(2), name in prop::sample::select(vec!["A2", "B2", "G2"])) {
        let d = RootDatum::preset(name).unwrap();
        let m = match name { "A2" => 3, "B2" => 4, _ => 6 };
        let a: Vec<usize> = (0..m).map(|k| k % 2).collect();
        let b: Vec<usize> = (0..m).map(|k| (k + 1) % 2).collect();
        prop_assert_eq!(demazure_word_op(&d, &a, &f).unwrap(), demazure_word_op(&d, &b, &f).unwrap());
    }

    #[test]
    fn multiplication_is_commutative_and_associative(f in character(2), g in character(2), h in character(2)) {
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
    }

    #[test]
    fn reflection_is_an_involution(x in prop::collection::vec(-5i64..=5, 2), i in 0usize..2, name in prop::sample::select(vec!["A2", "B2", "G2"])) {
        let d = RootDatum::preset(name).unwrap();
        let mu = Weight::from_ints(&x);
        let r = d.reflect_weight(i, &mu);
        prop_assert_eq!(d.pairing(&r, i), -d.pairing(&mu, i));
        prop_assert_eq!(d.reflect_weight(i, &r), mu);
    }

    #[test]
    fn weyl_action_matches_word(word in prop::collection::vec(0usize..3, 0..8), x in prop::collection::vec(-3i64..=3, 3)) {
        let d = RootDatum::preset("A3").unwrap();
        let w = WeylElement::from_word(&d, &word).unwrap();
        let mut mu = Weight::from_ints(&x);
        for &i in word.iter().rev() {
            mu = d.reflect_weight(i, &mu);
        }
        prop_assert_eq!(w.act_on_weight(&d, &Weight::from_ints(&x)), mu);
        let r = WeylElement::from_word(&d, w.reduced_word()).unwrap();
        prop_assert_eq!(r.length(), w.length());
        prop_assert_eq!(r, w);
    }

    #[test]
    fn key_expansion_round_trip(coeffs in prop::collection::vec(-3i64..=3, 6)) {
        let d = RootDatum::preset("GL3").unwrap();
        let comps: Vec<Composition> = [[2, 0, 0], [1, 1, 0], [1, 0, 1], [0, 2, 0], [0, 1, 1], [0, 0, 2]]
            .iter()
            .map(|c| Composition(c.to_vec()))
            .collect();
        let mut f = Character::zero();
        for (c, k) in comps.iter().zip(&coeffs) {
            let kp = key_polynomial(&d, c).unwrap();
            for _ in 0..k.abs() {
                f = if *k > 0 { &f + &kp } else { &f - &kp };
            }
        }
        let got = key_expand(&d, &f, 2).unwrap();
        for (c, k) in comps.iter().zip(&coeffs) {
            prop_assert_eq!(got.get(c).copied().unwrap_or(0), *k);
        }
    }
}
