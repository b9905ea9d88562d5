mod common;

use std::collections::BTreeMap;

use common::{longest, weyl_dimension, word, wt};
use dcrystal::characters::{
    char_of_set, demazure_op, demazure_word_op, key_expand, key_polynomial, verify_demazure_character,
    verify_key_positivity, verify_product_identity, Character, Composition,
};
use dcrystal::crystal::enumerate_from;
use dcrystal::demazure::criterion_finite;
use dcrystal::{Element, RootDatum, Window, WeylElement};

#[test]
fn demazure_characters_a2_and_a3() {
    for (name, mu) in [("A2", wt(&[1, 1])), ("A3", wt(&[0, 1, 0]))] {
        let d = RootDatum::preset(name).unwrap();
        let all = WeylElement::enumerate(&d, 64);
        assert_eq!(all.len(), if name == "A2" { 6 } else { 24 });
        for w in &all {
            let v = verify_demazure_character(&d, w, &mu).unwrap();
            assert!(v.holds(), "{name}, w = {w}: {:?}", v.mismatch);
        }
    }
}

#[test]
fn full_crystal_character_and_dimension() {
    let cases: [(&str, &[i64]); 8] = [
        ("A2", &[1, 1]),
        ("A2", &[2, 1]),
        ("A3", &[1, 0, 1]),
        ("B2", &[1, 1]),
        ("C3", &[0, 1, 0]),
        ("D4", &[0, 1, 0, 0]),
        ("G2", &[1, 0]),
        ("G2", &[1, 1]),
    ];
    for (name, lam) in cases {
        let d = RootDatum::preset(name).unwrap();
        let b = Element::highest_path(&d, &wt(lam)).unwrap();
        let set = enumerate_from(&d, b, Window::unbounded());
        let ch = char_of_set(&d, &set);
        assert_eq!(ch.total(), weyl_dimension(&d, lam), "{name} {lam:?}");
        let w0 = longest(&d);
        let formula = demazure_word_op(&d, w0.reduced_word(), &Character::monomial(wt(lam))).unwrap();
        assert_eq!(ch, formula, "{name} {lam:?}");
    }
}

#[test]
fn product_identity_a2_sweep() {
    let d = RootDatum::preset("A2").unwrap();
    let all = WeylElement::enumerate(&d, 64);
    let lam = wt(&[1, 1]);
    let mut checked = 0;
    for v in &all {
        for w in &all {
            if !criterion_finite(&d, v, &lam, w, &lam).unwrap().holds {
                continue;
            }
            let r = verify_product_identity(&d, v, &lam, w, &lam).unwrap();
            assert!(r.holds(), "v = {v}, w = {w}");
            checked += 1;
        }
    }
    assert!(checked >= 6);
}

#[test]
fn identity_case_is_e_lambda_times_demazure() {
    let d = RootDatum::preset("A3").unwrap();
    let (lam, mu) = (wt(&[0, 1, 0]), wt(&[1, 0, 1]));
    let e = WeylElement::identity(&d);
    for w in WeylElement::enumerate(&d, 64).iter().step_by(5) {
        let r = verify_product_identity(&d, &e, &lam, w, &mu).unwrap();
        let expect = &Character::monomial(lam.clone())
            * &demazure_word_op(&d, w.reduced_word(), &Character::monomial(mu.clone())).unwrap();
        assert_eq!(r.enumerated, expect);
        assert!(r.holds());
    }
}

#[test]
fn key_positivity_gl3() {
    let d = RootDatum::preset("GL3").unwrap();
    let lam = wt(&[1, 1, 0]);
    let all = WeylElement::enumerate(&d, 64);
    let mut direct = 0;
    for v in &all {
        for w in &all {
            if !criterion_finite(&d, v, &lam, w, &lam).unwrap().holds {
                continue;
            }
            let r = verify_key_positivity(&d, v, &lam, w, &lam).unwrap();
            assert!(!r.swapped);
            assert!(r.holds(), "v = {v}, w = {w}: {:?} vs {:?}", r.from_decomposition, r.from_solve);
            direct += 1;
        }
    }
    assert!(direct > 0);
}

#[test]
fn keys_are_a_basis_and_positive() {
    let d = RootDatum::preset("GL3").unwrap();
    for a in 0..=3 {
        for b in 0..=3 - a {
            let nu = Composition(vec![a, b, 3 - a - b]);
            let k = key_polynomial(&d, &nu).unwrap();
            assert!(k.is_nonnegative());
            assert_eq!(k.coefficient(&nu.weight()), 1);
            assert_eq!(key_expand(&d, &k, 3).unwrap(), BTreeMap::from([(nu.clone(), 1)]));
        }
    }
}

#[test]
fn demazure_op_sl2_m2() {
    let d = RootDatum::preset("A1").unwrap();
    let c = demazure_op(&d, 0, &Character::monomial(wt(&[2]))).unwrap();
    assert_eq!(c.len(), 3);
    assert_eq!(c.total(), 3);
    assert_eq!(demazure_word_op(&d, word(&d, &[1]).reduced_word(), &Character::monomial(wt(&[2]))).unwrap(), c);
}
