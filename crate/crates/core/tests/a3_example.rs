mod common;

use std::collections::BTreeSet;

use common::{word, wt};
use dcrystal::demazure::{decompose_tensor, Target};
use dcrystal::{RootDatum, RootVector, Weight, WeylElement, Q};

fn roots(x: &[i64]) -> RootVector {
    RootVector(x.iter().map(|&k| Q::from(k)).collect())
}

/// `(reduced word of u, λ - ν in root coordinates)` for every component.
fn pairs(d: &RootDatum, lam: &Weight, v: &WeylElement, w: &WeylElement) -> BTreeSet<(WeylElement, RootVector)> {
    let r = decompose_tensor(d, v, lam, w, &Target::Infinity, 6).unwrap();
    assert_eq!(r.saturated_heuristic, Some(true));
    r.components
        .iter()
        .map(|c| (c.u_min.clone(), d.root_coords(&(lam - &c.nu)).unwrap()))
        .collect()
}

#[test]
fn identity_case_components() {
    let d = RootDatum::preset("A3").unwrap();
    let lam = wt(&[0, 1, 0]);
    let w = word(&d, &[2, 1, 3, 2]);
    let got = pairs(&d, &lam, &WeylElement::identity(&d), &w);
    let expect: BTreeSet<_> = [
        (word(&d, &[1, 3]), roots(&[0, 0, 0])),
        (word(&d, &[3, 1, 2]), roots(&[0, 1, 0])),
        (word(&d, &[2, 1, 2]), roots(&[1, 1, 0])),
        (word(&d, &[2, 3, 2]), roots(&[0, 1, 1])),
        (word(&d, &[2, 1, 3]), roots(&[1, 1, 1])),
        (word(&d, &[2, 1, 3, 2]), roots(&[1, 2, 1])),
    ]
    .into_iter()
    .collect();
    assert_eq!(got, expect);
}

#[test]
fn six_components_for_v_s2() {
    let d = RootDatum::preset("A3").unwrap();
    let lam = wt(&[0, 1, 0]);
    let w = word(&d, &[2, 1, 3, 2]);
    let got = pairs(&d, &lam, &word(&d, &[2]), &w);
    let expect: BTreeSet<_> = [
        (word(&d, &[2, 1, 3]), roots(&[0, 0, 0])),
        (word(&d, &[2, 3, 1, 2]), roots(&[0, 1, 0])),
        (word(&d, &[2, 1, 2]), roots(&[1, 1, 0])),
        (word(&d, &[2, 3, 2]), roots(&[0, 1, 1])),
        (word(&d, &[2, 1, 3]), roots(&[1, 1, 1])),
        (word(&d, &[2, 1, 3, 2]), roots(&[1, 2, 1])),
    ]
    .into_iter()
    .collect();
    assert_eq!(got, expect);
}
