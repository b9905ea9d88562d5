#![allow(dead_code)]

use std::collections::BTreeSet;

use dcrystal::{RootDatum, Weight, WeylElement};

pub fn word(d: &RootDatum, w: &[usize]) -> WeylElement {
    let z: Vec<usize> = w.iter().map(|i| i - 1).collect();
    WeylElement::from_word(d, &z).unwrap()
}

pub fn wt(x: &[i64]) -> Weight {
    Weight::from_ints(x)
}

/// Orbit of `e_i` under `s_i(c) = c - (Σ_j c_j A[j][i]) e_i`, restricted to
/// nonnegative vectors. With `A` the Cartan matrix this is the set of positive
/// coroots in the simple coroot basis; with its transpose, positive roots.
fn positive_orbit(a: &[Vec<i64>], max: usize) -> BTreeSet<Vec<i64>> {
    let n = a.len();
    let mut seen = BTreeSet::new();
    let mut todo: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    while let Some(c) = todo.pop() {
        if seen.len() > max || !seen.insert(c.clone()) {
            continue;
        }
        for i in 0..n {
            let p: i64 = (0..n).map(|j| c[j] * a[j][i]).sum();
            let mut r = c.clone();
            r[i] -= p;
            if r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0) {
                todo.push(r);
            }
        }
    }
    seen
}

/// Positive roots in simple root coordinates: `s_i α_j = α_j - a_ij α_i`.
pub fn positive_roots(d: &RootDatum) -> BTreeSet<Vec<i64>> {
    let a = d.cartan();
    let n = a.len();
    let at: Vec<Vec<i64>> = (0..n).map(|j| (0..n).map(|i| a[i][j]).collect()).collect();
    positive_orbit(&at, 10_000)
}

/// Positive coroots in simple coroot coordinates.
pub fn positive_coroots(d: &RootDatum) -> BTreeSet<Vec<i64>> {
    positive_orbit(d.cartan(), 10_000)
}

/// Weyl dimension formula with `λ` in fundamental weight coordinates.
pub fn weyl_dimension(d: &RootDatum, lam: &[i64]) -> i64 {
    let (mut num, mut den) = (1i128, 1i128);
    for c in positive_coroots(d) {
        let l: i64 = c.iter().zip(lam).map(|(x, y)| x * y).sum();
        let r: i64 = c.iter().sum();
        num *= (l + r) as i128;
        den *= r as i128;
    }
    assert_eq!(num % den, 0);
    (num / den) as i64
}

/// Number of ways to write `beta` as a sum of positive roots.
pub fn kostant(roots: &[Vec<i64>], beta: &[i64]) -> u64 {
    fn go(roots: &[Vec<i64>], k: usize, rest: &mut Vec<i64>) -> u64 {
        if rest.iter().all(|&x| x == 0) {
            return 1;
        }
        if k == roots.len() {
            return 0;
        }
        let mut total = go(roots, k + 1, rest);
        let r = &roots[k];
        let mut used = 0;
        while rest.iter().zip(r).all(|(x, y)| x >= y) {
            for (x, y) in rest.iter_mut().zip(r) {
                *x -= y;
            }
            used += 1;
            total += go(roots, k + 1, rest);
        }
        for (x, y) in rest.iter_mut().zip(r) {
            *x += used * y;
        }
        total
    }
    go(roots, 0, &mut beta.to_vec())
}

/// Every reduced word of `w`, by peeling off left descents.
pub fn reduced_words(d: &RootDatum, w: &WeylElement) -> Vec<Vec<usize>> {
    if w.is_identity() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..d.rank() {
        if w.is_left_descent(i) {
            for mut rest in reduced_words(d, &w.left_mul(d, i)) {
                rest.insert(0, i);
                out.push(rest);
            }
        }
    }
    out
}

pub fn longest(d: &RootDatum) -> WeylElement {
    WeylElement::enumerate(d, 64).into_iter().max_by_key(|w| w.length()).unwrap()
}
