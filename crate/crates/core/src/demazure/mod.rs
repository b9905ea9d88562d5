//! Demazure crystals and tensor products of them.
//!
//! `T_i S = {f_i^k b : b ∈ S, k ≥ 0} \ {null}` and `B_w = T_{i_1} ⋯ T_{i_k}{top}`
//! for a reduced word `i_1 ⋯ i_k` of `w`. On top of these the module decides
//! whether `B_v(λ) ⊗ B_w(μ)` (or `B_v(λ) ⊗ B_w(∞)`) splits into Demazure
//! crystals, finds the pieces, and cross-checks the answer.

mod decompose;
mod equivalence;
mod recognize;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::Signed;

use crate::crystal::{CrystalSet, Element, Window};
use crate::rootdata::{RootDatum, Weight, WeylElement};
use crate::{Error, Result};

pub use decompose::{decompose_tensor, tensor_set, DecompositionComponent, DecompositionReport};
pub use equivalence::{check_equivalence, lemma_check, Decomposability, EquivalenceRecord, LemmaVerdict};
pub use recognize::{recognize_demazure, Recognition};

/// The right-hand factor of a tensor product: `B_w(μ)` or `B_w(∞)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Finite(Weight),
    Infinity,
}

/// Outcome of the decomposition criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Criterion {
    pub holds: bool,
    /// The index set `J` generating the parabolic subgroup.
    pub allowed: BTreeSet<usize>,
    pub v_min: WeylElement,
    /// Letters of `v_min` outside `J`.
    pub offending: Vec<usize>,
}

impl Criterion {
    fn new(v_min: WeylElement, allowed: BTreeSet<usize>) -> Self {
        let offending: Vec<usize> = v_min.support().difference(&allowed).copied().collect();
        Criterion { holds: offending.is_empty(), allowed, v_min, offending }
    }

    pub fn require(&self) -> Result<()> {
        if self.holds {
            Ok(())
        } else {
            Err(Error::CriterionFails {
                allowed: self.allowed.iter().copied().collect(),
                offending: self.offending.clone(),
            })
        }
    }
}

/// `v_min^λ ∈ ⟨s_i : ⟨wμ, α_i^∨⟩ ≤ 0⟩`.
pub fn criterion_finite(d: &RootDatum, v: &WeylElement, lambda: &Weight, w: &WeylElement, mu: &Weight) -> Result<Criterion> {
    d.require_dominant_integral(mu)?;
    let v_min = v.min_coset_rep(d, lambda)?;
    let wmu = w.act_on_weight(d, mu);
    let allowed = (0..d.rank()).filter(|&i| !d.pairing(&wmu, i).is_positive()).collect();
    Ok(Criterion::new(v_min, allowed))
}

/// `v_min^λ ∈ ⟨s_i : l(s_i w) < l(w)⟩`.
pub fn criterion_infinity(d: &RootDatum, v: &WeylElement, lambda: &Weight, w: &WeylElement) -> Result<Criterion> {
    let v_min = v.min_coset_rep(d, lambda)?;
    let allowed = (0..d.rank()).filter(|&i| w.is_left_descent(i)).collect();
    Ok(Criterion::new(v_min, allowed))
}

pub fn criterion(d: &RootDatum, v: &WeylElement, lambda: &Weight, w: &WeylElement, target: &Target) -> Result<Criterion> {
    match target {
        Target::Finite(mu) => criterion_finite(d, v, lambda, w, mu),
        Target::Infinity => criterion_infinity(d, v, lambda, w),
    }
}

/// `T_i S`, cut at `window` (depths measured from `top`).
pub fn t_op(d: &RootDatum, i: usize, s: &BTreeSet<Element>, top: &Weight, window: Window) -> BTreeSet<Element> {
    let mut out = s.clone();
    for x in s {
        let mut cur = x.clone();
        while let Some(next) = cur.f(d, i) {
            if !window.admits(crate::crystal::set_depth(d, top, &next)) {
                break;
            }
            out.insert(next.clone());
            cur = next;
        }
    }
    out
}

/// `T_{i_1} ⋯ T_{i_k} S`: the last letter acts first.
pub fn t_word(d: &RootDatum, word: &[usize], s: &BTreeSet<Element>, top: &Weight, window: Window) -> BTreeSet<Element> {
    let mut cur = s.clone();
    for &i in word.iter().rev() {
        cur = t_op(d, i, &cur, top, window);
    }
    cur
}

/// `T_i` on a crystal set, keeping its top weight and window.
pub fn t_op_set(d: &RootDatum, i: usize, s: &CrystalSet) -> CrystalSet {
    let set: BTreeSet<Element> = s.elements().iter().cloned().collect();
    let out = t_op(d, i, &set, s.top_weight(), s.window());
    CrystalSet::from_elements(d, ordered(d, out, s.top_weight()), s.top_weight().clone(), s.window())
}

/// Sorts by depth, then by element, for deterministic listings.
pub(crate) fn ordered(d: &RootDatum, s: BTreeSet<Element>, top: &Weight) -> Vec<Element> {
    let mut v: Vec<(i64, Element)> = s.into_iter().map(|x| (crate::crystal::set_depth(d, top, &x), x)).collect();
    v.sort();
    v.into_iter().map(|(_, x)| x).collect()
}

/// `B_w = T_w{seed}` along the reduced word of `w`. The seed is `b_λ`,
/// `b_∞` or `b_∞ ⊗ t_ν`.
pub fn demazure_set(d: &RootDatum, seed: &Element, w: &WeylElement, window: Window) -> CrystalSet {
    demazure_set_along(d, seed, w.reduced_word(), window)
}

/// `T_{i_1} ⋯ T_{i_k}{seed}` for a given word.
pub fn demazure_set_along(d: &RootDatum, seed: &Element, word: &[usize], window: Window) -> CrystalSet {
    let top = seed.wt(d);
    let s = t_word(d, word, &BTreeSet::from([seed.clone()]), &top, window);
    CrystalSet::from_elements(d, ordered(d, s, &top), top, window)
}

/// `b_{wλ} = f_{i_1}^{⟨s_{i_2}⋯s_{i_k}λ, α_{i_1}^∨⟩} ⋯ f_{i_k}^{⟨λ, α_{i_k}^∨⟩} b_λ`.
pub fn extremal_element(d: &RootDatum, w: &WeylElement, lambda: &Weight) -> Result<Element> {
    let mut b = Element::highest_path(d, lambda)?;
    let mut mu = lambda.clone();
    for &i in w.reduced_word().iter().rev() {
        let k = d.pairing_int(&mu, i)?;
        b = b.f_pow(d, i, k as u64).ok_or_else(|| Error::VerificationMismatch("extremal exponent exceeds φ".into()))?;
        mu = d.reflect_weight(i, &mu);
    }
    Ok(b)
}

/// `u(b, v)`: starting from `y`, for the letters of `vword` from last to
/// first, replace `u` by `s_i u` whenever that is longer.
pub fn u_from_y(d: &RootDatum, y: &WeylElement, vword: &[usize]) -> Result<WeylElement> {
    WeylElement::from_reduced_word(d, vword)?;
    let mut u = y.clone();
    for &i in vword.iter().rev() {
        if !u.is_left_descent(i) {
            u = u.left_mul(d, i);
        }
    }
    Ok(u)
}

/// Highest element of the model of `B(ν)` (finite) or `B(∞; ν)`.
pub fn highest_of(d: &RootDatum, nu: &Weight, target: &Target) -> Result<Element> {
    match target {
        Target::Finite(_) => Element::highest_path(d, nu),
        Target::Infinity => Ok(Element::b_infinity_shifted(nu)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn a(n: usize) -> RootDatum {
        RootDatum::preset(&alloc::format!("A{n}")).unwrap()
    }

    fn w(d: &RootDatum, word: &[usize]) -> WeylElement {
        let z: Vec<usize> = word.iter().map(|i| i - 1).collect();
        WeylElement::from_word(d, &z).unwrap()
    }

    fn bl(d: &RootDatum, c: &[i64]) -> Element {
        Element::highest_path(d, &Weight::from_ints(c)).unwrap()
    }

    #[test]
    fn t_operator_examples() {
        let d = a(1);
        let top = bl(&d, &[1]);
        let s = BTreeSet::from([top.clone()]);
        let t = t_op(&d, 0, &s, &Weight::from_ints(&[1]), Window::unbounded());
        assert_eq!(t.len(), 2);
        assert_eq!(t_op(&d, 0, &t, &Weight::from_ints(&[1]), Window::unbounded()), t);
        let d2 = a(2);
        let s = demazure_set(&d2, &bl(&d2, &[1, 0]), &w(&d2, &[2, 1]), Window::unbounded());
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn demazure_examples() {
        let d = a(1);
        assert_eq!(demazure_set(&d, &bl(&d, &[2]), &WeylElement::identity(&d), Window::unbounded()).len(), 1);
        assert_eq!(demazure_set(&d, &bl(&d, &[2]), &w(&d, &[1]), Window::unbounded()).len(), 3);
        let d3 = a(3);
        let s = demazure_set(&d3, &bl(&d3, &[0, 1, 0]), &w(&d3, &[2]), Window::unbounded());
        let top = bl(&d3, &[0, 1, 0]);
        assert_eq!(s.elements(), &[top.clone(), top.f(&d3, 1).unwrap()]);
        let inf = demazure_set(&d, &Element::b_infinity(), &w(&d, &[1]), Window::depth(3));
        assert_eq!(inf.len(), 4);
    }

    #[test]
    fn extremal_elements() {
        let d = a(1);
        let om = Weight::from_ints(&[1]);
        assert_eq!(extremal_element(&d, &WeylElement::identity(&d), &om).unwrap(), bl(&d, &[1]));
        assert_eq!(extremal_element(&d, &w(&d, &[1]), &om).unwrap(), bl(&d, &[1]).f(&d, 0).unwrap());
        let d2 = a(2);
        let om2 = Weight::from_ints(&[0, 1]);
        let x = w(&d2, &[1, 2]);
        let b = extremal_element(&d2, &x, &om2).unwrap();
        assert_eq!(b, bl(&d2, &[0, 1]).f(&d2, 1).unwrap().f(&d2, 0).unwrap());
        assert_eq!(b.wt(&d2), x.act_on_weight(&d2, &om2));
    }

    #[test]
    fn criteria() {
        let d = a(1);
        let om = Weight::from_ints(&[1]);
        let e = WeylElement::identity(&d);
        let s1 = w(&d, &[1]);
        assert!(criterion_finite(&d, &e, &om, &s1, &om).unwrap().holds);
        let c = criterion_finite(&d, &s1, &om, &s1, &om).unwrap();
        assert!(c.holds);
        assert_eq!(c.allowed, BTreeSet::from([0]));
        let c = criterion_finite(&d, &s1, &om, &e, &om).unwrap();
        assert!(!c.holds);
        assert!(c.allowed.is_empty());
        assert_eq!(c.require(), Err(Error::CriterionFails { allowed: vec![], offending: vec![0] }));

        let d3 = a(3);
        let ww = w(&d3, &[2, 1, 3, 2]);
        let c = criterion_infinity(&d3, &w(&d3, &[2]), &Weight::from_ints(&[0, 1, 0]), &ww).unwrap();
        assert!(c.holds);
        assert_eq!(c.allowed, BTreeSet::from([1]));
        let c = criterion_infinity(&d3, &w(&d3, &[1]), &Weight::from_ints(&[1, 0, 0]), &ww).unwrap();
        assert!(!c.holds);
    }

    #[test]
    fn u_examples() {
        let d = a(3);
        let e = WeylElement::identity(&d);
        let y = w(&d, &[1, 3]);
        assert_eq!(u_from_y(&d, &y, &[]).unwrap(), y);
        assert_eq!(u_from_y(&d, &e, &[1]).unwrap(), w(&d, &[2]));
        assert_eq!(u_from_y(&d, &y, &[1]).unwrap(), w(&d, &[2, 1, 3]));
        assert!(matches!(u_from_y(&d, &y, &[1, 1]), Err(Error::WordNotReduced(_))));
    }
}
