//! Formal characters, Demazure operators and key polynomials.
//!
//! A character is a finitely supported map from weights to integers, written
//! `Σ c_μ e^μ`. Multiplication is convolution.

mod keys;

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::crystal::CrystalSet;
use crate::demazure::{decompose_tensor, Target};
use crate::rootdata::{RootDatum, Weight, WeylElement};
use crate::{Error, Result};

pub use keys::{key_expand, key_polynomial, verify_key_positivity, Composition, KeyVerdict};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character {
    terms: BTreeMap<Weight, i64>,
    /// Computed from a windowed set, so only correct near the top.
    truncated: bool,
}

impl Character {
    pub fn zero() -> Self {
        Character::default()
    }

    /// `e^μ`.
    pub fn monomial(mu: Weight) -> Self {
        Character::from_terms([(mu, 1)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Weight, i64)>) -> Self {
        let mut c = Character::zero();
        for (mu, k) in terms {
            c.add_term(mu, k);
        }
        c
    }

    pub fn add_term(&mut self, mu: Weight, k: i64) {
        if k == 0 {
            return;
        }
        match self.terms.entry(mu) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += k;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(k);
            }
        }
    }

    pub fn coefficient(&self, mu: &Weight) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, k)| (w, *k))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Specialization at `e^0`: the sum of all coefficients.
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&k| k > 0)
    }

    /// First weight where the two characters differ, with both coefficients.
    pub fn first_difference(&self, other: &Character) -> Option<(Weight, i64, i64)> {
        self.terms
            .keys()
            .chain(other.terms.keys())
            .filter(|mu| self.coefficient(mu) != other.coefficient(mu))
            .min()
            .map(|mu| (mu.clone(), self.coefficient(mu), other.coefficient(mu)))
    }

    /// Integer exponent vectors, for display in `x^ν` notation.
    pub fn to_int_terms(&self) -> Option<Vec<(Vec<i64>, i64)>> {
        self.terms.iter().map(|(mu, k)| mu.to_ints().map(|v| (v, *k))).collect()
    }

    /// `x^(a,b,c)` notation, highest exponents first.
    pub fn to_x_string(&self) -> String {
        let Some(terms) = self.to_int_terms() else { return format!("{self}") };
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (v, k)) in terms.iter().rev().enumerate() {
            let (sign, abs) = if *k < 0 { ("-", -k) } else { ("+", *k) };
            if n > 0 {
                out.push_str(&format!(" {sign} "));
            } else if *k < 0 {
                out.push('-');
            }
            if abs != 1 {
                out.push_str(&format!("{abs}"));
            }
            let parts: Vec<String> = v.iter().map(|x| format!("{x}")).collect();
            out.push_str(&format!("x^({})", parts.join(",")));
        }
        out
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (mu, k)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " {} ", if *k < 0 { '-' } else { '+' })?;
            } else if *k < 0 {
                write!(f, "-")?;
            }
            if k.abs() != 1 {
                write!(f, "{}", k.abs())?;
            }
            write!(f, "e^{mu}")?;
        }
        Ok(())
    }
}

impl Add for &Character {
    type Output = Character;
    fn add(self, rhs: &Character) -> Character {
        let mut out = self.clone();
        for (mu, k) in &rhs.terms {
            out.add_term(mu.clone(), *k);
        }
        out.truncated |= rhs.truncated;
        out
    }
}

impl Sub for &Character {
    type Output = Character;
    fn sub(self, rhs: &Character) -> Character {
        self + &(-rhs)
    }
}

impl Neg for &Character {
    type Output = Character;
    fn neg(self) -> Character {
        Character {
            terms: self.terms.iter().map(|(mu, k)| (mu.clone(), -k)).collect(),
            truncated: self.truncated,
        }
    }
}

impl Mul for &Character {
    type Output = Character;
    fn mul(self, rhs: &Character) -> Character {
        let mut out = Character::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out.truncated = self.truncated || rhs.truncated;
        out
    }
}

/// `Δ_i`, term by term: with `m = ⟨μ, α_i^∨⟩`, `e^μ` goes to
/// `e^μ + e^{μ-α_i} + ⋯ + e^{μ-mα_i}` for `m ≥ 0`, to `0` for `m = -1`, and
/// to `-(e^{μ+α_i} + ⋯ + e^{μ+(-m-1)α_i})` for `m ≤ -2`.
pub fn demazure_op(d: &RootDatum, i: usize, f: &Character) -> Result<Character> {
    d.check_index(i)?;
    let alpha = d.simple_root(i);
    let mut out = Character { terms: BTreeMap::new(), truncated: f.truncated };
    for (mu, k) in &f.terms {
        let m = d.pairing_int(mu, i).map_err(|_| Error::NonIntegralPairing { index: i })?;
        if m >= 0 {
            let mut cur = mu.clone();
            for _ in 0..=m {
                out.add_term(cur.clone(), *k);
                cur -= alpha;
            }
        } else {
            let mut cur = mu.clone();
            for _ in 1..=(-m - 1) {
                cur += alpha;
                out.add_term(cur.clone(), -k);
            }
        }
    }
    Ok(out)
}

/// `Δ_{i_1} ⋯ Δ_{i_k} f` for a reduced word (0-based letters).
pub fn demazure_word_op(d: &RootDatum, word: &[usize], f: &Character) -> Result<Character> {
    WeylElement::from_reduced_word(d, word)?;
    let mut out = f.clone();
    for &i in word.iter().rev() {
        out = demazure_op(d, i, &out)?;
    }
    Ok(out)
}

/// `Σ_b e^{wt b}`. A windowed set gives a truncated character.
pub fn char_of_set(d: &RootDatum, x: &CrystalSet) -> Character {
    let mut c = Character::from_terms(x.elements().iter().map(|b| (b.wt(d), 1)));
    c.truncated = x.window().max_depth().is_some();
    c
}

/// Two independently computed characters and where they first differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterVerdict {
    pub enumerated: Character,
    pub formula: Character,
    pub mismatch: Option<(Weight, i64, i64)>,
}

impl CharacterVerdict {
    fn new(enumerated: Character, formula: Character) -> Self {
        let mut mismatch = enumerated.first_difference(&formula);
        if mismatch.is_none() && enumerated.truncated != formula.truncated {
            mismatch = Some((Weight::zero(0), 0, 0));
        }
        CharacterVerdict { enumerated, formula, mismatch }
    }

    pub fn holds(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// `ch B_w(μ)` by enumeration against `Δ_w e^μ`.
pub fn verify_demazure_character(d: &RootDatum, w: &WeylElement, mu: &Weight) -> Result<CharacterVerdict> {
    let top = crate::crystal::Element::highest_path(d, mu)?;
    let set = crate::demazure::demazure_set(d, &top, w, crate::crystal::Window::unbounded());
    let formula = demazure_word_op(d, w.reduced_word(), &Character::monomial(mu.clone()))?;
    Ok(CharacterVerdict::new(char_of_set(d, &set), formula))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductVerdict {
    /// `ch(B_v(λ) ⊗ B_w(μ))` by enumeration.
    pub enumerated: Character,
    /// `Δ_{v_min}(e^λ · Δ_w e^μ)`.
    pub formula: Character,
    /// `Σ Δ_u e^ν` over the components of the decomposition.
    pub components: Character,
}

impl ProductVerdict {
    pub fn holds(&self) -> bool {
        self.enumerated == self.formula && self.formula == self.components
    }
}

/// Checks `ch(B_v(λ) ⊗ B_w(μ)) = Δ_{v_min}(e^λ Δ_w e^μ) = Σ Δ_u e^ν`, where
/// `v_min` is the minimal representative of `v W_λ`. The operator must be the
/// one of `v_min`: for `v` outside the minimal coset the literal `Δ_v` can
/// give a different answer.
pub fn verify_product_identity(
    d: &RootDatum,
    v: &WeylElement,
    lambda: &Weight,
    w: &WeylElement,
    mu: &Weight,
) -> Result<ProductVerdict> {
    let target = Target::Finite(mu.clone());
    let report = decompose_tensor(d, v, lambda, w, &target, 0)?;
    let mut enumerated = Character::zero();
    let mut components = Character::zero();
    for c in &report.components {
        enumerated = &enumerated + &char_of_set(d, &c.component);
        let piece = demazure_word_op(d, c.u_min.reduced_word(), &Character::monomial(c.nu.clone()))?;
        components = &components + &piece;
    }
    let inner = demazure_word_op(d, w.reduced_word(), &Character::monomial(mu.clone()))?;
    let formula = demazure_word_op(
        d,
        report.criterion.v_min.reduced_word(),
        &(&Character::monomial(lambda.clone()) * &inner),
    )?;
    Ok(ProductVerdict { enumerated, formula, components })
}

/// `ch B_v(λ) · ch B_w(μ)` by enumeration of both factors.
pub fn product_of_sets(d: &RootDatum, v: &WeylElement, lambda: &Weight, w: &WeylElement, mu: &Weight) -> Result<Character> {
    let a = verify_demazure_character(d, v, lambda)?;
    let b = verify_demazure_character(d, w, mu)?;
    if !a.holds() || !b.holds() {
        return Err(Error::VerificationMismatch(format!("Demazure character of {v} or {w}")));
    }
    Ok(&a.enumerated * &b.enumerated)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wt(x: &[i64]) -> Weight {
        Weight::from_ints(x)
    }

    fn word(d: &RootDatum, w: &[usize]) -> WeylElement {
        let z: Vec<usize> = w.iter().map(|i| i - 1).collect();
        WeylElement::from_word(d, &z).unwrap()
    }

    #[test]
    fn demazure_op_closed_form() {
        let d = RootDatum::preset("A1").unwrap();
        let c = demazure_op(&d, 0, &Character::monomial(wt(&[-1]))).unwrap();
        assert!(c.is_zero());
        let c = demazure_op(&d, 0, &Character::monomial(wt(&[2]))).unwrap();
        assert_eq!(c, Character::from_terms([(wt(&[2]), 1), (wt(&[0]), 1), (wt(&[-2]), 1)]));
        let c = demazure_op(&d, 0, &Character::monomial(wt(&[-3]))).unwrap();
        assert_eq!(c, Character::from_terms([(wt(&[-1]), -1), (wt(&[1]), -1)]));
        let c = demazure_op(&d, 0, &c).unwrap();
        assert_eq!(c, Character::from_terms([(wt(&[-1]), -1), (wt(&[1]), -1)]));
    }

    #[test]
    fn non_integral_pairing() {
        let d = RootDatum::preset("A1").unwrap();
        let half = Weight(alloc::vec![crate::Q::new(1, 2)]);
        assert_eq!(
            demazure_op(&d, 0, &Character::monomial(half)),
            Err(Error::NonIntegralPairing { index: 0 })
        );
    }

    #[test]
    fn word_op() {
        let d = RootDatum::preset("A2").unwrap();
        let e = Character::monomial(wt(&[1, 0]));
        assert_eq!(demazure_word_op(&d, &[], &e).unwrap(), e);
        let c = demazure_word_op(&d, &[0, 1], &e).unwrap();
        assert_eq!(c.len(), 2);
        let c = demazure_word_op(&d, &[1, 0], &e).unwrap();
        assert_eq!(c.len(), 3);
        let v = verify_demazure_character(&d, &word(&d, &[2, 1]), &wt(&[1, 0])).unwrap();
        assert!(v.holds());
        assert_eq!(v.enumerated.len(), 3);
        assert_eq!(demazure_word_op(&d, &[0, 0], &e), Err(Error::WordNotReduced(alloc::vec![0, 0])));
    }

    #[test]
    fn set_characters() {
        let d = RootDatum::preset("A1").unwrap();
        let b = crate::crystal::Element::highest_path(&d, &wt(&[1])).unwrap();
        let all = crate::crystal::enumerate_from(&d, b, crate::crystal::Window::unbounded());
        assert_eq!(char_of_set(&d, &all), Character::from_terms([(wt(&[1]), 1), (wt(&[-1]), 1)]));
        let d = RootDatum::preset("A3").unwrap();
        let v = verify_demazure_character(&d, &word(&d, &[2]), &wt(&[0, 1, 0])).unwrap();
        assert!(v.holds());
        assert_eq!(v.enumerated, Character::from_terms([(wt(&[0, 1, 0]), 1), (wt(&[1, -1, 1]), 1)]));
    }

    #[test]
    fn truncated_characters_never_compare_equal() {
        let d = RootDatum::preset("A1").unwrap();
        let s = crate::demazure::demazure_set(
            &d,
            &crate::crystal::Element::b_infinity(),
            &word(&d, &[1]),
            crate::crystal::Window::depth(2),
        );
        let c = char_of_set(&d, &s);
        assert!(c.is_truncated());
        let plain = Character::from_terms(c.terms().map(|(w, k)| (w.clone(), k)));
        assert_ne!(c, plain);
        assert_eq!(plain.first_difference(&c), None);
    }

    #[test]
    fn product_identity_sl2() {
        let d = RootDatum::preset("A1").unwrap();
        let s1 = word(&d, &[1]);
        let v = verify_product_identity(&d, &s1, &wt(&[1]), &s1, &wt(&[1])).unwrap();
        assert!(v.holds());
        let expect = &demazure_op(&d, 0, &Character::monomial(wt(&[2]))).unwrap() + &Character::monomial(wt(&[0]));
        assert_eq!(v.formula, expect);
    }

    #[test]
    fn product_identity_sl3() {
        let d = RootDatum::preset("A2").unwrap();
        // s1s2 ω2 = -ω1 pairs to ≤ 0 with both coroots
        let v = verify_product_identity(&d, &word(&d, &[1]), &wt(&[1, 0]), &word(&d, &[1, 2]), &wt(&[0, 1])).unwrap();
        assert!(v.holds());
        assert_eq!(v.enumerated.total(), 2 * 3);
        let p = product_of_sets(&d, &word(&d, &[1]), &wt(&[1, 0]), &word(&d, &[1, 2]), &wt(&[0, 1])).unwrap();
        assert_eq!(p, v.enumerated);
    }

    #[test]
    fn product_identity_needs_minimal_representative() {
        // v = s2 fixes ω1, so v_min = e and the literal Δ_{s2} overcounts
        let d = RootDatum::preset("A2").unwrap();
        let (lam, mu) = (wt(&[1, 0]), wt(&[0, 1]));
        let v = word(&d, &[2]);
        let e = WeylElement::identity(&d);
        let ok = verify_product_identity(&d, &v, &lam, &e, &mu).unwrap();
        assert!(ok.holds());
        let literal = demazure_word_op(&d, &[1], &(&Character::monomial(lam.clone()) * &Character::monomial(mu))).unwrap();
        assert_ne!(literal, ok.enumerated);
    }

    #[test]
    fn product_identity_reports_criterion_failure() {
        let d = RootDatum::preset("A1").unwrap();
        let s1 = word(&d, &[1]);
        let e = WeylElement::identity(&d);
        assert!(matches!(
            verify_product_identity(&d, &s1, &wt(&[1]), &e, &wt(&[1])),
            Err(Error::CriterionFails { .. })
        ));
    }
}
