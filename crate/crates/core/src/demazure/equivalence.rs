use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::decompose::{check_partition, identity_pieces, Setup};
use super::{criterion, recognize_demazure, t_word, Criterion, Target};
use crate::crystal::{is_extremal, CrystalSet, Element, Extremality, Membership, Window};
use crate::rootdata::{RootDatum, Weight, WeylElement};
use crate::{Error, Result};

/// Membership in `B_v(λ) ⊗ B_w`, with the settling rule in `∞` mode: once
/// `f_i` acts on the `B(∞)` factor it keeps doing so, and the remaining
/// elements are non-top elements of one `i`-string of `B(∞)`, on which
/// membership in `B_w(∞)` is constant.
struct TensorMembership<'s, 'a> {
    setup: &'s Setup<'a>,
}

impl Membership for TensorMembership<'_, '_> {
    fn contains(&self, _d: &RootDatum, x: &Element) -> Option<bool> {
        self.setup.member(x)
    }

    fn settles(&self, d: &RootDatum, prev: &Element, next: &Element, i: usize) -> bool {
        if !self.setup.is_infinite() || prev.left() != next.left() {
            return false;
        }
        next.right().and_then(|b| b.epsilon(d, i)).is_some_and(|e| e > 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposability {
    Yes,
    /// The component with this top is not a Demazure crystal, or two
    /// components overlap.
    No { top: Element },
}

impl Decomposability {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decomposability::Yes)
    }
}

/// The three statements of the equivalence, each computed on its own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceRecord {
    pub criterion: Criterion,
    pub extremality: Extremality,
    pub decomposability: Decomposability,
}

impl EquivalenceRecord {
    /// `None` when the extremality check was inconclusive.
    pub fn agree(&self) -> Option<bool> {
        let ext = match &self.extremality {
            Extremality::Extremal => true,
            Extremality::Violated { .. } => false,
            Extremality::Inconclusive { .. } => return None,
        };
        Some(self.criterion.holds == ext && ext == self.decomposability.is_yes())
    }
}

/// Computes the criterion, the extremality of the tensor set inside
/// `B(λ) ⊗ B(μ)` (or `B(λ) ⊗ B(∞)`), and whether the tensor set splits into
/// Demazure crystals, without letting one inform another. Disagreement is an
/// [`Error::EquivalenceViolation`]; an inconclusive extremality verdict is
/// returned as is.
pub fn check_equivalence(
    d: &RootDatum,
    v: &WeylElement,
    lambda: &Weight,
    w: &WeylElement,
    target: &Target,
    depth: u64,
) -> Result<EquivalenceRecord> {
    let crit = criterion(d, v, lambda, w, target)?;
    let s = Setup::new(d, v, lambda, w, target, depth)?;
    let x = s.tensor_set();
    let extremality = is_extremal(d, &x, &TensorMembership { setup: &s }, 100_000);
    let decomposability = decomposability(&s, &x)?;
    let record = EquivalenceRecord { criterion: crit, extremality, decomposability };
    if record.agree() == Some(false) {
        return Err(Error::EquivalenceViolation(format!(
            "v = {v}, w = {w}: criterion {}, extremal {}, decomposable {}",
            record.criterion.holds,
            record.extremality.is_extremal(),
            record.decomposability.is_yes()
        )));
    }
    Ok(record)
}

fn decomposability(s: &Setup, x: &CrystalSet) -> Result<Decomposability> {
    // primitives of the tensor set are the b_λ ⊗ b with b primitive
    let pieces = identity_pieces(s)?;
    let mut comps = Vec::new();
    for b in &pieces.primitives {
        let top = Element::tensor(s.b_lambda.clone(), b.clone());
        let comp = s.component(&top, false)?;
        let r = recognize_demazure(s.d, &comp, &top, !s.is_infinite())?;
        if r.y.is_none() {
            return Ok(Decomposability::No { top });
        }
        comps.push((top, comp));
    }
    let refs: Vec<&CrystalSet> = comps.iter().map(|(_, c)| c).collect();
    if check_partition(x, &refs).is_err() {
        let top = comps.first().map(|(t, _)| t.clone()).unwrap_or_else(|| s.b_lambda.clone());
        return Ok(Decomposability::No { top });
    }
    Ok(Decomposability::Yes)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaVerdict {
    /// The tensor set lies inside `T_v(b_λ ⊗ B_w)`.
    pub contained: bool,
    pub equal: bool,
    /// `v` lies in the parabolic subgroup of the criterion.
    pub hypothesis: bool,
    pub tensor_size: usize,
    pub t_size: usize,
}

impl LemmaVerdict {
    /// Containment always, equality under the hypothesis.
    pub fn ok(&self) -> bool {
        self.contained && (!self.hypothesis || self.equal)
    }
}

/// Compares `B_v(λ) ⊗ B_w` with `T_{i_1} ⋯ T_{i_k}(b_λ ⊗ B_w)` for the reduced
/// word of `v`. In `∞` mode both sides are cut at depth `D` below `λ`.
pub fn lemma_check(
    d: &RootDatum,
    v: &WeylElement,
    lambda: &Weight,
    w: &WeylElement,
    target: &Target,
    depth: u64,
) -> Result<LemmaVerdict> {
    let crit = criterion(d, v, lambda, w, target)?;
    let s = Setup::new(d, v, lambda, w, target, depth)?;
    let x = s.tensor_set();
    let window = if s.is_infinite() { Window::depth(depth) } else { Window::unbounded() };
    let start: BTreeSet<Element> = s
        .bw
        .elements()
        .iter()
        .filter(|b| !s.is_infinite() || s.bw.depth_of(d, b) <= depth as i64)
        .map(|b| Element::tensor(s.b_lambda.clone(), b.clone()))
        .collect();
    let t = t_word(d, v.reduced_word(), &start, lambda, window);
    let xs: BTreeSet<&Element> = x.elements().iter().collect();
    let contained = xs.iter().all(|e| t.contains(*e));
    let equal = contained && xs.len() == t.len();
    Ok(LemmaVerdict {
        contained,
        equal,
        hypothesis: v.in_parabolic(&crit.allowed),
        tensor_size: x.len(),
        t_size: t.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(d: &RootDatum, word: &[usize]) -> WeylElement {
        let z: Vec<usize> = word.iter().map(|i| i - 1).collect();
        WeylElement::from_word(d, &z).unwrap()
    }

    #[test]
    fn sl2_cases() {
        let d = RootDatum::preset("A1").unwrap();
        let om = Weight::from_ints(&[1]);
        let s1 = w(&d, &[1]);
        let e = WeylElement::identity(&d);
        let t = Target::Finite(om.clone());
        let neg = check_equivalence(&d, &s1, &om, &e, &t, 0).unwrap();
        assert!(!neg.criterion.holds);
        assert!(matches!(neg.extremality, Extremality::Violated { .. }));
        assert!(!neg.decomposability.is_yes());
        let pos = check_equivalence(&d, &s1, &om, &s1, &t, 0).unwrap();
        assert_eq!(pos.agree(), Some(true));
        assert!(pos.criterion.holds);

        let l = lemma_check(&d, &s1, &om, &s1, &t, 0).unwrap();
        assert!(l.equal && l.hypothesis && l.ok());
        assert_eq!(l.t_size, 4);
        let l = lemma_check(&d, &s1, &om, &e, &t, 0).unwrap();
        assert!(l.contained && !l.equal && !l.hypothesis);
        assert_eq!((l.tensor_size, l.t_size), (2, 3));
        let l = lemma_check(&d, &e, &om, &s1, &t, 0).unwrap();
        assert!(l.equal);
    }

    #[test]
    fn sl2_infinity_cases() {
        let d = RootDatum::preset("A1").unwrap();
        let om = Weight::from_ints(&[1]);
        let s1 = w(&d, &[1]);
        let e = WeylElement::identity(&d);
        let pos = check_equivalence(&d, &s1, &om, &s1, &Target::Infinity, 4).unwrap();
        assert_eq!(pos.agree(), Some(true));
        let neg = check_equivalence(&d, &s1, &om, &e, &Target::Infinity, 4).unwrap();
        assert_eq!(neg.agree(), Some(true));
        assert!(!neg.criterion.holds);
    }
}
