//! Crystal elements with a uniform `wt/ε/φ/e/f` interface, the tensor
//! product rule, finite (possibly windowed) sets of elements, strings,
//! extremality and highest-weight matching.
//!
//! `null` results of `e_i` and `f_i` are `None`. A value of `None` for
//! `ε_i`/`φ_i` stands for `−∞`, which only the one-element crystals `t_ν`
//! produce.
//!
//! Tensor products follow the rule
//! `f_i(b₁ ⊗ b₂) = f_i b₁ ⊗ b₂` if `φ_i(b₁) > ε_i(b₂)`, else `b₁ ⊗ f_i b₂`, and
//! `e_i(b₁ ⊗ b₂) = e_i b₁ ⊗ b₂` if `φ_i(b₁) ≥ ε_i(b₂)`, else `b₁ ⊗ e_i b₂`.

mod extremal;
mod iso;
mod set;

use alloc::boxed::Box;
use core::fmt;

use crate::binfinity::BSeq;
use crate::pathmodel::PLPath;
use crate::rootdata::{RootDatum, Weight};
use crate::Result;

pub use extremal::{is_extremal, Extremality, Membership, SetMembership};
pub use iso::{match_highest_weight, unique_top, Isomorphism, Mismatch};
pub use set::{component_within, enumerate_from, i_string, CrystalSet, IString, Window};
pub(crate) use set::depth as set_depth;

/// An element of one of the concrete crystals.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    /// Element of `B(λ)` in the path model.
    Path(PLPath),
    /// Element of `B(∞)`.
    BSeq(BSeq),
    Tensor(Box<Element>, Box<Element>),
    /// The one-element crystal `t_ν`: `wt = ν`, `ε = φ = −∞`, `e = f = null`.
    Singleton(Weight),
}

fn gt(a: Option<i64>, b: Option<i64>) -> bool {
    match (a, b) {
        (Some(x), Some(y)) => x > y,
        (Some(_), None) => true,
        (None, _) => false,
    }
}

fn ge(a: Option<i64>, b: Option<i64>) -> bool {
    match (a, b) {
        (Some(x), Some(y)) => x >= y,
        (_, None) => true,
        (None, Some(_)) => false,
    }
}

/// Paths print as `π[t₁:v₁, …]` (break times and vertices after the
/// origin), `B(∞)` elements as `b∞` or `b∞[q:a_q, …]` (1-based), and `t_ν`
/// as `t(ν)`.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Path(p) => {
                write!(f, "π[")?;
                for (k, (t, v)) in p.breaks().iter().zip(p.vertices()).skip(1).enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{t}:{v}")?;
                }
                write!(f, "]")
            }
            Element::BSeq(b) if b.is_highest() => write!(f, "b∞"),
            Element::BSeq(b) => {
                write!(f, "b∞[")?;
                for (k, (q, a)) in b.sparse().into_iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{q}:{a}")?;
                }
                write!(f, "]")
            }
            Element::Tensor(a, b) => write!(f, "{a} ⊗ {b}"),
            Element::Singleton(nu) => write!(f, "t{nu}"),
        }
    }
}

impl Element {
    pub fn tensor(left: Element, right: Element) -> Element {
        Element::Tensor(Box::new(left), Box::new(right))
    }

    /// `b_λ`, the straight path.
    pub fn highest_path(d: &RootDatum, lambda: &Weight) -> Result<Element> {
        Ok(Element::Path(PLPath::straight(d, lambda)?))
    }

    /// `b_∞`.
    pub fn b_infinity() -> Element {
        Element::BSeq(BSeq::highest())
    }

    /// `b_∞ ⊗ t_ν`, the highest element of `B(∞; ν)`.
    pub fn b_infinity_shifted(nu: &Weight) -> Element {
        Element::tensor(Element::b_infinity(), Element::Singleton(nu.clone()))
    }

    pub fn left(&self) -> Option<&Element> {
        match self {
            Element::Tensor(l, _) => Some(l),
            _ => None,
        }
    }

    pub fn right(&self) -> Option<&Element> {
        match self {
            Element::Tensor(_, r) => Some(r),
            _ => None,
        }
    }

    pub fn wt(&self, d: &RootDatum) -> Weight {
        match self {
            Element::Path(p) => p.weight().clone(),
            Element::BSeq(b) => b.weight(d),
            Element::Tensor(l, r) => &l.wt(d) + &r.wt(d),
            Element::Singleton(nu) => nu.clone(),
        }
    }

    pub fn epsilon(&self, d: &RootDatum, i: usize) -> Option<i64> {
        match self {
            Element::Path(p) => Some(p.epsilon(d, i)),
            Element::BSeq(b) => Some(b.epsilon(d, i)),
            Element::Singleton(_) => None,
            Element::Tensor(l, r) => match (l.epsilon(d, i), r.epsilon(d, i)) {
                (e1, None) => e1,
                (None, Some(e2)) => Some(e2 - d.pairing(&l.wt(d), i).to_integer()),
                (Some(e1), Some(e2)) => {
                    let p1 = l.phi(d, i).expect("finite ε implies finite φ");
                    Some(e1 + (e2 - p1).max(0))
                }
            },
        }
    }

    pub fn phi(&self, d: &RootDatum, i: usize) -> Option<i64> {
        match self {
            Element::Path(p) => Some(p.phi(d, i)),
            Element::BSeq(b) => Some(b.phi(d, i)),
            Element::Singleton(_) => None,
            Element::Tensor(l, r) => match (l.phi(d, i), r.phi(d, i)) {
                (None, p2) => p2,
                (Some(p1), None) => Some(p1 + d.pairing(&r.wt(d), i).to_integer()),
                (Some(p1), Some(p2)) => {
                    let e2 = r.epsilon(d, i).expect("finite φ implies finite ε");
                    Some(p2 + (p1 - e2).max(0))
                }
            },
        }
    }

    pub fn f(&self, d: &RootDatum, i: usize) -> Option<Element> {
        match self {
            Element::Path(p) => p.f(d, i).map(Element::Path),
            Element::BSeq(b) => Some(Element::BSeq(b.f(d, i))),
            Element::Singleton(_) => None,
            Element::Tensor(l, r) => {
                if gt(l.phi(d, i), r.epsilon(d, i)) {
                    Some(Element::Tensor(Box::new(l.f(d, i)?), r.clone()))
                } else {
                    Some(Element::Tensor(l.clone(), Box::new(r.f(d, i)?)))
                }
            }
        }
    }

    pub fn e(&self, d: &RootDatum, i: usize) -> Option<Element> {
        match self {
            Element::Path(p) => p.e(d, i).map(Element::Path),
            Element::BSeq(b) => b.e(d, i).map(Element::BSeq),
            Element::Singleton(_) => None,
            Element::Tensor(l, r) => {
                if ge(l.phi(d, i), r.epsilon(d, i)) {
                    Some(Element::Tensor(Box::new(l.e(d, i)?), r.clone()))
                } else {
                    Some(Element::Tensor(l.clone(), Box::new(r.e(d, i)?)))
                }
            }
        }
    }

    /// `e_i(b) = null` for every `i`.
    pub fn is_highest(&self, d: &RootDatum) -> bool {
        (0..d.rank()).all(|i| self.e(d, i).is_none())
    }

    /// Raises by `e` operators (smallest index first) until highest.
    pub fn ascend(&self, d: &RootDatum) -> Element {
        let mut cur = self.clone();
        'outer: loop {
            for i in 0..d.rank() {
                if let Some(up) = cur.e(d, i) {
                    cur = up;
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// `f_i^k b`, or `None` if some step is null.
    pub fn f_pow(&self, d: &RootDatum, i: usize, k: u64) -> Option<Element> {
        let mut cur = self.clone();
        for _ in 0..k {
            cur = cur.f(d, i)?;
        }
        Some(cur)
    }
}

/// `b_λ ⊗ b` is highest exactly when `ε_i(b) ≤ ⟨λ, α_i^∨⟩` for all `i`.
pub fn is_primitive_pair(d: &RootDatum, lambda: &Weight, b: &Element) -> Result<bool> {
    d.require_dominant_integral(lambda)?;
    for i in 0..d.rank() {
        if let Some(e) = b.epsilon(d, i) {
            if e > d.pairing_int(lambda, i)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
