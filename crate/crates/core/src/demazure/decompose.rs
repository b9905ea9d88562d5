use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{criterion, demazure_set, highest_of, recognize_demazure, u_from_y, Criterion, Target};
use crate::crystal::{is_primitive_pair, match_highest_weight, set_depth, CrystalSet, Element, Window};
use crate::rootdata::{RootDatum, Weight, WeylElement};
use crate::{Error, Result};

/// The factors of `B_v(λ) ⊗ B_w(μ)` (or `B_v(λ) ⊗ B_w(∞)`), enumerated once
/// and shared by the decomposition, equivalence and character checks.
///
/// In `∞` mode `depth` is the window `D`: primitives are searched to depth
/// `D`, each component is enumerated to depth `D` below its own top, and
/// `B_w(∞)` is enumerated to depth `2D + 1`, which covers every membership
/// question those windows can raise.
pub(crate) struct Setup<'a> {
    pub d: &'a RootDatum,
    pub lambda: Weight,
    pub target: Target,
    pub depth: u64,
    pub b_lambda: Element,
    pub bv: CrystalSet,
    pub bw: CrystalSet,
}

impl<'a> Setup<'a> {
    pub fn new(d: &'a RootDatum, v: &WeylElement, lambda: &Weight, w: &WeylElement, target: &Target, depth: u64) -> Result<Self> {
        d.require_dominant_integral(lambda)?;
        let b_lambda = Element::highest_path(d, lambda)?;
        let bv = demazure_set(d, &b_lambda, v, Window::unbounded());
        let bw = match target {
            Target::Finite(mu) => demazure_set(d, &Element::highest_path(d, mu)?, w, Window::unbounded()),
            Target::Infinity => demazure_set(d, &Element::b_infinity(), w, Window::depth(2 * depth + 1)),
        };
        Ok(Setup { d, lambda: lambda.clone(), target: target.clone(), depth, b_lambda, bv, bw })
    }

    pub fn is_infinite(&self) -> bool {
        self.target == Target::Infinity
    }

    /// Window of a single component, measured from its own top.
    pub fn local_window(&self) -> Window {
        if self.is_infinite() {
            Window::depth(self.depth)
        } else {
            Window::unbounded()
        }
    }

    fn in_bw(&self, b: &Element) -> Option<bool> {
        if self.bw.contains(b) {
            Some(true)
        } else if self.bw.window().admits(self.bw.depth_of(self.d, b)) {
            Some(false)
        } else {
            None
        }
    }

    /// Membership in `B_v(λ) ⊗ B_w`.
    pub fn member(&self, x: &Element) -> Option<bool> {
        let (Some(b1), Some(b2)) = (x.left(), x.right()) else { return Some(false) };
        if !self.bv.contains(b1) {
            return Some(false);
        }
        self.in_bw(b2)
    }

    /// Membership in `{b_λ} ⊗ B_w`.
    pub fn member_identity(&self, x: &Element) -> Option<bool> {
        let (Some(b1), Some(b2)) = (x.left(), x.right()) else { return Some(false) };
        if *b1 != self.b_lambda {
            return Some(false);
        }
        self.in_bw(b2)
    }

    /// `b ∈ B_w` with `b_λ ⊗ b` highest, shallowest first. In `∞` mode only
    /// depths up to `D` are searched.
    pub fn primitives(&self) -> Result<Vec<Element>> {
        let mut out = Vec::new();
        for b in self.bw.elements() {
            if self.is_infinite() && self.bw.depth_of(self.d, b) > self.depth as i64 {
                continue;
            }
            if is_primitive_pair(self.d, &self.lambda, b)? {
                out.push(b.clone());
            }
        }
        Ok(out)
    }

    /// Closure of `top` under the `f_i` inside the subset given by
    /// `identity` (`{b_λ} ⊗ B_w`) or the full tensor set, cut at the local
    /// window.
    pub fn component(&self, top: &Element, identity: bool) -> Result<CrystalSet> {
        let d = self.d;
        let nu = top.wt(d);
        let window = self.local_window();
        let mut seen = BTreeSet::from([top.clone()]);
        let mut order = Vec::new();
        let mut queue = VecDeque::from([top.clone()]);
        while let Some(x) = queue.pop_front() {
            for i in 0..d.rank() {
                let Some(y) = x.f(d, i) else { continue };
                if seen.contains(&y) || !window.admits(set_depth(d, &nu, &y)) {
                    continue;
                }
                let inside = if identity { self.member_identity(&y) } else { self.member(&y) };
                match inside {
                    Some(true) => {
                        seen.insert(y.clone());
                        queue.push_back(y);
                    }
                    Some(false) => {}
                    None => return Err(Error::WindowTooSmall(format!("membership undecided at depth {}", self.depth))),
                }
            }
            order.push(x);
        }
        Ok(CrystalSet::from_elements(d, order, nu, window))
    }

    /// `B_v(λ) ⊗ B_w(μ)`, or in `∞` mode its elements of depth at most `D`
    /// below `λ`.
    pub fn tensor_set(&self) -> CrystalSet {
        let d = self.d;
        let mut out = Vec::new();
        for b1 in self.bv.elements() {
            let d1 = self.bv.depth_of(d, b1);
            for b2 in self.bw.elements() {
                if self.is_infinite() && d1 + self.bw.depth_of(d, b2) > self.depth as i64 {
                    continue;
                }
                out.push(Element::tensor(b1.clone(), b2.clone()));
            }
        }
        let window = if self.is_infinite() { Window::depth(self.depth) } else { Window::unbounded() };
        CrystalSet::from_elements(d, out, self.lambda.clone(), window)
    }

    pub fn highest_of(&self, nu: &Weight) -> Result<Element> {
        highest_of(self.d, nu, &self.target)
    }
}

/// `B_v(λ) ⊗ B_w(μ)`, or `B_v(λ) ⊗ B_w(∞)` cut at depth `depth` below `λ`.
pub fn tensor_set(d: &RootDatum, v: &WeylElement, lambda: &Weight, w: &WeylElement, target: &Target, depth: u64) -> Result<CrystalSet> {
    Ok(Setup::new(d, v, lambda, w, target, depth)?.tensor_set())
}

/// One piece `B_{u(b,v)}(ν)` (or `B_{u(b,v)}(∞; ν)`) of a decomposition.
#[derive(Clone, Debug)]
pub struct DecompositionComponent {
    /// `b ∈ B_w` with `b_λ ⊗ b` highest.
    pub primitive: Element,
    pub primitive_depth: u64,
    /// `b_λ ⊗ b`.
    pub top: Element,
    /// `ν = λ + wt(b)`.
    pub nu: Weight,
    /// `y` with `T_y(b_λ ⊗ b)` the component of `b_λ ⊗ b` in `{b_λ} ⊗ B_w`.
    pub y: WeylElement,
    /// `u(b, v)` built from `y` along the reduced word of `v_min^λ`.
    pub u: WeylElement,
    /// `u` reduced modulo the stabilizer of `ν` in finite mode; equal to `u`
    /// in `∞` mode.
    pub u_min: WeylElement,
    /// The component of `b_λ ⊗ b` in the tensor set.
    pub component: CrystalSet,
    /// `B_u(ν)` (or `B_u(∞; ν)`) built independently and matched against the
    /// component.
    pub demazure: CrystalSet,
    pub backtracked: bool,
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub datum: String,
    pub lambda: Weight,
    pub v: WeylElement,
    pub w: WeylElement,
    pub target: Target,
    /// The window `D` in `∞` mode.
    pub depth: Option<u64>,
    pub criterion: Criterion,
    pub components: Vec<DecompositionComponent>,
    /// Size of the tensor set checked for the partition property (the part
    /// of depth at most `D` in `∞` mode).
    pub tensor_size: usize,
    /// `∞` mode: no primitive was found at depth exactly `D`.
    pub saturated_heuristic: Option<bool>,
}

impl DecompositionReport {
    pub fn backtracking_used(&self) -> bool {
        self.components.iter().any(|c| c.backtracked)
    }
}

/// Components of `X` as `f`-closures of its primitives, each recognized as a
/// Demazure crystal where possible.
pub(crate) struct Pieces {
    pub primitives: Vec<Element>,
    pub recognized: Vec<Option<WeylElement>>,
    pub backtracked: Vec<bool>,
}

pub(crate) fn identity_pieces(s: &Setup) -> Result<Pieces> {
    let primitives = s.primitives()?;
    let mut recognized = Vec::new();
    let mut backtracked = Vec::new();
    for b in &primitives {
        let top = Element::tensor(s.b_lambda.clone(), b.clone());
        let comp = s.component(&top, true)?;
        let r = recognize_demazure(s.d, &comp, &top, !s.is_infinite())?;
        recognized.push(r.y);
        backtracked.push(r.backtracked);
    }
    Ok(Pieces { primitives, recognized, backtracked })
}

/// Checks that `components` are pairwise disjoint and cover `x`.
pub(crate) fn check_partition(x: &CrystalSet, components: &[&CrystalSet]) -> Result<()> {
    let mut owner: BTreeMap<&Element, usize> = BTreeMap::new();
    for (k, c) in components.iter().enumerate() {
        for e in c.elements() {
            if let Some(prev) = owner.insert(e, k) {
                return Err(Error::VerificationMismatch(format!("components {} and {} overlap", prev + 1, k + 1)));
            }
        }
    }
    for e in x.elements() {
        if !owner.contains_key(e) {
            return Err(Error::VerificationMismatch("an element of the tensor set lies in no component".into()));
        }
    }
    Ok(())
}

/// Splits `B_v(λ) ⊗ B_w(μ)` (or `B_v(λ) ⊗ B_w(∞)` to window `depth`) into
/// Demazure crystals and verifies the result: every component is matched
/// against an independently built `B_{u(b,v)}(ν)`, and the components are
/// checked to partition the tensor set.
pub fn decompose_tensor(
    d: &RootDatum,
    v: &WeylElement,
    lambda: &Weight,
    w: &WeylElement,
    target: &Target,
    depth: u64,
) -> Result<DecompositionReport> {
    let crit = criterion(d, v, lambda, w, target)?;
    crit.require()?;
    let s = Setup::new(d, v, lambda, w, target, depth)?;
    let vword = crit.v_min.reduced_word().to_vec();
    let pieces = identity_pieces(&s)?;
    let mut components = Vec::new();
    for (k, b) in pieces.primitives.iter().enumerate() {
        let top = Element::tensor(s.b_lambda.clone(), b.clone());
        let nu = top.wt(d);
        let y = pieces.recognized[k]
            .clone()
            .ok_or_else(|| Error::VerificationMismatch(format!("component {} of b_λ ⊗ B_w is not a Demazure crystal", k + 1)))?;
        let u = u_from_y(d, &y, &vword)?;
        let u_min = if s.is_infinite() { u.clone() } else { u.min_coset_rep(d, &nu)? };
        let component = s.component(&top, false)?;
        let demazure = demazure_set(d, &s.highest_of(&nu)?, &u, s.local_window());
        if let Err(m) = match_highest_weight(d, &component, &demazure) {
            return Err(Error::VerificationMismatch(format!(
                "component {} does not match B_u(ν) for u = {u}: {}",
                k + 1,
                m.reason
            )));
        }
        components.push(DecompositionComponent {
            primitive: b.clone(),
            primitive_depth: s.bw.depth_of(d, b) as u64,
            top,
            nu,
            y,
            u,
            u_min,
            component,
            demazure,
            backtracked: pieces.backtracked[k],
        });
    }
    let x = s.tensor_set();
    let refs: Vec<&CrystalSet> = components.iter().map(|c| &c.component).collect();
    check_partition(&x, &refs)?;
    let saturated_heuristic = s
        .is_infinite()
        .then(|| components.iter().all(|c| c.primitive_depth < depth));
    Ok(DecompositionReport {
        datum: d.name().into(),
        lambda: lambda.clone(),
        v: v.clone(),
        w: w.clone(),
        target: target.clone(),
        depth: s.is_infinite().then_some(depth),
        criterion: crit,
        components,
        tensor_size: x.len(),
        saturated_heuristic,
    })
}
