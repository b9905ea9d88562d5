use alloc::collections::BTreeSet;

use super::set::depth;
use super::{CrystalSet, Element};
use crate::rootdata::RootDatum;

/// Membership in a subset of some ambient crystal.
pub trait Membership {
    /// `None` when membership cannot be decided, e.g. beyond a window.
    fn contains(&self, d: &RootDatum, x: &Element) -> Option<bool>;

    /// Whether every element of the `i`-string below `next` (inclusive)
    /// is known to share the membership of `next`. The default knows
    /// nothing.
    fn settles(&self, _d: &RootDatum, _prev: &Element, _next: &Element, _i: usize) -> bool {
        false
    }
}

/// Membership in a [`CrystalSet`], undecided beyond its window.
pub struct SetMembership<'a>(pub &'a CrystalSet);

impl Membership for SetMembership<'_> {
    fn contains(&self, d: &RootDatum, x: &Element) -> Option<bool> {
        if self.0.contains(x) {
            return Some(true);
        }
        match self.0.window().max_depth() {
            Some(_) if !self.0.window().admits(depth(d, self.0.top_weight(), x)) => None,
            _ => Some(false),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extremality {
    Extremal,
    /// The `i`-string with top `top` meets the set in a forbidden pattern.
    Violated { top: Element, index: usize },
    /// Nothing failed, but the string with top `top` could not be decided.
    Inconclusive { top: Element, index: usize },
}

impl Extremality {
    pub fn is_extremal(&self) -> bool {
        matches!(self, Extremality::Extremal)
    }
}

enum Walk {
    Fine,
    Violated,
    Undecided,
}

/// Walks the `i`-string from `top`, classifying `S ∩ X` as `∅`, `S`, `{top}`
/// or a forbidden pattern.
fn walk(d: &RootDatum, top: &Element, i: usize, oracle: &impl Membership, max_steps: usize) -> Walk {
    let Some(head) = oracle.contains(d, top) else {
        return Walk::Undecided;
    };
    let mut seen_in = false;
    let mut seen_out = false;
    let mut cur = top.clone();
    let mut steps = 0;
    loop {
        let Some(next) = cur.f(d, i) else {
            return Walk::Fine;
        };
        steps += 1;
        if steps > max_steps {
            return Walk::Undecided;
        }
        let settled = oracle.settles(d, &cur, &next, i);
        let Some(m) = oracle.contains(d, &next) else {
            return Walk::Undecided;
        };
        if m {
            seen_in = true;
        } else {
            seen_out = true;
        }
        // allowed patterns: all out, all in, or only the top in
        if (!head && seen_in) || (head && seen_in && seen_out) {
            return Walk::Violated;
        }
        if settled {
            return Walk::Fine;
        }
        cur = next;
    }
}

/// Checks that every `i`-string through an element of `set` meets the
/// subset described by `oracle` in `∅`, the whole string or its top.
pub fn is_extremal(d: &RootDatum, set: &CrystalSet, oracle: &impl Membership, max_steps: usize) -> Extremality {
    let mut undecided = None;
    for i in 0..d.rank() {
        let mut tops = BTreeSet::new();
        for x in set.elements() {
            let mut top = x.clone();
            while let Some(up) = top.e(d, i) {
                top = up;
            }
            if !tops.insert(top.clone()) {
                continue;
            }
            match walk(d, &top, i, oracle, max_steps) {
                Walk::Fine => {}
                Walk::Violated => return Extremality::Violated { top, index: i },
                Walk::Undecided => {
                    if undecided.is_none() {
                        undecided = Some(Extremality::Inconclusive { top, index: i });
                    }
                }
            }
        }
    }
    undecided.unwrap_or(Extremality::Extremal)
}
