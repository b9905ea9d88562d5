use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;

use super::Element;
use crate::rootdata::{RootDatum, Weight};
use crate::{Error, Result};

/// Truncation by depth, where the depth of `x` is `ht(top − wt(x))`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Window {
    depth: Option<u64>,
}

impl Window {
    pub fn unbounded() -> Self {
        Window { depth: None }
    }

    pub fn depth(d: u64) -> Self {
        Window { depth: Some(d) }
    }

    pub fn max_depth(&self) -> Option<u64> {
        self.depth
    }

    pub fn admits(&self, depth: i64) -> bool {
        self.depth.is_none_or(|d| depth <= d as i64)
    }
}

/// A deduplicated finite set of crystal elements with the `f_i` edges that
/// stay inside the set.
#[derive(Clone, Debug)]
pub struct CrystalSet {
    elements: Vec<Element>,
    index: BTreeMap<Element, usize>,
    edges: BTreeMap<(usize, usize), usize>,
    top: Weight,
    window: Window,
    truncated: bool,
    label: String,
}

impl PartialEq for CrystalSet {
    /// Equal as sets of elements.
    fn eq(&self, other: &Self) -> bool {
        self.index.len() == other.index.len() && self.index.keys().all(|k| other.index.contains_key(k))
    }
}

impl CrystalSet {
    /// Collects `elements` (deduplicated, first occurrence kept) and records
    /// every `f_i` edge between them. Depths are measured from `top`.
    pub fn from_elements(
        d: &RootDatum,
        elements: impl IntoIterator<Item = Element>,
        top: Weight,
        window: Window,
    ) -> Self {
        let mut list = Vec::new();
        let mut index = BTreeMap::new();
        for x in elements {
            if !index.contains_key(&x) {
                index.insert(x.clone(), list.len());
                list.push(x);
            }
        }
        let mut set = CrystalSet {
            elements: list,
            index,
            edges: BTreeMap::new(),
            top,
            window,
            truncated: false,
            label: String::new(),
        };
        set.rebuild_edges(d);
        set
    }

    fn rebuild_edges(&mut self, d: &RootDatum) {
        self.edges.clear();
        self.truncated = false;
        for (k, x) in self.elements.iter().enumerate() {
            for i in 0..d.rank() {
                if let Some(y) = x.f(d, i) {
                    if let Some(&j) = self.index.get(&y) {
                        self.edges.insert((k, i), j);
                    } else if self.window.max_depth().is_some() && !self.window.admits(self.depth_of(d, &y)) {
                        self.truncated = true;
                    }
                }
            }
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in insertion (breadth first) order.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.index.contains_key(x)
    }

    pub fn index_of(&self, x: &Element) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// `(from, i, to)` for every `f_i` edge inside the set.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.edges.iter().map(|(&(a, i), &b)| (a, i, b))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn f_edge(&self, from: usize, i: usize) -> Option<usize> {
        self.edges.get(&(from, i)).copied()
    }

    pub fn top_weight(&self) -> &Weight {
        &self.top
    }

    pub fn window(&self) -> Window {
        self.window
    }

    /// Some element at the window boundary has an `f` child beyond it.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// `ht(top − wt(x))`; `i64::MAX` when the difference is not in the root
    /// span.
    pub fn depth_of(&self, d: &RootDatum, x: &Element) -> i64 {
        depth(d, &self.top, x)
    }

    pub fn is_subset(&self, other: &CrystalSet) -> bool {
        self.elements.iter().all(|x| other.contains(x))
    }
}

pub(crate) fn depth(d: &RootDatum, top: &Weight, x: &Element) -> i64 {
    match d.depth_below(top, &x.wt(d)) {
        Some(h) if h.is_integer() => h.to_integer(),
        _ => i64::MAX,
    }
}

/// Breadth-first closure of `seed` under all `f_i`, cut at the window.
pub fn enumerate_from(d: &RootDatum, seed: Element, window: Window) -> CrystalSet {
    let top = seed.wt(d);
    let mut seen = BTreeMap::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.clone(), ());
    queue.push_back(seed);
    while let Some(x) = queue.pop_front() {
        for i in 0..d.rank() {
            if let Some(y) = x.f(d, i) {
                if !seen.contains_key(&y) && window.admits(depth(d, &top, &y)) {
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
        order.push(x);
    }
    CrystalSet::from_elements(d, order, top, window)
}

/// The connected component of `x` in the graph on `X` given by the `f_i`
/// edges between elements of `X`.
pub fn component_within(d: &RootDatum, x: &Element, set: &CrystalSet) -> Result<CrystalSet> {
    let start = set.index_of(x).ok_or(Error::ElementNotInSet)?;
    let mut adjacent: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (a, _, b) in set.edges() {
        adjacent.entry(a).or_default().push(b);
        adjacent.entry(b).or_default().push(a);
    }
    let mut seen = alloc::vec![false; set.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut out = Vec::new();
    while let Some(k) = queue.pop_front() {
        out.push(set.elements()[k].clone());
        for &j in adjacent.get(&k).map(Vec::as_slice).unwrap_or(&[]) {
            if !seen[j] {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    Ok(CrystalSet::from_elements(d, out, set.top_weight().clone(), set.window()))
}

/// An `i`-string listed from its top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IString {
    pub elements: Vec<Element>,
    /// The walk stopped after `max_steps` while `f_i` was still defined.
    pub truncated: bool,
}

/// The `i`-string through `x`: climbs with `e_i` to the top, then descends
/// with `f_i` for at most `max_steps` steps.
pub fn i_string(d: &RootDatum, x: &Element, i: usize, max_steps: usize) -> IString {
    let mut top = x.clone();
    while let Some(up) = top.e(d, i) {
        top = up;
    }
    let mut elements = alloc::vec![top];
    let mut truncated = false;
    loop {
        let next = elements.last().unwrap().f(d, i);
        match next {
            None => break,
            Some(y) => {
                if elements.len() > max_steps {
                    truncated = true;
                    break;
                }
                elements.push(y);
            }
        }
    }
    IString { elements, truncated }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> RootDatum {
        RootDatum::preset(&alloc::format!("A{n}")).unwrap()
    }

    #[test]
    fn enumeration_sizes() {
        let d = a(1);
        let s = enumerate_from(&d, Element::highest_path(&d, &Weight::from_ints(&[1])).unwrap(), Window::unbounded());
        assert_eq!((s.len(), s.edge_count()), (2, 1));
        assert!(!s.is_truncated());
        let d2 = a(2);
        let s = enumerate_from(&d2, Element::highest_path(&d2, &Weight::from_ints(&[1, 0])).unwrap(), Window::unbounded());
        assert_eq!(s.len(), 3);
        let s = enumerate_from(&d, Element::b_infinity(), Window::depth(3));
        assert_eq!(s.len(), 4);
        assert!(s.is_truncated());
    }

    #[test]
    fn strings() {
        let d = a(1);
        let top = Element::highest_path(&d, &Weight::from_ints(&[1])).unwrap();
        let s = i_string(&d, &top, 0, 10);
        assert_eq!((s.elements.len(), s.truncated), (2, false));
        let top2 = Element::highest_path(&d, &Weight::from_ints(&[2])).unwrap();
        let mid = top2.f(&d, 0).unwrap();
        assert_eq!(i_string(&d, &mid, 0, 10).elements.len(), 3);
        let s = i_string(&d, &Element::b_infinity(), 0, 5);
        assert_eq!((s.elements.len(), s.truncated), (6, true));
    }

    #[test]
    fn components_in_tensor_square() {
        let d = a(1);
        let top = Element::highest_path(&d, &Weight::from_ints(&[1])).unwrap();
        let low = top.f(&d, 0).unwrap();
        let all: Vec<Element> = [&top, &low]
            .iter()
            .flat_map(|x| [&top, &low].map(|y| Element::tensor((*x).clone(), y.clone())))
            .collect();
        let x = CrystalSet::from_elements(&d, all, Weight::from_ints(&[2]), Window::unbounded());
        let c = component_within(&d, &Element::tensor(top.clone(), low.clone()), &x).unwrap();
        assert_eq!(c.len(), 1);
        let c = component_within(&d, &Element::tensor(top.clone(), top.clone()), &x).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(
            component_within(&d, &Element::b_infinity(), &x).unwrap_err(),
            Error::ElementNotInSet
        );
    }
}
