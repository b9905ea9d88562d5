use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::crystal::{set_depth, CrystalSet, Element};
use crate::rootdata::{RootDatum, WeylElement};
use crate::{Error, Result};

/// Result of searching for `y` with `X = T_y{top}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recognition {
    /// `None` when no sequence of `T` operators produces the set.
    pub y: Option<WeylElement>,
    /// Some branch of the search dead-ended before the answer was found.
    pub backtracked: bool,
    pub states_visited: usize,
}

#[derive(Clone, Copy)]
enum Step {
    Inside(usize),
    Null,
    /// Leaves the set but also the window, so the string is cut here.
    Beyond,
    Outside,
}

struct Search<'a> {
    d: &'a RootDatum,
    steps: Vec<Vec<Step>>,
    target: usize,
    visited: BTreeSet<Vec<bool>>,
    backtracked: bool,
}

impl Search<'_> {
    /// `T_i S`, or `None` if it leaves the set.
    fn apply(&self, i: usize, state: &[bool]) -> Option<Vec<bool>> {
        let mut out = state.to_vec();
        for (k, &on) in state.iter().enumerate() {
            if !on {
                continue;
            }
            let mut cur = k;
            loop {
                match self.steps[cur][i] {
                    Step::Inside(j) => {
                        out[j] = true;
                        cur = j;
                    }
                    Step::Null | Step::Beyond => break,
                    Step::Outside => return None,
                }
            }
        }
        Some(out)
    }

    fn dfs(&mut self, state: Vec<bool>, w: WeylElement) -> Option<WeylElement> {
        let count = state.iter().filter(|&&b| b).count();
        if count == self.target {
            return Some(w);
        }
        let mut tried = false;
        for i in 0..self.d.rank() {
            let Some(next) = self.apply(i, &state) else { continue };
            if next == state || self.visited.contains(&next) {
                continue;
            }
            if tried {
                self.backtracked = true;
            }
            tried = true;
            self.visited.insert(next.clone());
            let w_next = w.left_mul(self.d, i);
            if let Some(found) = self.dfs(next, w_next) {
                return Some(found);
            }
        }
        None
    }
}

/// Searches for `y` with `X = T_y{top}`, branching on the smallest index
/// first and only through steps with `T_i S ⊆ X` and `T_i S ≠ S`. Windows
/// are those of `X`, with depth measured from `wt(top)`.
///
/// With `canonical` set, the answer is replaced by its minimal coset
/// representative modulo the stabilizer of `wt(top)`.
pub fn recognize_demazure(d: &RootDatum, x: &CrystalSet, top: &Element, canonical: bool) -> Result<Recognition> {
    let start = x.index_of(top).ok_or(Error::TopNotInSet)?;
    let nu = top.wt(d);
    let window = x.window();
    let steps: Vec<Vec<Step>> = x
        .elements()
        .iter()
        .enumerate()
        .map(|(k, el)| {
            (0..d.rank())
                .map(|i| match x.f_edge(k, i) {
                    Some(j) => Step::Inside(j),
                    None => match el.f(d, i) {
                        None => Step::Null,
                        Some(y) if !window.admits(set_depth(d, &nu, &y)) => Step::Beyond,
                        Some(_) => Step::Outside,
                    },
                })
                .collect()
        })
        .collect();
    let mut state = vec![false; x.len()];
    state[start] = true;
    let mut search = Search { d, steps, target: x.len(), visited: BTreeSet::new(), backtracked: false };
    search.visited.insert(state.clone());
    let found = search.dfs(state, WeylElement::identity(d));
    let y = match found {
        Some(y) if canonical => Some(y.min_coset_rep(d, &nu)?),
        other => other,
    };
    Ok(Recognition { y, backtracked: search.backtracked, states_visited: search.visited.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{enumerate_from, Window};
    use crate::demazure::demazure_set;
    use crate::rootdata::Weight;

    #[test]
    fn sl2_examples() {
        let d = RootDatum::preset("A1").unwrap();
        let top = Element::highest_path(&d, &Weight::from_ints(&[2])).unwrap();
        let single = CrystalSet::from_elements(&d, vec![top.clone()], Weight::from_ints(&[2]), Window::unbounded());
        let r = recognize_demazure(&d, &single, &top, true).unwrap();
        assert_eq!(r.y, Some(WeylElement::identity(&d)));
        let chain = enumerate_from(&d, top.clone(), Window::unbounded());
        let r = recognize_demazure(&d, &chain, &top, true).unwrap();
        assert_eq!(r.y, Some(WeylElement::generator(&d, 0).unwrap()));
        let two = CrystalSet::from_elements(
            &d,
            chain.elements()[..2].to_vec(),
            Weight::from_ints(&[2]),
            Window::unbounded(),
        );
        assert_eq!(recognize_demazure(&d, &two, &top, true).unwrap().y, None);
        let other = Element::highest_path(&d, &Weight::from_ints(&[1])).unwrap();
        assert_eq!(recognize_demazure(&d, &two, &other, true), Err(Error::TopNotInSet));
    }

    #[test]
    fn recovers_every_demazure_set_in_a3() {
        let d = RootDatum::preset("A3").unwrap();
        let lam = Weight::from_ints(&[1, 0, 1]);
        let top = Element::highest_path(&d, &lam).unwrap();
        for w in WeylElement::enumerate(&d, 10) {
            let s = demazure_set(&d, &top, &w, Window::unbounded());
            let r = recognize_demazure(&d, &s, &top, true).unwrap();
            assert_eq!(r.y.unwrap(), w.min_coset_rep(&d, &lam).unwrap());
        }
    }

    #[test]
    fn recovers_truncated_b_infinity_sets() {
        let d = RootDatum::preset("A2").unwrap();
        let top = Element::b_infinity();
        for w in WeylElement::enumerate(&d, 10) {
            let s = demazure_set(&d, &top, &w, Window::depth(4));
            let r = recognize_demazure(&d, &s, &top, false).unwrap();
            assert_eq!(r.y.unwrap(), w);
        }
    }
}
