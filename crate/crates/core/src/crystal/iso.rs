use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Signed;

use super::{CrystalSet, Element};
use crate::rootdata::RootDatum;

/// A weight- and edge-preserving bijection; `map[k]` is the image of the
/// `k`-th element of the first set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub map: Vec<usize>,
}

/// The first disagreement found while matching two sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// Element of the first set at which the disagreement shows up.
    pub element: Option<Element>,
    pub index: Option<usize>,
    pub reason: String,
}

impl Mismatch {
    fn new(element: Option<&Element>, index: Option<usize>, reason: impl Into<String>) -> Self {
        Mismatch { element: element.cloned(), index, reason: reason.into() }
    }
}

/// Index of the unique element of maximal weight in the dominance order.
pub fn unique_top(d: &RootDatum, set: &CrystalSet) -> Option<usize> {
    if set.is_empty() {
        return None;
    }
    let reference = set.elements()[0].wt(d);
    let coords: Option<Vec<_>> =
        set.elements().iter().map(|x| d.root_coords(&(&x.wt(d) - &reference))).collect();
    let coords = coords?;
    let best = coords.iter().map(|c| c.height()).max()?;
    let candidates: Vec<usize> = (0..coords.len()).filter(|&k| coords[k].height() == best).collect();
    if candidates.len() != 1 {
        return None;
    }
    let t = candidates[0];
    let dominates = coords.iter().all(|c| c.0.iter().zip(&coords[t].0).all(|(y, x)| !(*x - *y).is_negative()));
    dominates.then_some(t)
}

/// Matches two sets from their tops along `f_i` edges, requiring equal
/// weights and string data at every node and consistency wherever paths
/// merge.
pub fn match_highest_weight(d: &RootDatum, x: &CrystalSet, y: &CrystalSet) -> Result<Isomorphism, Mismatch> {
    let x0 = unique_top(d, x).ok_or_else(|| Mismatch::new(None, None, "first set has no unique top"))?;
    let y0 = unique_top(d, y).ok_or_else(|| Mismatch::new(None, None, "second set has no unique top"))?;
    let mut map: Vec<Option<usize>> = vec![None; x.len()];
    let mut hit = vec![false; y.len()];
    map[x0] = Some(y0);
    hit[y0] = true;
    let mut queue = VecDeque::from([x0]);
    while let Some(a) = queue.pop_front() {
        let b = map[a].unwrap();
        let (xa, yb) = (&x.elements()[a], &y.elements()[b]);
        if xa.wt(d) != yb.wt(d) {
            return Err(Mismatch::new(Some(xa), None, "weights differ"));
        }
        for i in 0..d.rank() {
            if xa.epsilon(d, i) != yb.epsilon(d, i) || xa.phi(d, i) != yb.phi(d, i) {
                return Err(Mismatch::new(Some(xa), Some(i), format!("string data differ for index {}", i + 1)));
            }
            match (x.f_edge(a, i), y.f_edge(b, i)) {
                (None, None) => {}
                (Some(_), None) | (None, Some(_)) => {
                    return Err(Mismatch::new(Some(xa), Some(i), format!("f_{} defined on one side only", i + 1)));
                }
                (Some(a2), Some(b2)) => match map[a2] {
                    Some(prev) if prev != b2 => {
                        return Err(Mismatch::new(Some(&x.elements()[a2]), Some(i), "paths merge inconsistently"));
                    }
                    Some(_) => {}
                    None => {
                        if hit[b2] {
                            return Err(Mismatch::new(Some(&x.elements()[a2]), Some(i), "map is not injective"));
                        }
                        map[a2] = Some(b2);
                        hit[b2] = true;
                        queue.push_back(a2);
                    }
                },
            }
        }
    }
    if let Some(k) = map.iter().position(Option::is_none) {
        return Err(Mismatch::new(Some(&x.elements()[k]), None, "element not reachable from the top"));
    }
    if hit.iter().any(|h| !h) {
        return Err(Mismatch::new(None, None, "second set has elements not reached"));
    }
    Ok(Isomorphism { map: map.into_iter().map(Option::unwrap).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{component_within, enumerate_from, Window};
    use crate::rootdata::Weight;

    #[test]
    fn sl2_examples() {
        let d = RootDatum::preset("A1").unwrap();
        let chain3 = enumerate_from(&d, Element::highest_path(&d, &Weight::from_ints(&[2])).unwrap(), Window::unbounded());
        let iso = match_highest_weight(&d, &chain3, &chain3).unwrap();
        assert_eq!(iso.map, vec![0, 1, 2]);

        let top = Element::highest_path(&d, &Weight::from_ints(&[1])).unwrap();
        let b1 = enumerate_from(&d, top.clone(), Window::unbounded());
        let mut all = Vec::new();
        for a in b1.elements() {
            for b in b1.elements() {
                all.push(Element::tensor(a.clone(), b.clone()));
            }
        }
        let square = CrystalSet::from_elements(&d, all, Weight::from_ints(&[2]), Window::unbounded());
        let comp = component_within(&d, &Element::tensor(top.clone(), top.clone()), &square).unwrap();
        assert!(match_highest_weight(&d, &comp, &chain3).is_ok());

        let chain2 = enumerate_from(&d, Element::highest_path(&d, &Weight::from_ints(&[2])).unwrap(), Window::depth(1));
        assert!(match_highest_weight(&d, &chain3, &chain2).is_err());
        // the whole square has two tops
        assert!(match_highest_weight(&d, &square, &chain3).is_err());
    }
}
