//! `B(∞)` inside a semi-infinite tensor product of elementary crystals.
//!
//! Positions `p = 1, 2, …` carry the cyclic indices `ι_p = ((p − 1) mod n) + 1`
//! and position 1 is the rightmost factor. An element is a finitely supported
//! sequence `a_p ≥ 0`; the zero sequence is `b_∞`. Only sequences reachable
//! from `b_∞` by the `f_i` are ever built, so the set of values is exactly the
//! embedded copy of `B(∞)`.
//!
//! For an index `i` and an `i`-position `p` put
//! `σ_p = a_p + Σ_{q > p} ⟨α_{ι_q}, α_i^∨⟩ a_q`. The candidates are the
//! `i`-positions inside the support together with the first `i`-position past
//! it (where `σ = 0`). `f_i` raises `a_p` at the first position with maximal
//! `σ`; `e_i` lowers it at the last one, and is null when the maximum is 0.

use alloc::vec::Vec;

use crate::rootdata::{RootDatum, Weight};
use crate::Q;

/// An element of `B(∞)`. `a[k]` is the entry at position `k + 1`; trailing
/// zeros are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BSeq {
    a: Vec<u64>,
}

impl BSeq {
    /// `b_∞`.
    pub fn highest() -> Self {
        BSeq::default()
    }

    /// Builds an element from its dense entries. The caller is responsible
    /// for the entries lying in the image of `B(∞)`; use
    /// [`BSeq::is_reachable`] to check.
    pub fn from_entries(entries: &[u64]) -> Self {
        let mut a = entries.to_vec();
        while a.last() == Some(&0) {
            a.pop();
        }
        BSeq { a }
    }

    pub fn entries(&self) -> &[u64] {
        &self.a
    }

    /// Nonzero entries as 1-based `(position, value)` pairs.
    pub fn sparse(&self) -> Vec<(usize, u64)> {
        self.a.iter().enumerate().filter(|(_, &v)| v != 0).map(|(k, &v)| (k + 1, v)).collect()
    }

    pub fn from_sparse(pairs: &[(usize, u64)]) -> Self {
        let len = pairs.iter().map(|&(p, _)| p).max().unwrap_or(0);
        let mut a = alloc::vec![0; len];
        for &(p, v) in pairs {
            if p >= 1 {
                a[p - 1] += v;
            }
        }
        BSeq::from_entries(&a)
    }

    /// Number of `f` steps from `b_∞`, i.e. `ht(−wt)`.
    pub fn depth(&self) -> u64 {
        self.a.iter().sum()
    }

    pub fn is_highest(&self) -> bool {
        self.a.is_empty()
    }

    fn index_at(n: usize, k: usize) -> usize {
        k % n
    }

    /// `wt = −Σ a_p α_{ι_p}`.
    pub fn weight(&self, d: &RootDatum) -> Weight {
        let n = d.rank();
        let mut out = Weight::zero(d.dim());
        for (k, &v) in self.a.iter().enumerate() {
            if v != 0 {
                out -= &d.simple_root(Self::index_at(n, k)).scale(Q::from_integer(v as i64));
            }
        }
        out
    }

    /// `(position, σ)` for the candidate `i`-positions, in increasing order.
    fn signature(&self, d: &RootDatum, i: usize) -> Vec<(usize, i64)> {
        let n = d.rank();
        let len = self.a.len();
        // first i-position at or beyond the support
        let tail = if len % n <= i { len - len % n + i } else { len - len % n + n + i };
        let mut out = Vec::new();
        let mut suffix: i64 = 0;
        let mut k = len;
        while k > 0 {
            k -= 1;
            let j = Self::index_at(n, k);
            if j == i {
                out.push((k, self.a[k] as i64 + suffix));
            }
            suffix += d.cartan_entry(i, j) * self.a[k] as i64;
        }
        out.reverse();
        out.push((tail, 0));
        out
    }

    /// `ε_i`.
    pub fn epsilon(&self, d: &RootDatum, i: usize) -> i64 {
        self.signature(d, i).iter().map(|&(_, s)| s).max().unwrap().max(0)
    }

    /// `φ_i = ε_i + ⟨wt, α_i^∨⟩`.
    pub fn phi(&self, d: &RootDatum, i: usize) -> i64 {
        self.epsilon(d, i) + d.pairing(&self.weight(d), i).to_integer()
    }

    /// Never null on `B(∞)`.
    pub fn f(&self, d: &RootDatum, i: usize) -> BSeq {
        let sig = self.signature(d, i);
        let max = sig.iter().map(|&(_, s)| s).max().unwrap();
        let (k, _) = *sig.iter().find(|&&(_, s)| s == max).unwrap();
        let mut a = self.a.clone();
        if k >= a.len() {
            a.resize(k + 1, 0);
        }
        a[k] += 1;
        BSeq { a }
    }

    pub fn e(&self, d: &RootDatum, i: usize) -> Option<BSeq> {
        let sig = self.signature(d, i);
        let max = sig.iter().map(|&(_, s)| s).max().unwrap();
        if max <= 0 {
            return None;
        }
        let (k, _) = *sig.iter().rev().find(|&&(_, s)| s == max).unwrap();
        let mut a = self.a.clone();
        // only fails on sequences outside the image of B(∞)
        a[k] = a[k].checked_sub(1)?;
        Some(BSeq::from_entries(&a))
    }

    /// Whether repeated `e` operators bring the element back to `b_∞`. Every
    /// element of the embedded `B(∞)` passes; most other sequences do not.
    pub fn is_reachable(&self, d: &RootDatum) -> bool {
        let mut cur = self.clone();
        'outer: while !cur.is_highest() {
            for i in 0..d.rank() {
                if let Some(up) = cur.e(d, i) {
                    if up.f(d, i) != cur {
                        return false;
                    }
                    cur = up;
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }
}
