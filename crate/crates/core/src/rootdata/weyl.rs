use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use num_traits::Zero;

use super::{RootDatum, RootVector, Weight};
use crate::{Error, Result, Q};

type IntMatrix = Vec<Vec<i64>>;

/// An element of the Weyl group, stored as the word it was built from plus
/// its integer matrix on simple-root coordinates.
///
/// Column `j` of the matrix is `w(α_j)`. Two elements are equal exactly when
/// their matrices are, since the action on the root lattice is faithful.
#[derive(Clone, Debug)]
pub struct WeylElement {
    word: Vec<usize>,
    m: IntMatrix,
    m_inv: IntMatrix,
    reduced: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.m.hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shorter elements first, then by matrix.
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length().cmp(&other.length()).then_with(|| self.m.cmp(&other.m))
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reduced.is_empty() {
            return write!(f, "e");
        }
        for i in &self.reduced {
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

/// `S_i M`: only row `i` changes.
fn left_apply(d: &RootDatum, i: usize, m: &mut IntMatrix) {
    let n = m.len();
    for k in 0..n {
        let mut acc = 0;
        for (j, row) in m.iter().enumerate() {
            acc += d.cartan_entry(i, j) * row[k];
        }
        m[i][k] -= acc;
    }
}

/// `M S_i`: column `j` becomes `M[:,j] − a_ij M[:,i]`.
fn right_apply(d: &RootDatum, i: usize, m: &mut IntMatrix) {
    let n = m.len();
    for row in m.iter_mut() {
        let ci = row[i];
        for j in 0..n {
            row[j] -= d.cartan_entry(i, j) * ci;
        }
    }
}

fn column_negative(m: &IntMatrix, i: usize) -> bool {
    m.iter().all(|row| row[i] <= 0) && m.iter().any(|row| row[i] != 0)
}

/// Strips left descents (smallest index first) until the identity is
/// reached. Each step `w ← s_i w` lowers the length by one, so the letters
/// come out as a reduced word read left to right.
fn strip(d: &RootDatum, m_inv: &IntMatrix) -> Vec<usize> {
    let n = m_inv.len();
    let id = identity(n);
    let mut cur = m_inv.clone();
    let mut out = Vec::new();
    while cur != id {
        let i = (0..n)
            .find(|&i| column_negative(&cur, i))
            .expect("a non-identity element has a left descent");
        out.push(i);
        right_apply(d, i, &mut cur);
    }
    out
}

impl WeylElement {
    pub fn identity(d: &RootDatum) -> Self {
        let n = d.rank();
        WeylElement { word: Vec::new(), m: identity(n), m_inv: identity(n), reduced: Vec::new() }
    }

    pub fn generator(d: &RootDatum, i: usize) -> Result<Self> {
        Self::from_word(d, &[i])
    }

    /// The product `s_{w_1} s_{w_2} ⋯ s_{w_k}` (0-based letters).
    pub fn from_word(d: &RootDatum, word: &[usize]) -> Result<Self> {
        let n = d.rank();
        let mut m = identity(n);
        let mut m_inv = identity(n);
        for &i in word {
            d.check_index(i)?;
            right_apply(d, i, &mut m);
        }
        for &i in word.iter().rev() {
            right_apply(d, i, &mut m_inv);
        }
        let reduced = strip(d, &m_inv);
        Ok(WeylElement { word: word.to_vec(), m, m_inv, reduced })
    }

    /// Like [`from_word`](Self::from_word) but rejects non-reduced words.
    pub fn from_reduced_word(d: &RootDatum, word: &[usize]) -> Result<Self> {
        let w = Self::from_word(d, word)?;
        if w.length() != word.len() {
            return Err(Error::WordNotReduced(word.to_vec()));
        }
        Ok(w)
    }

    /// The word this element was built from, not necessarily reduced.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// The reduced word found by descent stripping.
    pub fn reduced_word(&self) -> &[usize] {
        &self.reduced
    }

    pub fn length(&self) -> usize {
        self.reduced.len()
    }

    /// `(length, reduced word)`.
    pub fn length_and_reduced_word(&self) -> (usize, Vec<usize>) {
        (self.length(), self.reduced.clone())
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        self.reduced.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    fn from_parts(d: &RootDatum, word: Vec<usize>, m: IntMatrix, m_inv: IntMatrix) -> Self {
        let reduced = strip(d, &m_inv);
        WeylElement { word, m, m_inv, reduced }
    }

    /// `s_i w`.
    pub fn left_mul(&self, d: &RootDatum, i: usize) -> Self {
        let mut m = self.m.clone();
        left_apply(d, i, &mut m);
        let mut m_inv = self.m_inv.clone();
        right_apply(d, i, &mut m_inv);
        let mut word = vec![i];
        word.extend_from_slice(&self.word);
        Self::from_parts(d, word, m, m_inv)
    }

    /// `w s_i`.
    pub fn right_mul(&self, d: &RootDatum, i: usize) -> Self {
        let mut m = self.m.clone();
        right_apply(d, i, &mut m);
        let mut m_inv = self.m_inv.clone();
        left_apply(d, i, &mut m_inv);
        let mut word = self.word.clone();
        word.push(i);
        Self::from_parts(d, word, m, m_inv)
    }

    /// `self · other`.
    pub fn mul(&self, d: &RootDatum, other: &WeylElement) -> Self {
        let mut out = self.clone();
        for &i in &other.word {
            out = out.right_mul(d, i);
        }
        out
    }

    pub fn inverse(&self, d: &RootDatum) -> Self {
        let word: Vec<usize> = self.word.iter().rev().copied().collect();
        Self::from_parts(d, word, self.m_inv.clone(), self.m.clone())
    }

    /// `l(s_i w) < l(w)`, tested as `w⁻¹ α_i < 0`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        column_negative(&self.m_inv, i)
    }

    /// `l(w s_i) < l(w)`, tested as `w α_i < 0`.
    pub fn is_right_descent(&self, i: usize) -> bool {
        column_negative(&self.m, i)
    }

    /// Image of a root-lattice vector.
    pub fn act_on_roots(&self, beta: &RootVector) -> RootVector {
        let n = self.m.len();
        RootVector(
            (0..n)
                .map(|r| (0..n).fold(Q::zero(), |acc, c| acc + Q::from_integer(self.m[r][c]) * beta.0[c]))
                .collect(),
        )
    }

    /// `w μ`, by applying the reduced word right to left.
    pub fn act_on_weight(&self, d: &RootDatum, mu: &Weight) -> Weight {
        let mut out = mu.clone();
        for &i in self.reduced.iter().rev() {
            out = d.reflect_weight(i, &out);
        }
        out
    }

    /// Letters of a reduced word. Independent of the reduced word chosen.
    pub fn support(&self) -> BTreeSet<usize> {
        self.reduced.iter().copied().collect()
    }

    pub fn in_parabolic(&self, j: &BTreeSet<usize>) -> bool {
        self.support().is_subset(j)
    }

    /// Parabolic membership by stripping left descents drawn from `J` only.
    /// Agrees with [`in_parabolic`](Self::in_parabolic); kept as an
    /// independent check.
    pub fn in_parabolic_by_stripping(&self, d: &RootDatum, j: &BTreeSet<usize>) -> bool {
        let mut cur = self.clone();
        while !cur.is_identity() {
            match j.iter().copied().find(|&i| cur.is_left_descent(i)) {
                Some(i) => cur = cur.left_mul(d, i),
                None => return false,
            }
        }
        true
    }

    /// The minimal length representative of `w W_λ`.
    pub fn min_coset_rep(&self, d: &RootDatum, lambda: &Weight) -> Result<Self> {
        d.require_dominant_integral(lambda)?;
        let j = d.stabilizer_indices(lambda);
        Ok(self.min_coset_rep_for(d, &j))
    }

    /// The minimal length representative of `w W_J`.
    pub fn min_coset_rep_for(&self, d: &RootDatum, j: &BTreeSet<usize>) -> Self {
        let mut cur = self.clone();
        while let Some(i) = j.iter().copied().find(|&i| cur.is_right_descent(i)) {
            cur = cur.right_mul(d, i);
        }
        cur
    }

    /// Bruhat order, by the recursive descent test.
    pub fn bruhat_leq(&self, d: &RootDatum, w: &WeylElement) -> bool {
        let mut u = self.clone();
        let mut w = w.clone();
        loop {
            if u.length() >= w.length() {
                return u == w;
            }
            let i = w.reduced[0];
            if u.is_left_descent(i) {
                u = u.left_mul(d, i);
            }
            w = w.left_mul(d, i);
        }
    }

    /// All elements of length at most `max_len`, shortest first. For finite
    /// types a large bound gives the whole group.
    pub fn enumerate(d: &RootDatum, max_len: usize) -> Vec<WeylElement> {
        let e = WeylElement::identity(d);
        let mut seen: BTreeSet<IntMatrix> = BTreeSet::new();
        seen.insert(e.m.clone());
        let mut out = Vec::new();
        let mut queue = VecDeque::from([e]);
        while let Some(w) = queue.pop_front() {
            if w.length() < max_len {
                for i in 0..d.rank() {
                    if !w.is_left_descent(i) {
                        let next = w.left_mul(d, i);
                        if seen.insert(next.m.clone()) {
                            queue.push_back(next);
                        }
                    }
                }
            }
            out.push(w);
        }
        out
    }
}
