//! Piecewise linear paths with root operators, a model for `B(λ)`.
//!
//! A path is stored by its breakpoints `0 = t_0 < … < t_s = 1` and the
//! vertices `π(t_k)`, with `π(0) = 0`. The straight path `t ↦ tλ` plays the
//! role of `b_λ`; everything reachable from it by `f_i` is `B(λ)`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::rootdata::{RootDatum, Weight};
use crate::{Error, Result, Q};

/// A piecewise linear path in canonical form: no zero-length segments and
/// no two consecutive segments with the same velocity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PLPath {
    breaks: Vec<Q>,
    vertices: Vec<Weight>,
}

impl PLPath {
    /// Builds a path from raw breakpoints and vertices and canonicalizes it.
    /// Rejects paths on which the root operators are not defined.
    pub fn new(d: &RootDatum, breaks: Vec<Q>, vertices: Vec<Weight>) -> Result<Self> {
        if breaks.len() < 2 || breaks.len() != vertices.len() {
            return Err(Error::NonIntegralPath);
        }
        if breaks[0] != Q::zero() || *breaks.last().unwrap() != Q::one() {
            return Err(Error::NonIntegralPath);
        }
        if breaks.windows(2).any(|w| w[0] >= w[1]) || !vertices[0].is_zero() {
            return Err(Error::NonIntegralPath);
        }
        if vertices.iter().any(|v| v.dim() != d.dim()) {
            return Err(Error::NonIntegralPath);
        }
        let p = canonical(breaks, vertices);
        if !p.is_integral(d) {
            return Err(Error::NonIntegralPath);
        }
        Ok(p)
    }

    /// The straight path to a dominant integral weight.
    pub fn straight(d: &RootDatum, lambda: &Weight) -> Result<Self> {
        d.require_dominant_integral(lambda)?;
        Ok(PLPath { breaks: vec![Q::zero(), Q::one()], vertices: vec![Weight::zero(d.dim()), lambda.clone()] })
    }

    pub fn breaks(&self) -> &[Q] {
        &self.breaks
    }

    pub fn vertices(&self) -> &[Weight] {
        &self.vertices
    }

    /// `π(1)`.
    pub fn weight(&self) -> &Weight {
        self.vertices.last().unwrap()
    }

    fn heights(&self, d: &RootDatum, i: usize) -> Vec<Q> {
        self.vertices.iter().map(|v| d.pairing(v, i)).collect()
    }

    /// Every local minimum of `t ↦ ⟨π(t), α_i^∨⟩` is an integer, and the
    /// endpoint pairing is integral.
    pub fn is_integral(&self, d: &RootDatum) -> bool {
        (0..d.rank()).all(|i| {
            let h = self.heights(d, i);
            let s = h.len() - 1;
            if !h[s].is_integer() {
                return false;
            }
            (1..s).all(|k| !(h[k] <= h[k - 1] && h[k] <= h[k + 1]) || h[k].is_integer())
        })
    }

    /// `ε_i = −min h`.
    pub fn epsilon(&self, d: &RootDatum, i: usize) -> i64 {
        let h = self.heights(d, i);
        -min_of(&h).to_integer()
    }

    /// `φ_i = h(1) − min h`.
    pub fn phi(&self, d: &RootDatum, i: usize) -> i64 {
        let h = self.heights(d, i);
        (*h.last().unwrap() - min_of(&h)).to_integer()
    }

    pub fn f(&self, d: &RootDatum, i: usize) -> Option<PLPath> {
        let h = self.heights(d, i);
        let m = min_of(&h);
        let s = h.len() - 1;
        if h[s] - m < Q::one() {
            return None;
        }
        let kp = (0..=s).rev().find(|&k| h[k] == m).unwrap();
        let target = m + Q::one();
        // first segment after kp reaching m + 1
        let seg = (kp..s).find(|&k| h[k + 1] >= target).unwrap();
        let (breaks, vertices, kx) = self.split_at_level(&h, seg, target);
        let alpha = d.simple_root(i);
        let vertices = vertices
            .into_iter()
            .enumerate()
            .map(|(k, v)| {
                if k <= kp {
                    v
                } else if k <= kx {
                    let c = d.pairing(&v, i) - m;
                    &v - &alpha.scale(c)
                } else {
                    &v - alpha
                }
            })
            .collect();
        Some(canonical(breaks, vertices))
    }

    pub fn e(&self, d: &RootDatum, i: usize) -> Option<PLPath> {
        let h = self.heights(d, i);
        let m = min_of(&h);
        if m.is_zero() {
            return None;
        }
        let kq = (0..h.len()).find(|&k| h[k] == m).unwrap();
        let target = m + Q::one();
        // last segment before kq leaving the level m + 1
        let seg = (0..kq).rev().find(|&k| h[k] >= target).unwrap();
        let (breaks, vertices, ky) = self.split_at_level(&h, seg, target);
        let kq = kq + (breaks.len() - self.breaks.len());
        let alpha = d.simple_root(i);
        let vertices = vertices
            .into_iter()
            .enumerate()
            .map(|(k, v)| {
                if k <= ky {
                    v
                } else if k < kq {
                    let c = d.pairing(&v, i) - target;
                    &v - &alpha.scale(c)
                } else {
                    &v + alpha
                }
            })
            .collect();
        Some(canonical(breaks, vertices))
    }

    /// Inserts the point of segment `seg` where `h` equals `level`, if it is
    /// interior. Returns the refined path and the index of that point.
    fn split_at_level(&self, h: &[Q], seg: usize, level: Q) -> (Vec<Q>, Vec<Weight>, usize) {
        let mut breaks = self.breaks.clone();
        let mut vertices = self.vertices.clone();
        if h[seg] == level {
            return (breaks, vertices, seg);
        }
        if h[seg + 1] == level {
            return (breaks, vertices, seg + 1);
        }
        let r = (level - h[seg]) / (h[seg + 1] - h[seg]);
        let t = self.breaks[seg] + r * (self.breaks[seg + 1] - self.breaks[seg]);
        let v = &self.vertices[seg] + &(&self.vertices[seg + 1] - &self.vertices[seg]).scale(r);
        breaks.insert(seg + 1, t);
        vertices.insert(seg + 1, v);
        (breaks, vertices, seg + 1)
    }
}

fn min_of(h: &[Q]) -> Q {
    *h.iter().min().unwrap()
}

fn canonical(breaks: Vec<Q>, vertices: Vec<Weight>) -> PLPath {
    let mut out_b = vec![breaks[0]];
    let mut out_v = vec![vertices[0].clone()];
    let mut last_vel: Option<Weight> = None;
    for k in 1..breaks.len() {
        let dt = breaks[k] - breaks[k - 1];
        if !dt.is_positive() {
            continue;
        }
        let vel = (&vertices[k] - &vertices[k - 1]).scale(dt.recip());
        if last_vel.as_ref() == Some(&vel) {
            *out_b.last_mut().unwrap() = breaks[k];
            *out_v.last_mut().unwrap() = vertices[k].clone();
        } else {
            out_b.push(breaks[k]);
            out_v.push(vertices[k].clone());
            last_vel = Some(vel);
        }
    }
    PLPath { breaks: out_b, vertices: out_v }
}
