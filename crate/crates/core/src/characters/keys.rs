use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::{demazure_word_op, Character};
use crate::demazure::{criterion_finite, decompose_tensor, Target};
use crate::linalg::solve;
use crate::rootdata::{RootDatum, Weight, WeylElement};
use crate::{Error, Result, Q};

/// A `GL_n` weight in standard coordinates, not necessarily dominant.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(pub Vec<i64>);

impl Composition {
    pub fn weight(&self) -> Weight {
        Weight::from_ints(&self.0)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `(λ_ν, u)` with `λ_ν` the decreasing rearrangement and `u λ_ν = ν`,
    /// `u` minimal.
    pub fn dominant(&self, d: &RootDatum) -> Result<(Weight, WeylElement)> {
        require_gl(d, self.0.len())?;
        let mut x = self.0.clone();
        let mut letters = Vec::new();
        let mut swapped = true;
        while swapped {
            swapped = false;
            for i in 0..x.len() - 1 {
                if x[i] < x[i + 1] {
                    x.swap(i, i + 1);
                    letters.push(i);
                    swapped = true;
                }
            }
        }
        // s_{i_k} ⋯ s_{i_1} ν = λ, so u = s_{i_1} ⋯ s_{i_k}
        let lam = Weight::from_ints(&x);
        let u = WeylElement::from_word(d, &letters)?.min_coset_rep(d, &lam)?;
        Ok((lam, u))
    }

    fn of_weight(mu: &Weight) -> Option<Composition> {
        mu.to_ints().map(Composition)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Checks the datum acts on `Z^n` by permutations: `α_i = α_i^∨ = e_i - e_{i+1}`.
fn require_gl(d: &RootDatum, n: usize) -> Result<()> {
    let ok = d.dim() == n
        && d.rank() + 1 == n
        && (0..d.rank()).all(|i| {
            let mut unit = vec![Q::zero(); n];
            unit[i] = Q::one();
            unit[i + 1] = -Q::one();
            d.simple_root(i).coords() == unit.as_slice() && d.coroot(i) == unit.as_slice()
        });
    if ok {
        Ok(())
    } else {
        Err(Error::UnsupportedDatum(format!("{} is not a GL_n datum in standard coordinates", d.name())))
    }
}

/// `κ_ν = Δ_{u_ν} e^{λ_ν}`.
pub fn key_polynomial(d: &RootDatum, nu: &Composition) -> Result<Character> {
    let (lam, u) = nu.dominant(d)?;
    demazure_word_op(d, u.reduced_word(), &Character::monomial(lam))
}

fn compositions(n: usize, degree: i64) -> Vec<Composition> {
    fn go(n: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Composition>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(Composition(cur.clone()));
            cur.pop();
            return;
        }
        for a in 0..=left {
            cur.push(a);
            go(n, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 && degree >= 0 {
        go(n, degree, &mut Vec::new(), &mut out);
    }
    out
}

/// Writes `f` as `Σ c_ν κ_ν` by solving the linear system over all
/// compositions of each degree present (at most `max_degree`). The answer
/// is checked to be integral and to reproduce `f`.
pub fn key_expand(d: &RootDatum, f: &Character, max_degree: i64) -> Result<BTreeMap<Composition, i64>> {
    let n = d.dim();
    require_gl(d, n)?;
    let mut by_degree: BTreeMap<i64, BTreeMap<Composition, i64>> = BTreeMap::new();
    for (mu, k) in f.terms() {
        let c = Composition::of_weight(mu)
            .filter(|c| c.0.iter().all(|&x| x >= 0) && c.degree() <= max_degree)
            .ok_or_else(|| Error::NotInSpan(format!("monomial e^{mu}")))?;
        by_degree.entry(c.degree()).or_default().insert(c, k);
    }
    let mut out = BTreeMap::new();
    for (deg, part) in by_degree {
        let basis = compositions(n, deg);
        let index: BTreeMap<&Composition, usize> = basis.iter().enumerate().map(|(k, c)| (c, k)).collect();
        let mut m = vec![vec![Q::zero(); basis.len()]; basis.len()];
        for (col, nu) in basis.iter().enumerate() {
            for (mu, k) in key_polynomial(d, nu)?.terms() {
                let row = Composition::of_weight(mu).and_then(|c| index.get(&c).copied()).ok_or_else(|| {
                    Error::VerificationMismatch(format!("κ_{nu} has a term e^{mu} outside its degree"))
                })?;
                m[row][col] = Q::from(k);
            }
        }
        let rhs: Vec<Q> = basis.iter().map(|c| Q::from(part.get(c).copied().unwrap_or(0))).collect();
        let sol = solve(&m, &rhs).ok_or_else(|| Error::VerificationMismatch(format!("key basis singular in degree {deg}")))?;
        for (nu, c) in basis.iter().zip(sol) {
            if !c.is_integer() {
                return Err(Error::NotInSpan(format!("coefficient {c} of κ_{nu}")));
            }
            if !c.is_zero() {
                out.insert(nu.clone(), c.to_integer());
            }
        }
    }
    let back = out.iter().try_fold(Character::zero(), |acc, (nu, c)| {
        Ok::<_, Error>(&acc + &scaled(&key_polynomial(d, nu)?, *c))
    })?;
    if back.first_difference(f).is_some() {
        return Err(Error::NotInSpan("expansion does not reproduce the character".into()));
    }
    Ok(out)
}

fn scaled(f: &Character, c: i64) -> Character {
    Character::from_terms(f.terms().map(|(mu, k)| (mu.clone(), k * c)))
}

/// The product `κ_{vλ} κ_{wμ}` expanded two ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeyVerdict {
    /// The factors were swapped to meet the criterion.
    pub swapped: bool,
    pub product: Character,
    /// One `κ_{uν}` for each Demazure component `B_u(ν)`.
    pub from_decomposition: BTreeMap<Composition, i64>,
    /// Exact solve in the key basis.
    pub from_solve: BTreeMap<Composition, i64>,
}

impl KeyVerdict {
    pub fn agree(&self) -> bool {
        self.from_decomposition == self.from_solve
    }

    pub fn nonnegative(&self) -> bool {
        self.from_solve.values().all(|&c| c >= 0) && self.from_decomposition.values().all(|&c| c >= 0)
    }

    pub fn holds(&self) -> bool {
        self.agree() && self.nonnegative()
    }
}

/// Expands `κ_{vλ} κ_{wμ}` through the Demazure decomposition of
/// `B_v(λ) ⊗ B_w(μ)` and by a linear solve. When the criterion fails but
/// holds with the factors exchanged, `B_w(μ) ⊗ B_v(λ)` is decomposed instead.
pub fn verify_key_positivity(
    d: &RootDatum,
    v: &WeylElement,
    lambda: &Weight,
    w: &WeylElement,
    mu: &Weight,
) -> Result<KeyVerdict> {
    let direct = criterion_finite(d, v, lambda, w, mu)?;
    let swapped = !direct.holds && criterion_finite(d, w, mu, v, lambda)?.holds;
    let report = if swapped {
        decompose_tensor(d, w, mu, v, &Target::Finite(lambda.clone()), 0)?
    } else {
        direct.require()?;
        decompose_tensor(d, v, lambda, w, &Target::Finite(mu.clone()), 0)?
    };
    let mut from_decomposition = BTreeMap::new();
    for c in &report.components {
        let nu = Composition::of_weight(&c.u_min.act_on_weight(d, &c.nu))
            .ok_or_else(|| Error::NotInSpan(format!("component weight {}", c.nu)))?;
        *from_decomposition.entry(nu).or_insert(0) += 1;
    }
    let left = Composition::of_weight(&v.act_on_weight(d, lambda)).ok_or(Error::NonIntegralPairing { index: 0 })?;
    let right = Composition::of_weight(&w.act_on_weight(d, mu)).ok_or(Error::NonIntegralPairing { index: 0 })?;
    let product = &key_polynomial(d, &left)? * &key_polynomial(d, &right)?;
    let from_solve = key_expand(d, &product, left.degree() + right.degree())?;
    Ok(KeyVerdict { swapped, product, from_decomposition, from_solve })
}
