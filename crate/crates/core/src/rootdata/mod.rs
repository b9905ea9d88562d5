//! Root data, weights and the Weyl group.
//!
//! A [`RootDatum`] is a symmetrizable generalized Cartan matrix
//! `A = (⟨α_j, α_i^∨⟩)` together with coordinates for the weight space:
//! the simple roots are vectors in `Q^m` and each simple coroot is a linear
//! form on `Q^m`. Every pairing and reflection in the crate is derived from
//! these two pieces of data.
//!
//! Indices are 0-based in the library API. The command line and the file
//! formats are 1-based.

mod presets;
mod weyl;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::{self, Matrix};
use crate::{Error, Result, Q};

pub use weyl::WeylElement;

/// A point of `P ⊗ Q` in the datum's weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<Q>);

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight(vec![Q::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| Q::from_integer(c)).collect())
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: Q) -> Weight {
        Weight(self.0.iter().map(|x| *x * c).collect())
    }

    /// Integer coordinates, if every coordinate is integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| *a + *b).collect())
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| *a - *b).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += *b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= *b;
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -*a).collect())
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        rhs.scale(Q::from_integer(self))
    }
}

/// An element of the span of the simple roots, in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector(pub Vec<Q>);

impl RootVector {
    pub fn height(&self) -> Q {
        self.0.iter().fold(Q::zero(), |acc, c| acc + *c)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative()) && self.0.iter().any(|c| !c.is_zero())
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|c| !c.is_positive()) && self.0.iter().any(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

/// Unvalidated root datum, as read from a configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct RawRootDatum {
    pub name: String,
    /// `cartan[i][j] = ⟨α_j, α_i^∨⟩`.
    pub cartan: Vec<Vec<i64>>,
    /// `m × n`; column `j` holds the coordinates of `α_j`.
    pub roots: Vec<Vec<Q>>,
    /// `n × m`; row `i` is the linear form `⟨·, α_i^∨⟩`.
    pub pairing: Vec<Vec<Q>>,
    pub symmetrizer: Option<Vec<Q>>,
    pub fundamental_weights: Option<Vec<Weight>>,
}

/// A validated symmetrizable root datum. Immutable once built.
#[derive(Clone, Debug, PartialEq)]
pub struct RootDatum {
    name: String,
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<Weight>,
    coroots: Vec<Vec<Q>>,
    symmetrizer: Vec<Q>,
    /// `n × m` left inverse of the root matrix, for root coordinates.
    root_left_inverse: Matrix,
    fundamental: Option<Vec<Weight>>,
}

impl RawRootDatum {
    pub fn validate(self) -> Result<RootDatum> {
        let n = self.cartan.len();
        if n == 0 {
            return Err(Error::NotGcm("empty Cartan matrix".into()));
        }
        if self.cartan.iter().any(|row| row.len() != n) {
            return Err(Error::NotGcm("Cartan matrix is not square".into()));
        }
        check_gcm(&self.cartan)?;
        let symmetrizer = match self.symmetrizer {
            Some(d) => {
                check_symmetrizer(&self.cartan, &d)?;
                d
            }
            None => find_symmetrizer(&self.cartan)?,
        };

        let m = self.roots.len();
        if m == 0 || self.roots.iter().any(|row| row.len() != n) {
            return Err(Error::PairingInconsistent(format!("roots must be an m x {n} matrix")));
        }
        if self.pairing.len() != n || self.pairing.iter().any(|row| row.len() != m) {
            return Err(Error::PairingInconsistent(format!("pairing must be a {n} x {m} matrix")));
        }
        let product = linalg::mat_mul(&self.pairing, &self.roots);
        for i in 0..n {
            for j in 0..n {
                if product[i][j] != Q::from_integer(self.cartan[i][j]) {
                    return Err(Error::PairingInconsistent(format!(
                        "(C·R)[{}][{}] = {} but a = {}",
                        i + 1,
                        j + 1,
                        product[i][j],
                        self.cartan[i][j]
                    )));
                }
            }
        }
        // (RᵀR)⁻¹Rᵀ is a left inverse exactly when the columns are independent.
        let rt = linalg::transpose(&self.roots);
        let gram = linalg::mat_mul(&rt, &self.roots);
        let gram_inv = linalg::inverse(&gram).ok_or(Error::DependentRoots)?;
        let root_left_inverse = linalg::mat_mul(&gram_inv, &rt);

        if let Some(fw) = &self.fundamental_weights {
            if fw.len() != n || fw.iter().any(|w| w.dim() != m) {
                return Err(Error::PairingInconsistent("fundamental weights have the wrong shape".into()));
            }
        }

        let simple_roots = (0..n).map(|j| Weight((0..m).map(|k| self.roots[k][j]).collect())).collect();
        let datum = RootDatum {
            name: self.name,
            cartan: self.cartan,
            simple_roots,
            coroots: self.pairing,
            symmetrizer,
            root_left_inverse,
            fundamental: self.fundamental_weights,
        };
        if let Some(fw) = &datum.fundamental {
            for (i, w) in fw.iter().enumerate() {
                for j in 0..n {
                    let expected = if i == j { Q::one() } else { Q::zero() };
                    if datum.pairing(w, j) != expected {
                        return Err(Error::PairingInconsistent(format!(
                            "fundamental weight {} pairs wrongly with coroot {}",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        Ok(datum)
    }
}

fn check_gcm(a: &[Vec<i64>]) -> Result<()> {
    let n = a.len();
    for i in 0..n {
        if a[i][i] != 2 {
            return Err(Error::NotGcm(format!("diagonal entry a[{0}][{0}] = {1}", i + 1, a[i][i])));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if a[i][j] > 0 {
                return Err(Error::NotGcm(format!("positive off-diagonal a[{}][{}]", i + 1, j + 1)));
            }
            if (a[i][j] == 0) != (a[j][i] == 0) {
                return Err(Error::NotGcm(format!(
                    "zero pattern: a[{0}][{1}] = {2} but a[{1}][{0}] = {3}",
                    i + 1,
                    j + 1,
                    a[i][j],
                    a[j][i]
                )));
            }
        }
    }
    Ok(())
}

fn check_symmetrizer(a: &[Vec<i64>], d: &[Q]) -> Result<()> {
    let n = a.len();
    if d.len() != n {
        return Err(Error::NotSymmetrizable(format!("symmetrizer has {} entries, rank is {n}", d.len())));
    }
    if d.iter().any(|x| !x.is_positive()) {
        return Err(Error::NotSymmetrizable("symmetrizer entries must be positive".into()));
    }
    for i in 0..n {
        for j in 0..n {
            if d[i] * Q::from_integer(a[i][j]) != d[j] * Q::from_integer(a[j][i]) {
                return Err(Error::NotSymmetrizable(format!("d_{0} a_{0}{1} != d_{1} a_{1}{0}", i + 1, j + 1)));
            }
        }
    }
    Ok(())
}

/// Propagates `d_j = d_i a_ij / a_ji` over each connected component of the
/// Dynkin graph, then scales each component to coprime integers.
fn find_symmetrizer(a: &[Vec<i64>]) -> Result<Vec<Q>> {
    let n = a.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    for root in 0..n {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some(Q::one());
        let mut component = vec![root];
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            let di = d[i].unwrap();
            for j in 0..n {
                if j == i || a[i][j] == 0 || d[j].is_some() {
                    continue;
                }
                d[j] = Some(di * Q::new(a[i][j], a[j][i]));
                component.push(j);
                stack.push(j);
            }
        }
        let lcm = component.iter().fold(1i64, |acc, &k| acc.lcm(d[k].unwrap().denom()));
        let gcd = component.iter().fold(0i64, |acc, &k| acc.gcd(&(d[k].unwrap() * Q::from_integer(lcm)).to_integer()));
        for &k in &component {
            d[k] = Some(d[k].unwrap() * Q::new(lcm, gcd));
        }
    }
    let d: Vec<Q> = d.into_iter().map(Option::unwrap).collect();
    check_symmetrizer(a, &d)?;
    Ok(d)
}

impl RootDatum {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of simple roots.
    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Dimension of the weight coordinate space.
    pub fn dim(&self) -> usize {
        self.simple_roots[0].dim()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `⟨α_j, α_i^∨⟩`.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn symmetrizer(&self) -> &[Q] {
        &self.symmetrizer
    }

    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_roots[i]
    }

    pub fn coroot(&self, i: usize) -> &[Q] {
        &self.coroots[i]
    }

    /// The `m × n` root matrix.
    pub fn root_matrix(&self) -> Vec<Vec<Q>> {
        (0..self.dim()).map(|k| self.simple_roots.iter().map(|r| r.0[k]).collect()).collect()
    }

    pub fn fundamental_weights(&self) -> Option<&[Weight]> {
        self.fundamental.as_deref()
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank() })
        }
    }

    /// `⟨μ, α_i^∨⟩`.
    pub fn pairing(&self, mu: &Weight, i: usize) -> Q {
        self.coroots[i].iter().zip(&mu.0).fold(Q::zero(), |acc, (c, x)| acc + *c * *x)
    }

    pub fn pairing_int(&self, mu: &Weight, i: usize) -> Result<i64> {
        let p = self.pairing(mu, i);
        if p.is_integer() {
            Ok(p.to_integer())
        } else {
            Err(Error::NonIntegralPairing { index: i })
        }
    }

    pub fn is_integral(&self, mu: &Weight) -> bool {
        (0..self.rank()).all(|i| self.pairing(mu, i).is_integer())
    }

    pub fn is_dominant_integral(&self, mu: &Weight) -> bool {
        (0..self.rank()).all(|i| {
            let p = self.pairing(mu, i);
            p.is_integer() && !p.is_negative()
        })
    }

    pub fn require_dominant_integral(&self, mu: &Weight) -> Result<()> {
        if mu.dim() == self.dim() && self.is_dominant_integral(mu) {
            Ok(())
        } else {
            Err(Error::NotDominantIntegral(mu.to_string()))
        }
    }

    /// `s_i μ = μ − ⟨μ, α_i^∨⟩ α_i`.
    pub fn reflect_weight(&self, i: usize, mu: &Weight) -> Weight {
        let p = self.pairing(mu, i);
        mu - &self.simple_roots[i].scale(p)
    }

    /// `Σ c_j α_j` as a weight.
    pub fn weight_of_roots(&self, beta: &RootVector) -> Weight {
        let mut out = Weight::zero(self.dim());
        for (c, alpha) in beta.0.iter().zip(&self.simple_roots) {
            if !c.is_zero() {
                out += &alpha.scale(*c);
            }
        }
        out
    }

    /// Expresses a weight in the simple-root basis, if it lies in their span.
    pub fn root_coords(&self, mu: &Weight) -> Option<RootVector> {
        let coeffs: Vec<Q> = self
            .root_left_inverse
            .iter()
            .map(|row| row.iter().zip(&mu.0).fold(Q::zero(), |acc, (a, x)| acc + *a * *x))
            .collect();
        let beta = RootVector(coeffs);
        (self.weight_of_roots(&beta) == *mu).then_some(beta)
    }

    /// `ht(top − μ)`, when the difference lies in the root span.
    pub fn depth_below(&self, top: &Weight, mu: &Weight) -> Option<Q> {
        self.root_coords(&(top - mu)).map(|b| b.height())
    }

    /// Indices `i` with `⟨μ, α_i^∨⟩ = 0`; generators of the stabilizer of a
    /// dominant `μ`.
    pub fn stabilizer_indices(&self, mu: &Weight) -> BTreeSet<usize> {
        (0..self.rank()).filter(|&i| self.pairing(mu, i).is_zero()).collect()
    }

    /// Renders a root vector as `α1 + 2α2 − α3` (1-based labels).
    pub fn format_roots(&self, beta: &RootVector) -> String {
        let mut out = String::new();
        for (j, c) in beta.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "−" } else { "+" };
            let mag = c.abs();
            let coeff = if mag.is_one() { String::new() } else { format!("{mag}") };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('−');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            out.push_str(&format!("{coeff}α{}", j + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Expresses a weight in the fundamental-weight basis when the datum
    /// carries one and the weight lies in its span.
    pub fn fundamental_coords(&self, mu: &Weight) -> Option<Vec<Q>> {
        let fw = self.fundamental.as_ref()?;
        let coeffs: Vec<Q> = (0..self.rank()).map(|i| self.pairing(mu, i)).collect();
        let mut rebuilt = Weight::zero(self.dim());
        for (c, w) in coeffs.iter().zip(fw) {
            rebuilt += &w.scale(*c);
        }
        (rebuilt == *mu).then_some(coeffs)
    }

    /// Renders a weight as `ω1 + ω2`, falling back to coordinates.
    pub fn format_weight(&self, mu: &Weight) -> String {
        let Some(coeffs) = self.fundamental_coords(mu) else {
            return mu.to_string();
        };
        let mut out = String::new();
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let coeff = if mag.is_one() { String::new() } else { format!("{mag}") };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('−');
                }
            } else {
                out.push_str(if c.is_negative() { " − " } else { " + " });
            }
            out.push_str(&format!("{coeff}ω{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}
