//! Built-in root data.
//!
//! Finite types use fundamental-weight coordinates: `m = n`, `α_j` is the
//! `j`-th column of the Cartan matrix and the coroot pairing is the identity.
//! `GLn` uses the standard basis of `Z^n`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{RawRootDatum, RootDatum, Weight};
use crate::{Error, Result, Q};

fn q(x: i64) -> Q {
    Q::from_integer(x)
}

fn identity(n: usize) -> Vec<Vec<Q>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect()
}

fn cartan_type(letter: char, n: usize) -> Option<Vec<Vec<i64>>> {
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>, len: usize| {
        for i in 0..len.saturating_sub(1) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    match letter {
        'A' if n >= 1 => chain(&mut a, n),
        'B' if n >= 2 => {
            chain(&mut a, n);
            a[n - 1][n - 2] = -2;
        }
        'C' if n >= 2 => {
            chain(&mut a, n);
            a[n - 2][n - 1] = -2;
        }
        'D' if n >= 3 => {
            chain(&mut a, n - 1);
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
        'G' if n == 2 => {
            a[0][1] = -1;
            a[1][0] = -3;
        }
        _ => return None,
    }
    Some(a)
}

fn finite(name: &str, a: Vec<Vec<i64>>) -> Result<RootDatum> {
    let n = a.len();
    let roots = (0..n).map(|k| (0..n).map(|j| q(a[k][j])).collect()).collect();
    let fundamental = (0..n)
        .map(|i| Weight((0..n).map(|k| if i == k { Q::one() } else { Q::zero() }).collect()))
        .collect();
    RawRootDatum {
        name: name.into(),
        cartan: a,
        roots,
        pairing: identity(n),
        symmetrizer: None,
        fundamental_weights: Some(fundamental),
    }
    .validate()
}

fn general_linear(n: usize) -> Result<RootDatum> {
    let rank = n - 1;
    let a = cartan_type('A', rank).expect("rank at least 1");
    // column j is e_j - e_{j+1}
    let mut roots = vec![vec![Q::zero(); rank]; n];
    for j in 0..rank {
        roots[j][j] = Q::one();
        roots[j + 1][j] = -Q::one();
    }
    let pairing = (0..rank).map(|i| (0..n).map(|k| roots[k][i]).collect()).collect();
    let fundamental = (0..rank)
        .map(|i| Weight((0..n).map(|k| if k <= i { Q::one() } else { Q::zero() }).collect()))
        .collect();
    RawRootDatum {
        name: format!("GL{n}"),
        cartan: a,
        roots,
        pairing,
        symmetrizer: None,
        fundamental_weights: Some(fundamental),
    }
    .validate()
}

/// Untwisted affine `A_1^{(1)}` in coordinates `(Λ_0, Λ_1, δ)`.
fn affine_a1() -> Result<RootDatum> {
    let roots = vec![vec![q(2), q(-2)], vec![q(-2), q(2)], vec![q(1), q(0)]];
    let pairing = vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]];
    let fundamental = vec![Weight::from_ints(&[1, 0, 0]), Weight::from_ints(&[0, 1, 0])];
    RawRootDatum {
        name: "A1_aff".into(),
        cartan: vec![vec![2, -2], vec![-2, 2]],
        roots,
        pairing,
        symmetrizer: None,
        fundamental_weights: Some(fundamental),
    }
    .validate()
}

impl RootDatum {
    /// Looks up a built-in datum: `A<n>`, `B<n>`, `C<n>`, `D<n>`, `G2`,
    /// `GL<n>` or `A1_aff`.
    pub fn preset(name: &str) -> Result<RootDatum> {
        let unknown = || Error::PairingInconsistent(format!("unknown preset {name:?}"));
        if name == "A1_aff" || name == "A1~" {
            return affine_a1();
        }
        if let Some(rest) = name.strip_prefix("GL") {
            let n: usize = rest.parse().map_err(|_| unknown())?;
            if n < 2 {
                return Err(unknown());
            }
            return general_linear(n);
        }
        let mut chars = name.chars();
        let letter = chars.next().ok_or_else(unknown)?;
        let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
        let a = cartan_type(letter, n).ok_or_else(unknown)?;
        finite(name, a)
    }

    /// Names accepted by [`RootDatum::preset`], as a human readable list.
    pub fn preset_names() -> String {
        "A<n>, B<n>, C<n>, D<n>, G2, GL<n>, A1_aff".into()
    }
}
