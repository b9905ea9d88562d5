//! Crystals of symmetrizable Kac-Moody algebras at desk scale.
//!
//! The crate computes highest weight crystals `B(λ)` (through a piecewise
//! linear path model), the crystal `B(∞)` (through its embedding into a
//! semi-infinite tensor product of elementary crystals), Demazure subsets
//! `B_w(λ)` and `B_w(∞)`, and tensor products of these. On top of the
//! crystal machinery it decides when `B_v(λ) ⊗ B_w(μ)` splits into Demazure
//! crystals, recovers the pieces, and checks the matching identities between
//! Demazure characters and key polynomials.
//!
//! Everything is exact: weights live in `Q^m`, Weyl group elements carry
//! their integer action on the root lattice, and no floating point is used.
//!
//! The crate is `no_std` and only needs `alloc`. All collections are
//! ordered (`BTreeMap`/`BTreeSet`), so every enumeration is deterministic.

#![no_std]

extern crate alloc;

pub mod binfinity;
pub mod characters;
pub mod crystal;
pub mod demazure;
mod error;
pub(crate) mod linalg;
pub mod pathmodel;
pub mod rootdata;

pub use error::{Error, Result};

/// Exact rational scalar used for every coordinate in the crate.
pub type Q = num_rational::Ratio<i64>;

pub use crystal::{CrystalSet, Element, Window};
pub use rootdata::{RootDatum, RootVector, Weight, WeylElement};
