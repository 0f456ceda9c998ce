//! Exact computation of P-harmonic invariant forms on compact quotients of
//! Lie groups.
//!
//! Given a real Lie algebra presented dually by the differentials of an
//! orthonormal coframe, together with a compatible almost complex structure
//! `J` (making `(J, ω, g)` a compatible triple with `g` the orthonormal
//! metric and `ω` derived), this crate materializes the operators `d`, `d^c`,
//! `d^Λ`, their adjoints, both stars, and the Lefschetz pair as exact
//! matrices over the Gaussian rationals, then computes the eight spaces of
//! `P`-harmonic invariant forms
//!
//! ```text
//! P ∈ { d+d^c, d^c+d, dd^c, d^c d, d+d^Λ, d^Λ+d, dd^Λ, d^Λ d }
//! ```
//!
//! as joint kernels, along with the structural identities and dimension
//! tables that tie them together. Everything is exact: there is no floating
//! point in the crate, so every dimension, inclusion, and identity is
//! decided.

pub mod algebra;
pub mod catalog;
pub mod diamond;
pub mod form;
pub mod harmonic;
pub mod matrix;
pub mod model;
pub mod operator;
pub mod scalar;
pub mod triple;

pub use algebra::CoframeAlgebra;
pub use catalog::{CatalogEntry, Expectation, Provenance, RegressionVerdict};
pub use diamond::{Diamond, DiamondError, TopologicalData};
pub use form::{Form, MultiIndex};
pub use matrix::Matrix;
pub use scalar::Scalar;
pub use triple::{Bidegree, CompatibleTriple, StructurePredicates, TripleError, WeilReport};
