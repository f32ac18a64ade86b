//! Exact algebra of weights on `[0, inf]`.
//!
//! The weight object carries two symmetric monoidal closed structures: the
//! additive one (cost, Lawvere metrics) and the multiplicative one (Lipschitz
//! constants), the latter *-autonomous with dualising object `1`. On top of
//! that this crate builds:
//!
//! * [`weight`], [`truth`], [`transform`]: the weight object itself;
//! * [`linlog`]: a linear-logic evaluator for the multiplicative structure;
//! * [`wset`]: finite weighted sets, both tensor products and internal homs;
//! * [`wab`]: free weighted abelian groups, tensor and symmetrized weights;
//! * [`wcat`]: weighted categories, best-cost closure, monoidal endofunctors;
//! * [`impedance`]: the projective line over Gaussian rationals and
//!   series-parallel impedance networks.
//!
//! Everything is exact and allocation-only; the crate is `no_std`.

#![no_std]

extern crate alloc;

pub mod impedance;
pub mod linlog;
pub mod transform;
pub mod truth;
pub mod wab;
pub mod wcat;
pub mod weight;
pub mod wset;

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

pub use weight::{hom_dot, hom_plus, Structure, Weight};
