//! Truth values `{0, 1}` and the embedding `M: 2 -> w` with its two adjoints
//! `P ⊣ M ⊣ Q`.

use crate::weight::Weight;

/// The pair `(P(λ), Q(λ))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruthPair {
    /// `P(λ) = 1` iff `λ` is finite.
    pub p_value: bool,
    /// `Q(λ) = 1` iff `λ = 0`.
    pub q_value: bool,
}

/// `M(0) = inf`, `M(1) = 0`.
pub fn embed(b: bool) -> Weight {
    if b {
        Weight::zero()
    } else {
        Weight::infinity()
    }
}

pub fn left_adjoint(w: &Weight) -> bool {
    w.is_finite()
}

pub fn right_adjoint(w: &Weight) -> bool {
    w.is_zero()
}

pub fn classify(w: &Weight) -> TruthPair {
    TruthPair { p_value: left_adjoint(w), q_value: right_adjoint(w) }
}
