//! Probabilistic (`p = exp(-λ)`) and relative (`x = ln λ`) readings of a
//! weight. These leave the rationals, so they are double precision only and
//! the way back is always flagged inexact.

use crate::weight::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    /// `[0, 1]`, with `p <= q` as arrows.
    Probabilistic,
    /// `[-inf, inf]`, with `x >= y` as arrows.
    Relative,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FloatWeight {
    pub value: f64,
    pub scale: Scale,
}

/// A double-precision stand-in for a [`Weight`]; `exact` is always `false`
/// when it comes out of [`transform_back`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ApproxWeight {
    pub value: f64,
    pub exact: bool,
}

pub fn to_probabilistic(w: &Weight) -> FloatWeight {
    let value = if w.is_infinite() { 0.0 } else { libm::exp(-w.to_f64()) };
    FloatWeight { value, scale: Scale::Probabilistic }
}

pub fn to_relative(w: &Weight) -> FloatWeight {
    let value = if w.is_infinite() {
        f64::INFINITY
    } else if w.is_zero() {
        f64::NEG_INFINITY
    } else {
        libm::log(w.to_f64())
    };
    FloatWeight { value, scale: Scale::Relative }
}

pub fn transform(w: &Weight, scale: Scale) -> FloatWeight {
    match scale {
        Scale::Probabilistic => to_probabilistic(w),
        Scale::Relative => to_relative(w),
    }
}

/// `λ = -ln p` or `λ = exp x`. Out-of-range probabilistic inputs are clamped
/// to `[0, 1]`; NaN stays NaN.
pub fn transform_back(f: FloatWeight) -> ApproxWeight {
    let value = match f.scale {
        Scale::Probabilistic => {
            let p = f.value.clamp(0.0, 1.0);
            if p == 0.0 {
                f64::INFINITY
            } else {
                // -ln(1) is -0.0; weights have no sign.
                (-libm::log(p)).max(0.0)
            }
        }
        Scale::Relative => libm::exp(f.value),
    };
    ApproxWeight { value, exact: false }
}

/// Internal hom of the probabilistic scale, `1 ∧ r/q`.
pub fn prob_hom(q: f64, r: f64) -> f64 {
    if q == 0.0 {
        1.0
    } else {
        (r / q).min(1.0)
    }
}
