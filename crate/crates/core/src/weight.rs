//! Exact extended nonnegative rationals, the weight object `[0, inf]`.
//!
//! A [`Weight`] is either a finite nonnegative rational in lowest terms or
//! the distinguished value infinity. Two tensor products live on the same
//! ordered set:
//!
//! * the additive one, `+`, with internal hom [`hom_plus`] (truncated
//!   subtraction, `inf - inf = 0`);
//! * the multiplicative one, `*`, with the convention `0 * inf = inf` and
//!   internal hom [`hom_dot`] (division, `0/0 = inf/inf = 0`).
//!
//! The involution [`Weight::inv`] swaps `0` and `inf` and transports them into
//! the harmonic sum and the [`Weight::bullet`] product (`0 • inf = 0`).
//!
//! All orderings here are the natural numeric ones. The category of weights
//! has an arrow `a -> b` exactly when `a >= b`, so "terminal" is `0` and
//! "initial" is `inf`.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::iter::{Product, Sum};
use core::ops::{Add, Mul};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Finite(Rational),
    Infinite,
}

/// An element of `[0, inf]` with exact arithmetic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Weight(Repr);

/// Which lattice bound to take in [`lattice`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Sup,
    Inf,
}

/// One of the two closed monoidal structures on the weight object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Structure {
    /// Tensor `+`, unit `0`, hom [`hom_plus`].
    Additive,
    /// Tensor `·`, unit `1`, hom [`hom_dot`].
    Multiplicative,
}

impl Structure {
    pub fn tensor(self, a: &Weight, b: &Weight) -> Weight {
        match self {
            Structure::Additive => a + b,
            Structure::Multiplicative => a * b,
        }
    }

    pub fn hom(self, a: &Weight, b: &Weight) -> Weight {
        match self {
            Structure::Additive => hom_plus(a, b),
            Structure::Multiplicative => hom_dot(a, b),
        }
    }

    pub fn unit(self) -> Weight {
        match self {
            Structure::Additive => Weight::zero(),
            Structure::Multiplicative => Weight::one(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WeightError {
    #[error("weights are nonnegative, got {0}")]
    Negative(Rational),
    #[error("invalid weight literal `{0}`")]
    Literal(String),
}

impl Weight {
    pub fn zero() -> Self {
        Weight(Repr::Finite(Rational::zero()))
    }

    pub fn one() -> Self {
        Weight(Repr::Finite(Rational::one()))
    }

    pub fn infinity() -> Self {
        Weight(Repr::Infinite)
    }

    pub fn from_int(n: u64) -> Self {
        Weight(Repr::Finite(Rational::from_integer(BigInt::from(n))))
    }

    /// `num / den`; panics on a zero denominator.
    pub fn ratio(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        Weight(Repr::Finite(Rational::new(BigInt::from(num), BigInt::from(den))))
    }

    /// Wraps a finite rational, rejecting negative values.
    pub fn finite(r: Rational) -> Result<Self, WeightError> {
        if r.is_negative() {
            Err(WeightError::Negative(r))
        } else {
            Ok(Weight(Repr::Finite(r)))
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self.0, Repr::Infinite)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_infinite()
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Finite(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Finite(r) if r.is_one())
    }

    /// The finite value, or `None` for infinity.
    pub fn as_rational(&self) -> Option<&Rational> {
        match &self.0 {
            Repr::Finite(r) => Some(r),
            Repr::Infinite => None,
        }
    }

    /// Double-precision rendering; infinity maps to `f64::INFINITY`.
    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Finite(r) => r.to_f64().unwrap_or(f64::INFINITY),
            Repr::Infinite => f64::INFINITY,
        }
    }

    /// Reciprocal with `0 <-> inf`.
    pub fn inv(&self) -> Self {
        match &self.0 {
            Repr::Infinite => Weight::zero(),
            Repr::Finite(r) if r.is_zero() => Weight::infinity(),
            Repr::Finite(r) => Weight(Repr::Finite(r.recip())),
        }
    }

    /// Harmonic sum `(a⁻¹ + b⁻¹)⁻¹`, the parallel composition of resistances.
    pub fn harmonic(&self, other: &Weight) -> Self {
        (&self.inv() + &other.inv()).inv()
    }

    /// The dual product `(a⁻¹ · b⁻¹)⁻¹`; equals `a · b` except `0 • inf = 0`.
    pub fn bullet(&self, other: &Weight) -> Self {
        (&self.inv() * &other.inv()).inv()
    }

    /// `max`, the cartesian product in the category of weights.
    pub fn join(&self, other: &Weight) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// `min`, the coproduct in the category of weights.
    pub fn meet(&self, other: &Weight) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// The fixed test grid `{0, 1/3, 1/2, 1, 3/2, 2, 7, inf}`.
    pub fn grid() -> Vec<Weight> {
        alloc::vec![
            Weight::zero(),
            Weight::ratio(1, 3),
            Weight::ratio(1, 2),
            Weight::one(),
            Weight::ratio(3, 2),
            Weight::from_int(2),
            Weight::from_int(7),
            Weight::infinity(),
        ]
    }
}

/// Truncated subtraction `0 ∨ (nu - mu)`, the internal hom of the additive
/// structure: `lambda + mu >= nu  <=>  lambda >= hom_plus(mu, nu)`.
/// Conventions: `inf - inf = 0`, `inf - finite = inf`, `finite - inf = 0`.
pub fn hom_plus(mu: &Weight, nu: &Weight) -> Weight {
    match (&mu.0, &nu.0) {
        (_, Repr::Finite(_)) if mu >= nu => Weight::zero(),
        (Repr::Infinite, _) => Weight::zero(),
        (Repr::Finite(_), Repr::Infinite) => Weight::infinity(),
        (Repr::Finite(m), Repr::Finite(n)) => Weight(Repr::Finite(n - m)),
    }
}

/// Division `nu / mu`, the internal hom of the multiplicative structure:
/// `lambda · mu >= nu  <=>  lambda >= hom_dot(mu, nu)`.
/// Conventions: `nu / inf = 0` for all `nu`, `nu / 0 = inf` for `nu > 0`,
/// `0 / 0 = 0`.
pub fn hom_dot(mu: &Weight, nu: &Weight) -> Weight {
    match (&mu.0, &nu.0) {
        (Repr::Infinite, _) => Weight::zero(),
        (Repr::Finite(_), _) if nu.is_zero() => Weight::zero(),
        (Repr::Finite(m), _) if m.is_zero() => Weight::infinity(),
        (Repr::Finite(_), Repr::Infinite) => Weight::infinity(),
        (Repr::Finite(m), Repr::Finite(n)) => Weight(Repr::Finite(n / m)),
    }
}

/// Supremum of a family; the empty supremum is `0` (terminal object).
pub fn sup<'a, I: IntoIterator<Item = &'a Weight>>(items: I) -> Weight {
    items.into_iter().fold(Weight::zero(), |acc, w| acc.join(w))
}

/// Infimum of a family; the empty infimum is `inf` (initial object).
pub fn inf<'a, I: IntoIterator<Item = &'a Weight>>(items: I) -> Weight {
    items.into_iter().fold(Weight::infinity(), |acc, w| acc.meet(w))
}

pub fn lattice(items: &[Weight], bound: Bound) -> Weight {
    match bound {
        Bound::Sup => sup(items),
        Bound::Inf => inf(items),
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Infinite, Repr::Infinite) => Ordering::Equal,
            (Repr::Infinite, _) => Ordering::Greater,
            (_, Repr::Infinite) => Ordering::Less,
            (Repr::Finite(a), Repr::Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        match (&self.0, &rhs.0) {
            (Repr::Finite(a), Repr::Finite(b)) => Weight(Repr::Finite(a + b)),
            _ => Weight::infinity(),
        }
    }
}

impl Add for Weight {
    type Output = Weight;

    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Mul for &Weight {
    type Output = Weight;

    /// `0 · inf = inf`: tensoring with any weight preserves the initial object.
    fn mul(self, rhs: &Weight) -> Weight {
        match (&self.0, &rhs.0) {
            (Repr::Finite(a), Repr::Finite(b)) => Weight(Repr::Finite(a * b)),
            _ => Weight::infinity(),
        }
    }
}

impl Mul for Weight {
    type Output = Weight;

    fn mul(self, rhs: Weight) -> Weight {
        &self * &rhs
    }
}

impl Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::zero(), |a, b| &a + &b)
    }
}

impl<'a> Sum<&'a Weight> for Weight {
    fn sum<I: Iterator<Item = &'a Weight>>(iter: I) -> Weight {
        iter.fold(Weight::zero(), |a, b| &a + b)
    }
}

impl Product for Weight {
    fn product<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::one(), |a, b| &a * &b)
    }
}

impl From<u64> for Weight {
    fn from(n: u64) -> Self {
        Weight::from_int(n)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Infinite => f.write_str("inf"),
            Repr::Finite(r) => fmt_rational(r, f),
        }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `n` for integers, `n/d` otherwise.
pub(crate) fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

const MAX_FRACTION_DIGITS: usize = 9;

/// Parses `<int>`, `<int>/<int>` or a decimal with at most nine fractional
/// digits, with an optional leading `-`, into an exact rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let s = text.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let value = if let Some((n, d)) = body.split_once('/') {
        if !digits(n) || !digits(d) {
            return None;
        }
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Rational::new(n.parse().ok()?, d)
    } else if let Some((int, frac)) = body.split_once('.') {
        let part_ok = |t: &str| t.is_empty() || digits(t);
        if !part_ok(int) || !part_ok(frac) || int.is_empty() && frac.is_empty() || frac.len() > MAX_FRACTION_DIGITS {
            return None;
        }
        let mut all = String::from(int);
        all.push_str(frac);
        let num: BigInt = if all.is_empty() { BigInt::zero() } else { all.parse().ok()? };
        let den = num_traits::pow(BigInt::from(10u32), frac.len());
        Rational::new(num, den)
    } else if digits(body) {
        Rational::from_integer(body.parse().ok()?)
    } else {
        return None;
    };
    Some(if neg { -value } else { value })
}

impl FromStr for Weight {
    type Err = WeightError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let s = text.trim();
        if s == "inf" {
            return Ok(Weight::infinity());
        }
        let r = parse_rational(s).ok_or_else(|| WeightError::Literal(String::from(s)))?;
        Weight::finite(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(&w("1/2") + &w("1/3"), w("5/6"));
        for l in Weight::grid() {
            assert_eq!(&Weight::zero() + &l, l);
        }
        assert_eq!(&w("0") + &w("inf"), w("inf"));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&w("2/3") * &w("3/4"), w("1/2"));
        for l in Weight::grid() {
            assert_eq!(&Weight::one() * &l, l);
        }
        assert_eq!(&w("0") * &w("inf"), w("inf"));
        assert_eq!(&w("inf") * &w("0"), w("inf"));
    }

    #[test]
    fn involution_examples() {
        assert_eq!(w("2").inv(), w("1/2"));
        assert_eq!(w("0").inv(), w("inf"));
        assert_eq!(w("inf").inv(), w("0"));
        for l in Weight::grid() {
            assert_eq!(l.inv().inv(), l);
        }
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(w("2").harmonic(&w("2")), w("1"));
        for m in Weight::grid() {
            assert_eq!(w("0").harmonic(&m), w("0"));
            assert_eq!(w("inf").harmonic(&m), m);
        }
    }

    #[test]
    fn bullet_examples() {
        assert_eq!(w("0").bullet(&w("inf")), w("0"));
        assert_eq!(w("inf").bullet(&w("0")), w("0"));
        assert_eq!(w("2").bullet(&w("3")), w("6"));
        for m in Weight::grid() {
            assert_eq!(w("1").bullet(&m), m);
        }
    }

    #[test]
    fn hom_plus_examples() {
        assert_eq!(hom_plus(&w("3"), &w("5")), w("2"));
        assert_eq!(hom_plus(&w("5"), &w("3")), w("0"));
        assert_eq!(hom_plus(&w("inf"), &w("inf")), w("0"));
        assert_eq!(hom_plus(&w("2"), &w("inf")), w("inf"));
        assert_eq!(hom_plus(&w("inf"), &w("2")), w("0"));
    }

    #[test]
    fn hom_dot_examples() {
        assert_eq!(hom_dot(&w("0"), &w("0")), w("0"));
        assert_eq!(hom_dot(&w("inf"), &w("inf")), w("0"));
        assert_eq!(hom_dot(&w("0"), &w("5")), w("inf"));
        assert_eq!(hom_dot(&w("4"), &w("2")), w("1/2"));
        assert_eq!(hom_dot(&w("0"), &w("inf")), w("inf"));
        assert_eq!(hom_dot(&w("inf"), &w("3")), w("0"));
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(lattice(&[], Bound::Sup), w("0"));
        assert_eq!(lattice(&[], Bound::Inf), w("inf"));
        assert_eq!(lattice(&[w("1/2"), w("3"), w("2")], Bound::Sup), w("3"));
        assert_eq!(lattice(&[w("1/2"), w("3"), w("2")], Bound::Inf), w("1/2"));
    }

    #[test]
    fn literals_round_trip_and_reject() {
        assert_eq!(w("0.25"), w("1/4"));
        assert_eq!(w("1.000000001"), w("1000000001/1000000000"));
        assert_eq!(w("6/4").to_string(), "3/2");
        assert_eq!(w("4/2").to_string(), "2");
        assert_eq!(w(" inf ").to_string(), "inf");
        assert_eq!(w(".5"), w("1/2"));
        assert_eq!(w("3."), w("3"));
        for bad in ["", "-1", "1/0", "abc", "1.0000000001", "1/-2", "+3", "1..2", "."] {
            assert!(bad.parse::<Weight>().is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn total_order_puts_infinity_on_top() {
        let g = Weight::grid();
        for pair in g.windows(2) {
            assert!(pair[0] < pair[1]);
        }
        assert_eq!(g.iter().max(), Some(&Weight::infinity()));
    }
}
