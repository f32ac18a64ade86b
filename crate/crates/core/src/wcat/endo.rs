//! Piecewise-linear endofunctors `λ: [0, inf] -> [0, inf]` of the additive
//! weight object, and metric maps fibered over them.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use super::CostMatrix;
use crate::weight::Weight;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PlError {
    #[error("a piecewise-linear function needs at least one breakpoint")]
    Empty,
    #[error("the first breakpoint must be at 0")]
    Start,
    #[error("breakpoints must be strictly increasing")]
    Order,
    #[error("values must be nonnegative")]
    Negative,
    #[error("composite is not piecewise linear with a single tail")]
    NotRepresentable,
    #[error("map sends {0} outside the target")]
    Map(usize),
}

/// A continuous piecewise-linear function on `[0, inf)`, linear between
/// breakpoints and with slope `tail_slope` after the last one, plus an
/// explicit value at `inf`. A tail slope of `inf` means `λ(s) = inf` beyond
/// the last breakpoint.
#[derive(Clone, PartialEq, Eq)]
pub struct PlFunction {
    points: Vec<(Rational, Rational)>,
    tail_slope: Weight,
    at_infinity: Weight,
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

impl PlFunction {
    pub fn new(points: Vec<(Rational, Rational)>, tail_slope: Weight, at_infinity: Weight) -> Result<Self, PlError> {
        let first = points.first().ok_or(PlError::Empty)?;
        if !first.0.is_zero() {
            return Err(PlError::Start);
        }
        if points.windows(2).any(|p| p[0].0 >= p[1].0) {
            return Err(PlError::Order);
        }
        if points.iter().any(|(_, y)| y.is_negative()) {
            return Err(PlError::Negative);
        }
        let mut f = PlFunction { points, tail_slope, at_infinity };
        f.simplify();
        Ok(f)
    }

    /// `λ̂(s) = c · s` for `0 < c < inf`.
    pub fn linear(c: Rational) -> Result<Self, PlError> {
        let slope = Weight::finite(c).map_err(|_| PlError::Negative)?;
        let at_infinity = if slope.is_zero() { Weight::zero() } else { Weight::infinity() };
        PlFunction::new(alloc::vec![(q(0), q(0))], slope, at_infinity)
    }

    /// `s ↦ a·s + b`, `inf ↦ inf`.
    pub fn affine(a: Rational, b: Rational) -> Result<Self, PlError> {
        let slope = Weight::finite(a).map_err(|_| PlError::Negative)?;
        PlFunction::new(alloc::vec![(q(0), b)], slope, Weight::infinity())
    }

    /// `∞̂`: `0 ↦ 0`, everything else to `inf`.
    pub fn infinity_hat() -> Self {
        PlFunction {
            points: alloc::vec![(q(0), q(0))],
            tail_slope: Weight::infinity(),
            at_infinity: Weight::infinity(),
        }
    }

    /// `0̂`: constant `0` on finite arguments, `inf ↦ at_infinity`.
    pub fn zero_hat(at_infinity: Weight) -> Self {
        PlFunction { points: alloc::vec![(q(0), q(0))], tail_slope: Weight::zero(), at_infinity }
    }

    pub fn identity() -> Self {
        PlFunction::linear(q(1)).expect("slope 1")
    }

    pub fn points(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    pub fn tail_slope(&self) -> &Weight {
        &self.tail_slope
    }

    pub fn at_infinity(&self) -> &Weight {
        &self.at_infinity
    }

    fn last(&self) -> &(Rational, Rational) {
        self.points.last().expect("nonempty")
    }

    /// Drops breakpoints interior to a straight segment.
    fn simplify(&mut self) {
        let finite_tail = self.tail_slope.as_rational().cloned();
        let mut i = 1;
        while i < self.points.len() {
            let (x0, y0) = &self.points[i - 1];
            let (x1, y1) = &self.points[i];
            let left = (y1 - y0) / (x1 - x0);
            let right = match self.points.get(i + 1) {
                Some((x2, y2)) => Some((y2 - y1) / (x2 - x1)),
                None => finite_tail.clone(),
            };
            if right == Some(left) {
                self.points.remove(i);
            } else {
                i += 1;
            }
        }
    }

    /// Value at a finite argument `s >= 0`.
    pub fn eval(&self, s: &Rational) -> Weight {
        let y = match self.points.iter().position(|(x, _)| x > s) {
            Some(k) => {
                let (x0, y0) = &self.points[k - 1];
                let (x1, y1) = &self.points[k];
                y0 + (y1 - y0) * (s - x0) / (x1 - x0)
            }
            None => {
                let (xl, yl) = self.last();
                if s == xl {
                    yl.clone()
                } else {
                    match self.tail_slope.as_rational() {
                        Some(m) => yl + m * (s - xl),
                        None => return Weight::infinity(),
                    }
                }
            }
        };
        Weight::finite(y).expect("nonnegative values")
    }

    pub fn eval_weight(&self, s: &Weight) -> Weight {
        match s.as_rational() {
            Some(r) => self.eval(r),
            None => self.at_infinity.clone(),
        }
    }

    /// Arguments `s` in `[x0, x1]` (or `[x0, inf)` when `x1` is `None`) where
    /// the linear piece through `(x0, y0)` with slope `m` reaches `t`.
    fn preimage(x0: &Rational, y0: &Rational, m: &Rational, x1: Option<&Rational>, t: &Rational) -> Option<Rational> {
        if m.is_zero() {
            return None;
        }
        let s = x0 + (t - y0) / m;
        (s > *x0 && x1.is_none_or(|x1| s < *x1)).then_some(s)
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &PlFunction) -> Result<PlFunction, PlError> {
        let mut xs: Vec<Rational> = inner.points.iter().map(|(x, _)| x.clone()).collect();
        let targets: Vec<&Rational> = self.points.iter().map(|(x, _)| x).collect();
        for (k, (x0, y0)) in inner.points.iter().enumerate() {
            let (m, x1) = match inner.points.get(k + 1) {
                Some((x1, y1)) => ((y1 - y0) / (x1 - x0), Some(x1)),
                None => match inner.tail_slope.as_rational() {
                    Some(m) => (m.clone(), None),
                    None => continue,
                },
            };
            xs.extend(targets.iter().filter_map(|t| Self::preimage(x0, y0, &m, x1, t)));
        }
        xs.sort();
        xs.dedup();
        let values: Vec<Weight> = xs.iter().map(|x| self.eval_weight(&inner.eval(x))).collect();
        // once `self` hits its infinite tail the composite stays infinite
        let finite = values.iter().take_while(|v| v.is_finite()).count();
        let truncated = finite < values.len();
        if finite == 0 || values[finite..].iter().any(Weight::is_finite) {
            return Err(PlError::NotRepresentable);
        }
        let points: Vec<(Rational, Rational)> = xs
            .into_iter()
            .zip(values)
            .take(finite)
            .map(|(x, y)| (x, y.as_rational().expect("finite").clone()))
            .collect();
        let tail_slope = match inner.tail_slope.as_rational() {
            _ if truncated => Weight::infinity(),
            Some(m) if m.is_zero() => Weight::zero(),
            Some(_) => &self.tail_slope * &inner.tail_slope,
            None => {
                let y_last = &points.last().expect("nonempty").1;
                if self.at_infinity.is_infinite() {
                    Weight::infinity()
                } else if self.at_infinity.as_rational() == Some(y_last) {
                    Weight::zero()
                } else {
                    return Err(PlError::NotRepresentable);
                }
            }
        };
        let at_infinity = self.eval_weight(&inner.at_infinity);
        PlFunction::new(points, tail_slope, at_infinity)
    }

    /// Slopes never increase, the tail included.
    fn is_concave(&self) -> bool {
        let mut prev: Option<Rational> = None;
        for p in self.points.windows(2) {
            let m = (&p[1].1 - &p[0].1) / (&p[1].0 - &p[0].0);
            if prev.as_ref().is_some_and(|pm| m > *pm) {
                return false;
            }
            prev = Some(m);
        }
        match self.tail_slope.as_rational() {
            Some(m) => prev.is_none_or(|pm| *m <= pm),
            None => self.points.len() == 1,
        }
    }
}

impl fmt::Debug for PlFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PL[")?;
        for (i, (x, y)) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({x}, {y})")?;
        }
        write!(f, "; tail {}, inf -> {}]", self.tail_slope, self.at_infinity)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subadditivity {
    /// Concave with `λ(0) = 0`.
    Concave,
    /// Checked on the vertices `(b_i, b_j)`, `(b_i, b_k - b_i)` of the
    /// breakpoint arrangement. `λ(s) + λ(t) - λ(s + t)` is linear on each
    /// cell and does not decrease along the unbounded directions, so these
    /// vertices decide it.
    Grid { points: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EndoViolation {
    /// `λ` decreases somewhere; `at` is a breakpoint where it does, or `None`
    /// when the drop is at `inf`.
    NotMonotone { at: Option<Rational> },
    /// `λ(0) > 0`.
    PositiveAtZero(Rational),
    /// `λ(s) + λ(t) < λ(s + t)`.
    NotSubadditive { s: Rational, t: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoReport {
    pub subadditivity: Subadditivity,
    pub violations: Vec<EndoViolation>,
}

impl EndoReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `λ` is a monoidal endofunctor of the additive weight object:
/// increasing, `λ(0) <= 0` and `λ(s) + λ(t) >= λ(s + t)`.
pub fn endofunctor_check(f: &PlFunction) -> EndoReport {
    let mut violations = Vec::new();
    for p in f.points.windows(2) {
        if p[1].1 < p[0].1 {
            violations.push(EndoViolation::NotMonotone { at: Some(p[0].0.clone()) });
        }
    }
    let xl = &f.last().0;
    let sup_finite = if f.tail_slope.is_zero() {
        f.points.iter().map(|(_, y)| y).max().cloned().map(|y| Weight::finite(y).expect("nonnegative"))
    } else {
        Some(Weight::infinity())
    };
    if sup_finite.is_some_and(|s| f.at_infinity < s) {
        violations.push(EndoViolation::NotMonotone { at: None });
    }
    let y0 = &f.points[0].1;
    if !y0.is_zero() {
        violations.push(EndoViolation::PositiveAtZero(y0.clone()));
    }

    if f.is_concave() && y0.is_zero() {
        return EndoReport { subadditivity: Subadditivity::Concave, violations };
    }

    let xs: Vec<&Rational> = f.points.iter().map(|(x, _)| x).collect();
    let mut candidates: Vec<(Rational, Rational)> = Vec::new();
    for (i, bi) in xs.iter().enumerate() {
        for bj in &xs[i..] {
            candidates.push(((*bi).clone(), (*bj).clone()));
        }
        for bk in &xs {
            if bk > bi {
                candidates.push(((*bi).clone(), *bk - *bi));
            }
        }
    }
    // With an infinite tail, two arguments at the last breakpoint sum past it.
    if f.tail_slope.is_infinite() && !xl.is_zero() {
        candidates.push((xl.clone(), xl.clone()));
    }
    let points = candidates.len();
    for (s, t) in candidates {
        if &f.eval(&s) + &f.eval(&t) < f.eval(&(&s + &t)) {
            violations.push(EndoViolation::NotSubadditive { s, t });
        }
    }
    EndoReport { subadditivity: Subadditivity::Grid { points }, violations }
}

/// A map of underlying sets together with a control function `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberedMorphism {
    pub map: Vec<usize>,
    pub lambda: PlFunction,
}

impl FiberedMorphism {
    /// `(g, μ) ∘ (f, λ) = (g f, μ λ)`.
    pub fn then(&self, g: &FiberedMorphism) -> Result<FiberedMorphism, PlError> {
        let map = self.map.iter().map(|&y| g.map.get(y).copied().ok_or(PlError::Map(y))).collect::<Result<_, _>>()?;
        Ok(FiberedMorphism { map, lambda: g.lambda.after(&self.lambda)? })
    }
}

/// Pairs `(x, x')` with `λ(d_X(x, x')) < d_Y(f x, f x')`.
pub fn fibered_check(m: &FiberedMorphism, dx: &CostMatrix, dy: &CostMatrix) -> Result<Vec<(usize, usize)>, PlError> {
    if m.map.len() != dx.len() {
        return Err(PlError::Map(m.map.len()));
    }
    if let Some(&y) = m.map.iter().find(|&&y| y >= dy.len()) {
        return Err(PlError::Map(y));
    }
    let mut out = Vec::new();
    for x in 0..dx.len() {
        for x2 in 0..dx.len() {
            if m.lambda.eval_weight(dx.get(x, x2)) < *dy.get(m.map[x], m.map[x2]) {
                out.push((x, x2));
            }
        }
    }
    Ok(out)
}
