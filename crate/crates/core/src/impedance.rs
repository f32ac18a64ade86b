//! The projective line `P¹(Q[i])` as an involutive cubical semiring, and
//! series-parallel RLC networks at a fixed angular frequency.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::Rational;

/// A Gaussian rational `re + im i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussQ {
    pub re: Rational,
    pub im: Rational,
}

impl GaussQ {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussQ { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussQ { re, im: Rational::zero() }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussQ::new(Rational::from_integer(re.into()), Rational::from_integer(im.into()))
    }

    pub fn zero() -> Self {
        GaussQ::from_ints(0, 0)
    }

    pub fn one() -> Self {
        GaussQ::from_ints(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussQ::new(self.re.clone(), -&self.im)
    }

    /// `|z|²`.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// `1 / z`, `None` at zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(GaussQ::new(&self.re / &n, -&self.im / &n))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }
}

impl Add for &GaussQ {
    type Output = GaussQ;

    fn add(self, rhs: &GaussQ) -> GaussQ {
        GaussQ::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussQ {
    type Output = GaussQ;

    fn sub(self, rhs: &GaussQ) -> GaussQ {
        GaussQ::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussQ {
    type Output = GaussQ;

    fn mul(self, rhs: &GaussQ) -> GaussQ {
        GaussQ::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
}

impl Neg for &GaussQ {
    type Output = GaussQ;

    fn neg(self) -> GaussQ {
        GaussQ::new(-&self.re, -&self.im)
    }
}

/// `re + im i` with each part written as `n` or `n/d`, e.g. `1 - 1 i`.
impl fmt::Display for GaussQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{} {} {} i", self.re, sign, self.im.abs())
    }
}

/// A point of `P¹(Q[i]) = Q[i] ∪ {inf}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ProjValue {
    Finite(GaussQ),
    Infinity,
}

impl ProjValue {
    pub fn zero() -> Self {
        ProjValue::Finite(GaussQ::zero())
    }

    pub fn one() -> Self {
        ProjValue::Finite(GaussQ::one())
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        ProjValue::Finite(GaussQ::from_ints(re, im))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ProjValue::Finite(z) if z.is_zero())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ProjValue::Infinity)
    }

    pub fn finite(&self) -> Option<&GaussQ> {
        match self {
            ProjValue::Finite(z) => Some(z),
            ProjValue::Infinity => None,
        }
    }

    /// Real part `>= 0`, or `inf`.
    pub fn in_right_half_plane(&self) -> bool {
        self.finite().is_none_or(|z| !z.re.is_negative())
    }
}

impl fmt::Display for ProjValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjValue::Finite(z) => z.fmt(f),
            ProjValue::Infinity => f.write_str("inf"),
        }
    }
}

/// `z + w`, with `inf` absorbing.
pub fn pc_add(z: &ProjValue, w: &ProjValue) -> ProjValue {
    match (z, w) {
        (ProjValue::Finite(a), ProjValue::Finite(b)) => ProjValue::Finite(a + b),
        _ => ProjValue::Infinity,
    }
}

/// `z · w`, with `inf` absorbing, `0 · inf = inf` included.
pub fn pc_mul(z: &ProjValue, w: &ProjValue) -> ProjValue {
    match (z, w) {
        (ProjValue::Finite(a), ProjValue::Finite(b)) => ProjValue::Finite(a * b),
        _ => ProjValue::Infinity,
    }
}

/// `z⁻¹`, exchanging `0` and `inf`.
pub fn pc_inv(z: &ProjValue) -> ProjValue {
    match z {
        ProjValue::Infinity => ProjValue::zero(),
        ProjValue::Finite(a) => a.recip().map_or(ProjValue::Infinity, ProjValue::Finite),
    }
}

/// Harmonic sum `(z⁻¹ + w⁻¹)⁻¹`: parallel composition.
pub fn pc_parallel(z: &ProjValue, w: &ProjValue) -> ProjValue {
    pc_inv(&pc_add(&pc_inv(z), &pc_inv(w)))
}

/// `(z⁻¹ · w⁻¹)⁻¹`.
pub fn pc_bullet(z: &ProjValue, w: &ProjValue) -> ProjValue {
    pc_inv(&pc_mul(&pc_inv(z), &pc_inv(w)))
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ImpedanceError {
    #[error("{0} must be positive")]
    NonPositive(&'static str),
    #[error("series and parallel nodes need at least one child")]
    EmptyNode,
    #[error("additive hom is defined on the right half plane only")]
    Domain,
    #[error("additive hom out of inf has no value")]
    Undefined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    /// Resistor, in ohm.
    R,
    /// Inductor, in henry.
    L,
    /// Capacitor, in farad.
    C,
}

/// `R ↦ R`, `L ↦ iωL`, `C ↦ -i/(ωC)`.
pub fn element_impedance(kind: Element, value: &Rational, omega: &Rational) -> Result<ProjValue, ImpedanceError> {
    if !value.is_positive() {
        return Err(ImpedanceError::NonPositive("element value"));
    }
    if !omega.is_positive() {
        return Err(ImpedanceError::NonPositive("angular frequency"));
    }
    let zero = Rational::zero();
    Ok(ProjValue::Finite(match kind {
        Element::R => GaussQ::new(value.clone(), zero),
        Element::L => GaussQ::new(zero, omega * value),
        Element::C => GaussQ::new(zero, -(omega * value).recip()),
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NetworkTree {
    Leaf(Element, Rational),
    Series(Vec<NetworkTree>),
    Parallel(Vec<NetworkTree>),
}

impl NetworkTree {
    pub fn leaves(&self) -> usize {
        match self {
            NetworkTree::Leaf(..) => 1,
            NetworkTree::Series(c) | NetworkTree::Parallel(c) => c.iter().map(NetworkTree::leaves).sum(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            NetworkTree::Leaf(..) => 0,
            NetworkTree::Series(c) | NetworkTree::Parallel(c) => {
                1 + c.iter().map(NetworkTree::depth).max().unwrap_or(0)
            }
        }
    }
}

/// Impedance of a series-parallel network at angular frequency `omega`.
pub fn reduce_network(net: &NetworkTree, omega: &Rational) -> Result<ProjValue, ImpedanceError> {
    match net {
        NetworkTree::Leaf(kind, value) => element_impedance(*kind, value, omega),
        NetworkTree::Series(children) | NetworkTree::Parallel(children) => {
            let (first, rest) = children.split_first().ok_or(ImpedanceError::EmptyNode)?;
            let combine = if matches!(net, NetworkTree::Series(_)) { pc_add } else { pc_parallel };
            rest.iter().try_fold(reduce_network(first, omega)?, |acc, c| Ok(combine(&acc, &reduce_network(c, omega)?)))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlaneKind {
    Additive,
    Multiplicative,
}

/// Internal hom of the ordered plane.
///
/// Additive: `max(0, Re w' - Re w) + i (Im w' - Im w)` on the right half
/// plane, `inf` when `w' = inf`; undefined when `w = inf`, since `z + inf`
/// is above everything and the order has no least element. Multiplicative:
/// `w' / w` with `0/0 = inf/inf = 0`, `ν/0 = inf` and `ν/inf = 0`.
pub fn cplane_hom(w: &ProjValue, w2: &ProjValue, kind: PlaneKind) -> Result<ProjValue, ImpedanceError> {
    match kind {
        PlaneKind::Additive => {
            if !w.in_right_half_plane() || !w2.in_right_half_plane() {
                return Err(ImpedanceError::Domain);
            }
            match (w, w2) {
                (ProjValue::Infinity, _) => Err(ImpedanceError::Undefined),
                (_, ProjValue::Infinity) => Ok(ProjValue::Infinity),
                (ProjValue::Finite(a), ProjValue::Finite(b)) => {
                    let d = b - a;
                    let re = if d.re.is_negative() { Rational::zero() } else { d.re };
                    Ok(ProjValue::Finite(GaussQ::new(re, d.im)))
                }
            }
        }
        PlaneKind::Multiplicative => Ok(match (w, w2) {
            (ProjValue::Infinity, _) => ProjValue::zero(),
            _ if w.is_zero() && w2.is_zero() => ProjValue::zero(),
            _ if w.is_zero() => ProjValue::Infinity,
            (_, ProjValue::Infinity) => ProjValue::Infinity,
            (ProjValue::Finite(a), ProjValue::Finite(b)) => ProjValue::Finite(b * &a.recip().expect("nonzero")),
        }),
    }
}

/// `z >= w` in the kind's order. Additive: `Re z >= Re w` and `Im z = Im w`.
/// Multiplicative: `|z| >= |w|` and `arg z = arg w`, with `0` least. In
/// both, `inf` is greatest.
pub fn cplane_geq(z: &ProjValue, w: &ProjValue, kind: PlaneKind) -> bool {
    match (z, w) {
        (ProjValue::Infinity, _) => true,
        (_, ProjValue::Infinity) => false,
        (ProjValue::Finite(a), ProjValue::Finite(b)) => match kind {
            PlaneKind::Additive => a.re >= b.re && a.im == b.im,
            PlaneKind::Multiplicative => {
                if b.is_zero() {
                    return true;
                }
                if a.is_zero() {
                    return false;
                }
                // same argument iff a·conj(b) is a positive real
                let p = a * &b.conj();
                p.im.is_zero() && p.re.is_positive() && a.norm_sq() >= b.norm_sq()
            }
        },
    }
}

/// `z <= w`.
pub fn cplane_leq(z: &ProjValue, w: &ProjValue, kind: PlaneKind) -> bool {
    cplane_geq(w, z, kind)
}

/// `zw / (z + w)`, computed case by case.
pub fn parallel_direct(z: &ProjValue, w: &ProjValue) -> ProjValue {
    match (z, w) {
        _ if z.is_zero() || w.is_zero() => ProjValue::zero(),
        (ProjValue::Infinity, _) => w.clone(),
        (_, ProjValue::Infinity) => z.clone(),
        (ProjValue::Finite(a), ProjValue::Finite(b)) => match (a + b).recip() {
            Some(r) => ProjValue::Finite(&(a * b) * &r),
            None => ProjValue::Infinity,
        },
    }
}

/// `z • w` computed case by case: `0` absorbs, then `inf`, else `zw`.
pub fn bullet_direct(z: &ProjValue, w: &ProjValue) -> ProjValue {
    match (z, w) {
        _ if z.is_zero() || w.is_zero() => ProjValue::zero(),
        (ProjValue::Finite(a), ProjValue::Finite(b)) => ProjValue::Finite(a * b),
        _ => ProjValue::Infinity,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicalViolation {
    pub law: &'static str,
    pub operands: Vec<ProjValue>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CubicalReport {
    pub checked: usize,
    pub violations: Vec<CubicalViolation>,
}

impl CubicalReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn law(&mut self, law: &'static str, operands: &[&ProjValue], ok: bool) {
        self.checked += 1;
        if !ok {
            self.violations.push(CubicalViolation { law, operands: operands.iter().map(|&v| v.clone()).collect() });
        }
    }
}

fn constant_laws(r: &mut CubicalReport) {
    let (zero, one, inf) = (ProjValue::zero(), ProjValue::one(), ProjValue::Infinity);
    r.law("0* = inf", &[], pc_inv(&zero) == inf);
    r.law("1* = 1", &[], pc_inv(&one) == one);
}

fn unary_laws(r: &mut CubicalReport, x: &ProjValue) {
    let (zero, one, inf) = (ProjValue::zero(), ProjValue::one(), ProjValue::Infinity);
    r.law("x** = x", &[x], pc_inv(&pc_inv(x)) == *x);
    r.law("x + inf = inf", &[x], pc_add(x, &inf) == inf);
    r.law("x . inf = inf", &[x], pc_mul(x, &inf) == inf);
    r.law("inf . x = inf", &[x], pc_mul(&inf, x) == inf);
    r.law("x * 0 = 0", &[x], pc_parallel(x, &zero) == zero);
    r.law("x • 0 = 0", &[x], pc_bullet(x, &zero) == zero);
    r.law("x * inf = x", &[x], pc_parallel(x, &inf) == *x);
    r.law("x • 1 = x", &[x], pc_bullet(x, &one) == *x);
    r.law("x . 1 = x", &[x], pc_mul(x, &one) == *x);
    r.law("x + 0 = x", &[x], pc_add(x, &zero) == *x);
}

fn binary_laws(r: &mut CubicalReport, x: &ProjValue, y: &ProjValue) {
    r.law("x * y = (x* + y*)*", &[x, y], pc_parallel(x, y) == parallel_direct(x, y));
    r.law("x • y = (x* . y*)*", &[x, y], pc_bullet(x, y) == bullet_direct(x, y));
}

/// The involutive cubical semiring identities on every sample and pair of
/// samples: `x** = x`, `0* = inf`, `1* = 1`, `inf` absorbing for `+` and
/// `·`, `0` absorbing for the dual operations, and the dual operations
/// against their direct formulas.
pub fn cubical_check(samples: &[ProjValue]) -> CubicalReport {
    let mut r = CubicalReport::default();
    constant_laws(&mut r);
    for x in samples {
        unary_laws(&mut r, x);
        for y in samples {
            binary_laws(&mut r, x, y);
        }
    }
    r
}

/// The identities of [`cubical_check`] on given cases: one-argument laws
/// on both components of each pair, two-argument laws on the pair itself.
pub fn cubical_check_cases(cases: &[(ProjValue, ProjValue)]) -> CubicalReport {
    let mut r = CubicalReport::default();
    constant_laws(&mut r);
    for (x, y) in cases {
        unary_laws(&mut r, x);
        unary_laws(&mut r, y);
        binary_laws(&mut r, x, y);
    }
    r
}
