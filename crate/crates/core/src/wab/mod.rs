//! Free weighted abelian groups `wZ X` over a weighted set of generators.
//!
//! An element `Σ k_x x` weighs `Σ w(k_x) · |x|` over its support, where
//! `w(k) = k` for `k >= 0` and `w(k) = inf` for `k < 0`. Weights are directed:
//! `|-a|` and `|a|` differ in general, and finite-weight differences give the
//! attainability preorder.

mod algebra;
mod search;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};
use core::str::FromStr;

use crate::weight::{hom_dot, sup, Weight};
use crate::wset::{Elem, WSet};

pub use algebra::{
    check_algebra, integer_ring, integer_tensor_bound_check, AlgebraError, AlgebraKind, AlgebraSample, Axiom,
    AxiomReport, Table, Violation,
};
pub use search::{symmetrize_by, tensor_by, SearchBound, SearchOutcome};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WabError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(Elem),
    #[error("`{0}` is not a pair of generators")]
    UnknownPair(Elem),
    #[error("matrix has {found} rows/columns, basis has {expected}")]
    Dimension { expected: usize, found: usize },
    #[error("invalid element literal `{0}`")]
    Literal(String),
}

/// `w(k)`: `k` for `k >= 0`, `inf` for `k < 0`.
pub fn int_weight(k: i64) -> Weight {
    if k >= 0 {
        Weight::from_int(k as u64)
    } else {
        Weight::infinity()
    }
}

/// The absolute-value weight of the symmetrized integers.
pub fn abs_weight(k: i64) -> Weight {
    Weight::from_int(k.unsigned_abs())
}

/// A finitely supported integer combination of generators. Stored
/// coefficients are nonzero; the zero element is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement(BTreeMap<Elem, i64>);

impl GroupElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(e: Elem) -> Self {
        Self::term(e, 1)
    }

    pub fn term(e: Elem, k: i64) -> Self {
        let mut v = Self::zero();
        v.add_term(e, k);
        v
    }

    pub fn add_term(&mut self, e: Elem, k: i64) {
        let c = self.0.entry(e.clone()).or_insert(0);
        *c += k;
        if *c == 0 {
            self.0.remove(&e);
        }
    }

    pub fn coefficient(&self, e: &Elem) -> i64 {
        self.0.get(e).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = (&Elem, i64)> {
        self.0.iter().map(|(e, &k)| (e, k))
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        GroupElement(self.0.iter().map(|(e, &c)| (e.clone(), c * k)).collect())
    }

    /// Bilinear expansion of `a ⊗ b` over generator pairs `(x, y)`.
    pub fn tensor(a: &GroupElement, b: &GroupElement) -> GroupElement {
        let mut out = GroupElement::zero();
        for (x, k) in a.support() {
            for (y, m) in b.support() {
                out.add_term(Elem::Tuple(alloc::vec![x.clone(), y.clone()]), k * m);
            }
        }
        out
    }
}

impl Add for &GroupElement {
    type Output = GroupElement;

    fn add(self, rhs: &GroupElement) -> GroupElement {
        let mut out = self.clone();
        for (e, k) in rhs.support() {
            out.add_term(e.clone(), k);
        }
        out
    }
}

impl Neg for &GroupElement {
    type Output = GroupElement;

    fn neg(self) -> GroupElement {
        self.scale(-1)
    }
}

impl Sub for &GroupElement {
    type Output = GroupElement;

    fn sub(self, rhs: &GroupElement) -> GroupElement {
        self + &(-rhs)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, k)) in self.support().enumerate() {
            let sign = if k < 0 { "-" } else { "+" };
            match (i, k.unsigned_abs()) {
                (0, 1) if k < 0 => write!(f, "-{e}")?,
                (0, 1) => write!(f, "{e}")?,
                (0, m) if k < 0 => write!(f, "-{m}{e}")?,
                (0, m) => write!(f, "{m}{e}")?,
                (_, 1) => write!(f, " {sign} {e}")?,
                (_, m) => write!(f, " {sign} {m}{e}")?,
            }
        }
        Ok(())
    }
}

/// Parses `3a - 2b + c` style combinations; `0` is the zero element.
/// Generator names are `[A-Za-z_][A-Za-z0-9_]*`.
impl FromStr for GroupElement {
    type Err = WabError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = || WabError::Literal(String::from(text.trim()));
        if text.trim() == "0" {
            return Ok(GroupElement::zero());
        }
        let mut terms: Vec<(i64, &str)> = Vec::new();
        let (mut sign, mut start) = (1, 0);
        for (i, c) in text.char_indices() {
            if c == '+' || c == '-' {
                let before = text[start..i].trim();
                if !before.is_empty() {
                    terms.push((sign, before));
                } else if !terms.is_empty() || start != 0 {
                    return Err(err());
                }
                sign = if c == '-' { -1 } else { 1 };
                start = i + 1;
            }
        }
        terms.push((sign, text[start..].trim()));
        let mut out = GroupElement::zero();
        for (sign, term) in terms {
            let split = term.find(|c: char| !c.is_ascii_digit()).ok_or_else(err)?;
            let (digits, name) = term.split_at(split);
            let k: i64 = if digits.is_empty() { 1 } else { digits.parse().map_err(|_| err())? };
            let mut chars = name.chars();
            let head_ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
            if !head_ok || !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(err());
            }
            out.add_term(Elem::Atom(String::from(name)), sign * k);
        }
        Ok(out)
    }
}

/// `wZ X`: the free weighted abelian group on a weighted set of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeWAb {
    basis: WSet,
}

/// Weight of an element together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Symmetrized {
    /// `min(search, closed_form)`.
    pub value: Weight,
    /// Cheapest decomposition found by the bounded search.
    pub search: Weight,
    /// `Σ |k_x| · |x|`.
    pub closed_form: Weight,
    /// The search reached the closed form exactly.
    pub certified: bool,
    pub exhaustive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorWeight {
    /// `min(seed, search)`, a certified upper bound of the infimum.
    pub value: Weight,
    /// Cost of the canonical decomposition `Σ (k_xy x) ⊗ y`.
    pub seed: Weight,
    pub exhaustive: bool,
}

impl FreeWAb {
    pub fn new(basis: WSet) -> Self {
        FreeWAb { basis }
    }

    /// `wZ`: one generator `x` of weight `1`.
    pub fn integers() -> Self {
        FreeWAb::new(WSet::new([(Elem::atom("x"), Weight::one())]).expect("one generator"))
    }

    pub fn basis(&self) -> &WSet {
        &self.basis
    }

    fn generator_weight(&self, e: &Elem) -> Result<&Weight, WabError> {
        self.basis.weight_of(e).ok_or_else(|| WabError::UnknownGenerator(e.clone()))
    }

    /// `|Σ k_x x| = Σ_{k_x ≠ 0} w(k_x) · |x|`.
    pub fn weight(&self, v: &GroupElement) -> Result<Weight, WabError> {
        v.support().map(|(e, k)| Ok(&int_weight(k) * self.generator_weight(e)?)).sum()
    }

    /// `|v|ᵒᵖ = |-v|`.
    pub fn opposite_weight(&self, v: &GroupElement) -> Result<Weight, WabError> {
        self.weight(&-v)
    }

    /// Coordinates of `v` on `gens`.
    fn coordinates(v: &GroupElement, gens: &[Elem]) -> Vec<i64> {
        gens.iter().map(|g| v.coefficient(g)).collect()
    }

    fn weight_on(&self, gens: &[Elem], coords: &[i64]) -> Weight {
        gens.iter()
            .zip(coords)
            .filter(|(_, &k)| k != 0)
            .map(|(g, &k)| &int_weight(k) * self.basis.weight_of(g).expect("checked generator"))
            .sum()
    }

    /// Greatest symmetric weight below `|-|`, searched over decompositions
    /// supported on the generators of `v`.
    pub fn symmetrized_weight(&self, v: &GroupElement, bound: SearchBound) -> Result<Symmetrized, WabError> {
        let gens: Vec<Elem> = v.support().map(|(e, _)| e.clone()).collect();
        let closed_form: Weight = v
            .support()
            .map(|(e, k)| Ok(&abs_weight(k) * self.generator_weight(e)?))
            .sum::<Result<Weight, WabError>>()?;
        let target = Self::coordinates(v, &gens);
        let out = symmetrize_by(|c| self.weight_on(&gens, c), &target, bound);
        Ok(Symmetrized {
            value: out.value.meet(&closed_form),
            certified: out.value == closed_form,
            search: out.value,
            closed_form,
            exhaustive: out.exhaustive,
        })
    }

    /// Preorder `v <= u` iff `|u - v| < inf`.
    pub fn attainable_leq(&self, v: &GroupElement, u: &GroupElement) -> Result<bool, WabError> {
        Ok(self.weight(&(u - v))?.is_finite())
    }
}

/// Weight of `ξ ∈ wZ X ⊗ wZ Y`, `ξ` given on generator pairs `(x, y)`:
/// the infimum of `Σ |a_i| · |b_i|` over `ξ = Σ a_i ⊗ b_i`, searched over
/// decompositions supported on the rows and columns of `ξ`.
pub fn tensor_weight(
    a: &FreeWAb,
    b: &FreeWAb,
    xi: &GroupElement,
    bound: SearchBound,
) -> Result<TensorWeight, WabError> {
    let mut rows: Vec<Elem> = Vec::new();
    let mut cols: Vec<Elem> = Vec::new();
    let mut seed = Weight::zero();
    for (pair, k) in xi.support() {
        let (x, y) = match pair {
            Elem::Tuple(items) if items.len() == 2 => (&items[0], &items[1]),
            _ => return Err(WabError::UnknownPair(pair.clone())),
        };
        let (wx, wy) = match (a.basis.weight_of(x), b.basis.weight_of(y)) {
            (Some(wx), Some(wy)) => (wx, wy),
            _ => return Err(WabError::UnknownPair(pair.clone())),
        };
        seed = &seed + &(&(&int_weight(k) * wx) * wy);
        if !rows.contains(x) {
            rows.push(x.clone());
        }
        if !cols.contains(y) {
            cols.push(y.clone());
        }
    }
    rows.sort();
    cols.sort();
    let target: Vec<i64> = rows
        .iter()
        .flat_map(|x| cols.iter().map(move |y| xi.coefficient(&Elem::Tuple(alloc::vec![x.clone(), y.clone()]))))
        .collect();
    let out = tensor_by(
        |c| a.weight_on(&rows, c),
        |c| b.weight_on(&cols, c),
        rows.len(),
        cols.len(),
        &target,
        bound,
        Some(seed.clone()),
    );
    Ok(TensorWeight { value: out.value.meet(&seed), seed, exhaustive: out.exhaustive })
}

/// Weight of a simple tensor `a ⊗ b`: the generic search, also seeded by the
/// decompositions `a ⊗ b` and `(-a) ⊗ (-b)`.
pub fn simple_tensor_weight(
    a_space: &FreeWAb,
    b_space: &FreeWAb,
    a: &GroupElement,
    b: &GroupElement,
    bound: SearchBound,
) -> Result<TensorWeight, WabError> {
    let direct = &a_space.weight(a)? * &b_space.weight(b)?;
    let flipped = &a_space.opposite_weight(a)? * &b_space.opposite_weight(b)?;
    let mut out = tensor_weight(a_space, b_space, &GroupElement::tensor(a, b), bound)?;
    out.value = out.value.meet(&direct).meet(&flipped);
    Ok(out)
}

/// Weight of `(u, v)` in the product `A × B`: `max(|u|, |v|)`.
pub fn product_weight(a: &FreeWAb, b: &FreeWAb, u: &GroupElement, v: &GroupElement) -> Result<Weight, WabError> {
    Ok(a.weight(u)?.join(&b.weight(v)?))
}

/// Symmetrized weight of `(u, v)` in `A × B`, searched over decompositions
/// in the product itself.
pub fn symmetrized_product_weight(
    a: &FreeWAb,
    b: &FreeWAb,
    u: &GroupElement,
    v: &GroupElement,
    bound: SearchBound,
) -> Result<SearchOutcome, WabError> {
    let ga: Vec<Elem> = u.support().map(|(e, _)| e.clone()).collect();
    let gb: Vec<Elem> = v.support().map(|(e, _)| e.clone()).collect();
    for e in &ga {
        a.generator_weight(e)?;
    }
    for e in &gb {
        b.generator_weight(e)?;
    }
    let mut target = FreeWAb::coordinates(u, &ga);
    target.extend(FreeWAb::coordinates(v, &gb));
    let split = ga.len();
    let weight = |c: &[i64]| a.weight_on(&ga, &c[..split]).join(&b.weight_on(&gb, &c[split..]));
    Ok(symmetrize_by(weight, &target, bound))
}

/// A homomorphism `wZ X -> wZ Y` of the underlying groups: row `i` is the
/// image of the `i`-th source generator on the target basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomMatrix {
    source: FreeWAb,
    target: FreeWAb,
    rows: Vec<Vec<i64>>,
}

impl HomMatrix {
    pub fn new(source: FreeWAb, target: FreeWAb, rows: Vec<Vec<i64>>) -> Result<Self, WabError> {
        if rows.len() != source.basis.len() {
            return Err(WabError::Dimension { expected: source.basis.len(), found: rows.len() });
        }
        if let Some(r) = rows.iter().find(|r| r.len() != target.basis.len()) {
            return Err(WabError::Dimension { expected: target.basis.len(), found: r.len() });
        }
        Ok(HomMatrix { source, target, rows })
    }

    pub fn image_of_generator(&self, i: usize) -> GroupElement {
        let mut out = GroupElement::zero();
        for (j, &k) in self.rows[i].iter().enumerate() {
            out.add_term(self.target.basis.elem(j).clone(), k);
        }
        out
    }

    pub fn apply(&self, v: &GroupElement) -> Result<GroupElement, WabError> {
        let mut out = GroupElement::zero();
        for (e, k) in v.support() {
            let i = self.source.basis.position(e).ok_or_else(|| WabError::UnknownGenerator(e.clone()))?;
            out = &out + &self.image_of_generator(i).scale(k);
        }
        Ok(out)
    }

    /// Lipschitz weight. On a free domain it is attained on generators:
    /// `max_x |h(x)| / |x|`, since `|Σ k_x h(x)| <= Σ w(k_x) |h(x)|`.
    pub fn weight(&self) -> Weight {
        let ratios: Vec<Weight> = (0..self.rows.len())
            .map(|i| {
                let image = self.target.weight(&self.image_of_generator(i)).expect("target basis");
                hom_dot(self.source.basis.weight(i), &image)
            })
            .collect();
        sup(&ratios)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    fn el(s: &str) -> GroupElement {
        s.parse().unwrap()
    }

    fn basis(pairs: &[(&str, &str)]) -> FreeWAb {
        FreeWAb::new(WSet::new(pairs.iter().map(|(e, x)| (Elem::atom(e), w(x)))).unwrap())
    }

    #[test]
    fn literals() {
        let v = el("3a - 2b + c");
        assert_eq!(v.coefficient(&Elem::atom("a")), 3);
        assert_eq!(v.coefficient(&Elem::atom("b")), -2);
        assert_eq!(v.coefficient(&Elem::atom("c")), 1);
        assert_eq!(v.to_string(), "3a - 2b + c");
        assert_eq!(el("-x").to_string(), "-x");
        assert_eq!(el("x - x"), GroupElement::zero());
        assert_eq!(el("0").to_string(), "0");
        for bad in ["", "3", "a b", "a +", "2 3a", "+-a"] {
            assert!(bad.parse::<GroupElement>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn element_weight_examples() {
        let z = FreeWAb::integers();
        assert_eq!(z.weight(&el("3x")).unwrap(), w("3"));
        assert_eq!(z.weight(&el("-x")).unwrap(), w("inf"));
        assert_eq!(basis(&[("a", "1/2")]).weight(&el("4a")).unwrap(), w("2"));
        assert_eq!(z.weight(&GroupElement::zero()).unwrap(), w("0"));
        // zero coefficients never meet an infinite generator
        let b = basis(&[("a", "1"), ("u", "inf")]);
        assert_eq!(b.weight(&el("2a + u - u")).unwrap(), w("2"));
        assert_eq!(z.weight(&el("y")), Err(WabError::UnknownGenerator(Elem::atom("y"))));
    }

    #[test]
    fn opposite_weight_examples() {
        let z = FreeWAb::integers();
        assert_eq!(z.opposite_weight(&el("3x")).unwrap(), w("inf"));
        assert_eq!(z.opposite_weight(&GroupElement::zero()).unwrap(), w("0"));
        assert_eq!(basis(&[("a", "2")]).opposite_weight(&el("-a")).unwrap(), w("2"));
    }

    #[test]
    fn symmetrized_examples() {
        let z = FreeWAb::integers();
        let s = z.symmetrized_weight(&el("-3x"), SearchBound::default()).unwrap();
        assert_eq!(s.value, w("3"));
        assert!(s.certified);
        let a = basis(&[("a", "1")]);
        assert_eq!(a.symmetrized_weight(&el("-2a"), SearchBound::default()).unwrap().value, w("2"));
        let s = z.symmetrized_weight(&GroupElement::zero(), SearchBound::default()).unwrap();
        assert_eq!(s.value, w("0"));
    }

    #[test]
    fn tensor_examples() {
        let a = basis(&[("a", "2")]);
        let b = basis(&[("b", "3")]);
        let ab = GroupElement::tensor(&el("a"), &el("b"));
        let t = tensor_weight(&a, &b, &ab, SearchBound::new(2, 2)).unwrap();
        assert_eq!(t.value, w("6"));
        assert!(t.exhaustive);
        let t = tensor_weight(&a, &b, &GroupElement::zero(), SearchBound::new(2, 2)).unwrap();
        assert_eq!(t.value, w("0"));
        let neg = GroupElement::tensor(&el("-a"), &el("b"));
        for bound in [SearchBound::new(1, 1), SearchBound::new(2, 2), SearchBound::new(3, 3), SearchBound::default()] {
            assert_eq!(tensor_weight(&a, &b, &neg, bound).unwrap().value, w("inf"));
        }
        let bad = GroupElement::generator(Elem::atom("a"));
        assert!(matches!(tensor_weight(&a, &b, &bad, SearchBound::default()), Err(WabError::UnknownPair(_))));
    }

    #[test]
    fn simple_tensor_examples() {
        let z = FreeWAb::integers();
        let t = simple_tensor_weight(&z, &z, &el("-x"), &el("-2x"), SearchBound::new(2, 2)).unwrap();
        assert_eq!(t.value, w("2"));
        let t = simple_tensor_weight(&z, &z, &el("-x"), &el("2x"), SearchBound::new(2, 2)).unwrap();
        assert_eq!(t.value, w("inf"));
    }

    #[test]
    fn symmetrization_does_not_preserve_products() {
        let z = FreeWAb::integers();
        let (u, v) = (el("x"), el("-x"));
        let joint = symmetrized_product_weight(&z, &z, &u, &v, SearchBound::default()).unwrap();
        let bound = SearchBound::default();
        let separate =
            z.symmetrized_weight(&u, bound).unwrap().value.join(&z.symmetrized_weight(&v, bound).unwrap().value);
        assert_eq!(joint.value, w("2"));
        assert_eq!(separate, w("1"));
        assert_eq!(product_weight(&z, &z, &u, &v).unwrap(), w("inf"));
    }

    #[test]
    fn attainability_examples() {
        let z = FreeWAb::integers();
        assert!(z.attainable_leq(&el("2x"), &el("5x")).unwrap());
        assert!(!z.attainable_leq(&el("5x"), &el("2x")).unwrap());
        assert!(z.attainable_leq(&el("-7x"), &el("-7x")).unwrap());
    }

    #[test]
    fn hom_weight_examples() {
        let z = FreeWAb::integers();
        assert_eq!(HomMatrix::new(z.clone(), z.clone(), alloc::vec![alloc::vec![1]]).unwrap().weight(), w("1"));
        assert_eq!(HomMatrix::new(z.clone(), z.clone(), alloc::vec![alloc::vec![2]]).unwrap().weight(), w("2"));
        let zero_gen = basis(&[("a", "0")]);
        assert_eq!(HomMatrix::new(zero_gen, z.clone(), alloc::vec![alloc::vec![1]]).unwrap().weight(), w("inf"));
        assert!(matches!(
            HomMatrix::new(z.clone(), z, alloc::vec![alloc::vec![1, 2]]),
            Err(WabError::Dimension { .. })
        ));
    }
}
