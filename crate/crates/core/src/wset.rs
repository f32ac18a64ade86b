//! Finite weighted sets and their (weak) contractions.
//!
//! A weighted set is a carrier with a cost `|x| ∈ [0, inf]` per element. Maps
//! between them are arbitrary; a map is a contraction when `|f(x)| <= |x|`.
//! Both structures of the weight object lift to tensor products on the
//! cartesian product of carriers, each with an internal hom carried by the set
//! of *all* maps.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::weight::{inf, sup, Structure, Weight};

/// Element identifiers. Constructions build structured ids so that carriers
/// stay self-describing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Elem {
    Atom(String),
    /// The point of a singleton.
    Point,
    Tuple(Vec<Elem>),
    /// Summand index and element of a coproduct.
    Tagged(Box<Elem>, usize),
    /// A map, as its list of images in source carrier order.
    Map(Vec<Elem>),
    /// An equivalence class of a quotient.
    Class(Vec<Elem>),
}

impl Elem {
    pub fn atom(name: &str) -> Self {
        Elem::Atom(String::from(name))
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(f: &mut fmt::Formatter<'_>, open: &str, items: &[Elem], close: &str) -> fmt::Result {
            f.write_str(open)?;
            for (i, e) in items.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str(close)
        }
        match self {
            Elem::Atom(name) => f.write_str(name),
            Elem::Point => f.write_str("*"),
            Elem::Tuple(items) => list(f, "(", items, ")"),
            Elem::Tagged(e, i) => write!(f, "({e},{i})"),
            Elem::Map(images) => list(f, "[", images, "]"),
            Elem::Class(members) => list(f, "{", members, "}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WSetError {
    #[error("duplicate element `{0}`")]
    Duplicate(Elem),
    #[error("unknown element `{0}`")]
    Unknown(Elem),
    #[error("element `{0}` has no image")]
    NotTotal(Elem),
    #[error("classes do not partition the carrier: {0}")]
    NotAPartition(&'static str),
    #[error("hom-object would have {count} elements, limit is {limit}")]
    TooLarge { count: u128, limit: u128 },
    #[error("maps are not composable")]
    NotComposable,
    #[error("carrier size mismatch: expected {expected}, found {found}")]
    Shape { expected: usize, found: usize },
}

/// Largest hom-object that [`hom_object`] will materialize.
pub const HOM_LIMIT: u128 = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WSet {
    elems: Vec<(Elem, Weight)>,
    index: BTreeMap<Elem, usize>,
}

impl WSet {
    pub fn new<I: IntoIterator<Item = (Elem, Weight)>>(pairs: I) -> Result<Self, WSetError> {
        let mut set = WSet::default();
        for (e, w) in pairs {
            if set.index.contains_key(&e) {
                return Err(WSetError::Duplicate(e));
            }
            set.index.insert(e.clone(), set.elems.len());
            set.elems.push((e, w));
        }
        Ok(set)
    }

    /// `w_λ S`: the set `S` with constant weight `λ`.
    pub fn constant<I: IntoIterator<Item = Elem>>(ids: I, w: &Weight) -> Result<Self, WSetError> {
        WSet::new(ids.into_iter().map(|e| (e, w.clone())))
    }

    /// `w_λ {*}`.
    pub fn singleton(w: Weight) -> Self {
        WSet::new([(Elem::Point, w)]).expect("one element")
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Elem, &Weight)> {
        self.elems.iter().map(|(e, w)| (e, w))
    }

    pub fn elem(&self, i: usize) -> &Elem {
        &self.elems[i].0
    }

    pub fn weight(&self, i: usize) -> &Weight {
        &self.elems[i].1
    }

    pub fn position(&self, e: &Elem) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn weight_of(&self, e: &Elem) -> Option<&Weight> {
        self.position(e).map(|i| self.weight(i))
    }

    pub fn ids(&self) -> impl Iterator<Item = &Elem> {
        self.elems.iter().map(|(e, _)| e)
    }
}

/// Cartesian product, weighted by the supremum of the components. The empty
/// product is the `0`-weighted singleton.
pub fn product(sets: &[WSet]) -> WSet {
    let mut acc: Vec<(Vec<Elem>, Weight)> = alloc::vec![(Vec::new(), Weight::zero())];
    for set in sets {
        acc = acc
            .iter()
            .flat_map(|(ids, w)| {
                set.iter().map(move |(e, we)| {
                    let mut ids = ids.clone();
                    ids.push(e.clone());
                    (ids, w.join(we))
                })
            })
            .collect();
    }
    if sets.is_empty() {
        return WSet::singleton(Weight::zero());
    }
    WSet::new(acc.into_iter().map(|(ids, w)| (Elem::Tuple(ids), w))).expect("tuples are distinct")
}

/// Tagged disjoint union; weights are inherited.
pub fn coproduct(sets: &[WSet]) -> WSet {
    let pairs = sets
        .iter()
        .enumerate()
        .flat_map(|(i, set)| set.iter().map(move |(e, w)| (Elem::Tagged(Box::new(e.clone()), i), w.clone())));
    WSet::new(pairs).expect("tags separate summands")
}

/// Quotient by a partition; each class weighs the infimum of its members.
pub fn quotient(x: &WSet, classes: &[Vec<Elem>]) -> Result<WSet, WSetError> {
    let mut seen = alloc::vec![false; x.len()];
    let mut pairs = Vec::with_capacity(classes.len());
    for class in classes {
        if class.is_empty() {
            return Err(WSetError::NotAPartition("empty class"));
        }
        let mut members = Vec::with_capacity(class.len());
        for e in class {
            let i = x.position(e).ok_or_else(|| WSetError::Unknown(e.clone()))?;
            if core::mem::replace(&mut seen[i], true) {
                return Err(WSetError::NotAPartition("element in two classes"));
            }
            members.push(x.weight(i));
        }
        pairs.push((Elem::Class(class.clone()), inf(members)));
    }
    if seen.iter().any(|s| !s) {
        return Err(WSetError::NotAPartition("element in no class"));
    }
    WSet::new(pairs)
}

/// `X ⊗ Y` on the carrier `X × Y` (x-major order), weighted by `|x| + |y|` or
/// `|x| · |y|` (with `0 · inf = inf`).
pub fn tensor(x: &WSet, y: &WSet, s: Structure) -> WSet {
    let pairs = x.iter().flat_map(|(ex, wx)| {
        y.iter().map(move |(ey, wy)| (Elem::Tuple(alloc::vec![ex.clone(), ey.clone()]), s.tensor(wx, wy)))
    });
    WSet::new(pairs).expect("pairs are distinct")
}

/// `B_λ(X) = {x | |x| <= λ}` in carrier order.
pub fn ball<'a>(x: &'a WSet, radius: &Weight) -> Vec<&'a Elem> {
    x.iter().filter(|(_, w)| *w <= radius).map(|(e, _)| e).collect()
}

/// A map of carriers. Nothing is assumed about weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WMap {
    source: WSet,
    target: WSet,
    images: Vec<usize>,
}

impl WMap {
    pub fn new<I>(source: WSet, target: WSet, assignment: I) -> Result<Self, WSetError>
    where
        I: IntoIterator<Item = (Elem, Elem)>,
    {
        let mut images = alloc::vec![None; source.len()];
        for (from, to) in assignment {
            let i = source.position(&from).ok_or(WSetError::Unknown(from))?;
            let j = target.position(&to).ok_or(WSetError::Unknown(to))?;
            images[i] = Some(j);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, j)| j.ok_or_else(|| WSetError::NotTotal(source.elem(i).clone())))
            .collect::<Result<_, _>>()?;
        Ok(WMap { source, target, images })
    }

    /// Images given as target positions, in source carrier order.
    pub fn from_indices(source: WSet, target: WSet, images: Vec<usize>) -> Result<Self, WSetError> {
        if images.len() != source.len() {
            return Err(WSetError::Shape { expected: source.len(), found: images.len() });
        }
        if let Some(&j) = images.iter().find(|&&j| j >= target.len()) {
            return Err(WSetError::Shape { expected: target.len(), found: j + 1 });
        }
        Ok(WMap { source, target, images })
    }

    pub fn identity(x: &WSet) -> Self {
        WMap { source: x.clone(), target: x.clone(), images: (0..x.len()).collect() }
    }

    pub fn source(&self) -> &WSet {
        &self.source
    }

    pub fn target(&self) -> &WSet {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, e: &Elem) -> Option<&Elem> {
        self.source.position(e).map(|i| self.target.elem(self.images[i]))
    }

    /// `|h|₀ = sup_y (|h(y)| - |y|)` or `|h|₁ = sup_y |h(y)| / |y|`; `0` on an
    /// empty carrier.
    pub fn weight(&self, s: Structure) -> Weight {
        let terms: Vec<Weight> =
            self.images.iter().enumerate().map(|(i, &j)| s.hom(self.source.weight(i), self.target.weight(j))).collect();
        sup(&terms)
    }

    pub fn is_contraction(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| self.target.weight(j) <= self.source.weight(i))
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &WMap) -> Result<WMap, WSetError> {
        if self.target != g.source {
            return Err(WSetError::NotComposable);
        }
        Ok(WMap {
            source: self.source.clone(),
            target: g.target.clone(),
            images: self.images.iter().map(|&j| g.images[j]).collect(),
        })
    }

    /// The map as an element of a hom-object: its images in source order.
    pub fn as_elem(&self) -> Elem {
        Elem::Map(self.images.iter().map(|&j| self.target.elem(j).clone()).collect())
    }
}

fn map_count(source: usize, target: usize) -> u128 {
    (0..source).fold(1u128, |acc, _| acc.saturating_mul(target as u128))
}

/// Every image vector `Y -> Z`, lexicographic with the first source element
/// most significant.
pub fn all_images(source: usize, target: usize) -> Vec<Vec<usize>> {
    let mut out = alloc::vec![Vec::new()];
    for _ in 0..source {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..target).map(move |j| {
                    let mut v = v.clone();
                    v.push(j);
                    v
                })
            })
            .collect();
    }
    out
}

/// `Hom(Y, Z)`: all maps `Y -> Z`, each weighted by [`WMap::weight`].
/// Refused above [`HOM_LIMIT`] elements.
pub fn hom_object(y: &WSet, z: &WSet, s: Structure) -> Result<WSet, WSetError> {
    let count = map_count(y.len(), z.len());
    if count > HOM_LIMIT {
        return Err(WSetError::TooLarge { count, limit: HOM_LIMIT });
    }
    let pairs = all_images(y.len(), z.len()).into_iter().map(|images| {
        let h = WMap { source: y.clone(), target: z.clone(), images };
        (h.as_elem(), h.weight(s))
    });
    WSet::new(pairs)
}

/// All contractions `Y -> Z`.
pub fn contractions(y: &WSet, z: &WSet) -> Result<Vec<WMap>, WSetError> {
    let count = map_count(y.len(), z.len());
    if count > HOM_LIMIT {
        return Err(WSetError::TooLarge { count, limit: HOM_LIMIT });
    }
    Ok(all_images(y.len(), z.len())
        .into_iter()
        .map(|images| WMap { source: y.clone(), target: z.clone(), images })
        .filter(WMap::is_contraction)
        .collect())
}

/// Transpose of `f: X ⊗ Y -> Z` (source in x-major order) into
/// `g: X -> Hom(Y, Z)` with `g(x)(y) = f(x, y)`.
pub fn transpose(f: &WMap, x: &WSet, y: &WSet, s: Structure) -> Result<WMap, WSetError> {
    let expected = x.len() * y.len();
    if f.source.len() != expected {
        return Err(WSetError::Shape { expected, found: f.source.len() });
    }
    let hom = hom_object(y, &f.target, s)?;
    let images = (0..x.len())
        .map(|i| {
            let row: Vec<Elem> = (0..y.len()).map(|k| f.target.elem(f.images[i * y.len() + k]).clone()).collect();
            hom.position(&Elem::Map(row)).expect("every map is in the hom-object")
        })
        .collect();
    Ok(WMap { source: x.clone(), target: hom, images })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    fn set(pairs: &[(&str, &str)]) -> WSet {
        WSet::new(pairs.iter().map(|(e, x)| (Elem::atom(e), w(x)))).unwrap()
    }

    fn tuple(ids: &[&str]) -> Elem {
        Elem::Tuple(ids.iter().map(|e| Elem::atom(e)).collect())
    }

    #[test]
    fn product_examples() {
        let p = product(&[set(&[("a", "1")]), set(&[("b", "3")])]);
        assert_eq!(p.len(), 1);
        assert_eq!(p.weight_of(&tuple(&["a", "b"])), Some(&w("3")));
        let unit = product(&[]);
        assert_eq!(unit.len(), 1);
        assert_eq!(unit.weight(0), &w("0"));
        let p = product(&[set(&[("a", "inf")]), set(&[("b", "0")])]);
        assert_eq!(p.weight(0), &w("inf"));
    }

    #[test]
    fn coproduct_examples() {
        let c = coproduct(&[set(&[("a", "1")]), set(&[("a", "2")])]);
        let tag = |i| Elem::Tagged(Box::new(Elem::atom("a")), i);
        assert_eq!(c.weight_of(&tag(0)), Some(&w("1")));
        assert_eq!(c.weight_of(&tag(1)), Some(&w("2")));
        assert!(coproduct(&[]).is_empty());
        let c = coproduct(&[set(&[("s", "7/2")]), WSet::default()]);
        assert_eq!(c.len(), 1);
        assert_eq!(c.weight(0), &w("7/2"));
    }

    #[test]
    fn quotient_examples() {
        let x = set(&[("a", "1"), ("b", "3")]);
        let q = quotient(&x, &[alloc::vec![Elem::atom("a"), Elem::atom("b")]]).unwrap();
        assert_eq!(q.len(), 1);
        assert_eq!(q.weight(0), &w("1"));
        let q = quotient(&x, &[alloc::vec![Elem::atom("a")], alloc::vec![Elem::atom("b")]]).unwrap();
        assert_eq!(q.iter().map(|(_, w)| w.clone()).collect::<Vec<_>>(), [w("1"), w("3")]);
        let y = set(&[("a", "inf"), ("b", "inf")]);
        let q = quotient(&y, &[alloc::vec![Elem::atom("a"), Elem::atom("b")]]).unwrap();
        assert_eq!(q.weight(0), &w("inf"));
        assert!(matches!(quotient(&x, &[alloc::vec![Elem::atom("a")]]), Err(WSetError::NotAPartition(_))));
        assert!(matches!(
            quotient(&x, &[alloc::vec![Elem::atom("a"), Elem::atom("b")], alloc::vec![Elem::atom("a")]]),
            Err(WSetError::NotAPartition(_))
        ));
    }

    #[test]
    fn tensor_examples() {
        let t = tensor(&set(&[("a", "2")]), &set(&[("b", "3")]), Structure::Additive);
        assert_eq!(t.weight(0), &w("5"));
        let t = tensor(&set(&[("a", "0")]), &set(&[("b", "inf")]), Structure::Multiplicative);
        assert_eq!(t.weight(0), &w("inf"));
        let x = set(&[("a", "1/2"), ("b", "inf"), ("c", "0")]);
        let t = tensor(&x, &WSet::singleton(Weight::zero()), Structure::Additive);
        let weights: Vec<_> = t.iter().map(|(_, w)| w.clone()).collect();
        assert_eq!(weights, x.iter().map(|(_, w)| w.clone()).collect::<Vec<_>>());
    }

    #[test]
    fn map_weight_examples() {
        let x = set(&[("a", "1/2"), ("b", "inf")]);
        assert_eq!(WMap::identity(&x).weight(Structure::Additive), w("0"));
        let h = WMap::new(set(&[("y", "1")]), set(&[("z", "2")]), [(Elem::atom("y"), Elem::atom("z"))]).unwrap();
        assert_eq!(h.weight(Structure::Additive), w("1"));
        assert_eq!(h.weight(Structure::Multiplicative), w("2"));
        let h = WMap::new(set(&[("y", "0")]), set(&[("z", "5")]), [(Elem::atom("y"), Elem::atom("z"))]).unwrap();
        assert_eq!(h.weight(Structure::Multiplicative), w("inf"));
        let empty = WMap::identity(&WSet::default());
        assert_eq!(empty.weight(Structure::Additive), w("0"));
        assert!(empty.is_contraction());
    }

    #[test]
    fn map_construction_errors() {
        let y = set(&[("y", "1"), ("u", "1")]);
        let z = set(&[("z", "2")]);
        assert_eq!(
            WMap::new(y.clone(), z.clone(), [(Elem::atom("y"), Elem::atom("z"))]),
            Err(WSetError::NotTotal(Elem::atom("u")))
        );
        assert_eq!(WMap::new(y, z, [(Elem::atom("y"), Elem::atom("q"))]), Err(WSetError::Unknown(Elem::atom("q"))));
        assert!(matches!(WSet::new([(Elem::Point, w("1")), (Elem::Point, w("2"))]), Err(WSetError::Duplicate(_))));
    }

    #[test]
    fn ball_examples() {
        let x = set(&[("a", "0"), ("b", "2"), ("c", "inf")]);
        assert_eq!(ball(&x, &w("0")), [&Elem::atom("a")]);
        assert_eq!(ball(&x, &w("inf")).len(), 3);
        assert_eq!(ball(&set(&[("a", "1")]), &w("1")), [&Elem::atom("a")]);
    }

    #[test]
    fn hom_object_is_bounded() {
        let y = WSet::constant((0..14).map(|i| Elem::Atom(alloc::format!("y{i}"))), &w("1")).unwrap();
        let z = set(&[("a", "1"), ("b", "2")]);
        assert!(matches!(hom_object(&y, &z, Structure::Additive), Err(WSetError::TooLarge { .. })));
        let y = WSet::constant((0..13).map(|i| Elem::Atom(alloc::format!("y{i}"))), &w("1")).unwrap();
        assert_eq!(hom_object(&y, &z, Structure::Additive).unwrap().len(), 8192);
    }

    #[test]
    fn transpose_agrees_with_currying() {
        let x = set(&[("a", "1"), ("b", "2")]);
        let y = set(&[("c", "0"), ("d", "1/2")]);
        let z = set(&[("p", "3"), ("q", "inf")]);
        let src = tensor(&x, &y, Structure::Additive);
        let f = WMap::from_indices(src, z.clone(), alloc::vec![0, 1, 1, 0]).unwrap();
        let g = transpose(&f, &x, &y, Structure::Additive).unwrap();
        assert_eq!(g.image(&Elem::atom("a")), Some(&Elem::Map(alloc::vec![Elem::atom("p"), Elem::atom("q")])));
        assert_eq!(g.weight(Structure::Additive), f.weight(Structure::Additive));
    }
}
