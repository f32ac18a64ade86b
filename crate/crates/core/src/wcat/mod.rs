//! Weighted categories over the additive, multiplicative and sup structures,
//! best-cost closure of weighted graphs, weighted functors, and monoidal
//! endofunctors of the additive weight object.

mod endo;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::weight::Weight;

pub use endo::{
    endofunctor_check, fibered_check, EndoReport, EndoViolation, FiberedMorphism, PlError, PlFunction, Subadditivity,
};

/// The monoidal structure a category is enriched over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatKind {
    /// `|ba| <= |a| + |b|`, `|1| = 0`.
    Additive,
    /// `|ba| <= |a| · |b|`, `|1| <= 1`.
    Multiplicative,
    /// `|ba| <= |a| ∨ |b|`, `|1| = 0`.
    Sup,
}

impl CatKind {
    pub const ALL: [CatKind; 3] = [CatKind::Additive, CatKind::Multiplicative, CatKind::Sup];

    pub fn unit(self) -> Weight {
        match self {
            CatKind::Multiplicative => Weight::one(),
            CatKind::Additive | CatKind::Sup => Weight::zero(),
        }
    }

    pub fn combine(self, a: &Weight, b: &Weight) -> Weight {
        match self {
            CatKind::Additive => a + b,
            CatKind::Multiplicative => a * b,
            CatKind::Sup => a.join(b),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CatKind::Additive => "additive",
            CatKind::Multiplicative => "multiplicative",
            CatKind::Sup => "sup",
        }
    }
}

impl fmt::Display for CatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CatKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CatKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| alloc::format!("unknown kind `{s}` (expected additive, multiplicative or sup)"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WCatError {
    #[error("object index {0} out of range")]
    UnknownObject(usize),
    #[error("morphism index {0} out of range")]
    UnknownMorphism(usize),
    #[error("identity of object {object} is morphism {morphism}, which is not an endomorphism of it")]
    BadIdentity { object: usize, morphism: usize },
    #[error("composite of {first} then {second} is missing")]
    MissingComposite { first: usize, second: usize },
    #[error("composite of {first} then {second} has the wrong endpoints")]
    BadComposite { first: usize, second: usize },
    #[error("{first} and {second} are not composable")]
    NotComposable { first: usize, second: usize },
    #[error("identity law fails for morphism {0}")]
    IdentityLaw(usize),
    #[error("associativity fails for {0}, {1}, {2}")]
    Associativity(usize, usize, usize),
    #[error("not a functor: {0}")]
    NotAFunctor(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub weight: Weight,
}

/// A weighted directed multigraph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WGraph {
    objects: Vec<String>,
    edges: Vec<Edge>,
}

impl WGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Index of `name`, adding it if new.
    pub fn object(&mut self, name: &str) -> usize {
        match self.objects.iter().position(|o| o == name) {
            Some(i) => i,
            None => {
                self.objects.push(String::from(name));
                self.objects.len() - 1
            }
        }
    }

    pub fn add_edge(&mut self, src: usize, dst: usize, weight: Weight) -> Result<(), WCatError> {
        for v in [src, dst] {
            if v >= self.objects.len() {
                return Err(WCatError::UnknownObject(v));
            }
        }
        self.edges.push(Edge { src, dst, weight });
        Ok(())
    }

    pub fn connect(&mut self, src: &str, dst: &str, weight: Weight) {
        let (s, d) = (self.object(src), self.object(dst));
        self.edges.push(Edge { src: s, dst: d, weight });
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }
}

/// Best costs `d(x, y)` between objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CostMatrix {
    objects: Vec<String>,
    d: Vec<Vec<Weight>>,
    attained: Vec<Vec<bool>>,
}

impl CostMatrix {
    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn get(&self, x: usize, y: usize) -> &Weight {
        &self.d[x][y]
    }

    pub fn rows(&self) -> &[Vec<Weight>] {
        &self.d
    }

    /// False when `d(x, y)` is an infimum that no single path reaches.
    pub fn is_attained(&self, x: usize, y: usize) -> bool {
        self.attained[x][y]
    }

    /// A matrix given directly; every entry counts as attained.
    pub fn from_rows(objects: Vec<String>, d: Vec<Vec<Weight>>) -> Result<Self, WCatError> {
        let n = objects.len();
        if d.len() != n {
            return Err(WCatError::UnknownObject(d.len().min(n)));
        }
        if let Some(i) = d.iter().position(|r| r.len() != n) {
            return Err(WCatError::UnknownObject(i));
        }
        let attained = alloc::vec![alloc::vec![true; n]; n];
        Ok(CostMatrix { objects, d, attained })
    }

    /// Triples `(x, y, z)` with `d(x, z) > d(x, y) ⊕ d(y, z)`.
    pub fn triangle_violations(&self, kind: CatKind) -> Vec<(usize, usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.d[x][z] > kind.combine(&self.d[x][y], &self.d[y][z]) {
                        out.push((x, y, z));
                    }
                }
            }
        }
        out
    }

    /// The category with one morphism `x -> y` of weight `d(x, y)` for every
    /// finite entry, composing by concatenation.
    pub fn to_category(&self) -> WCatPresentation {
        let n = self.len();
        let mut morphisms = Vec::new();
        let mut index = BTreeMap::new();
        for x in 0..n {
            for y in 0..n {
                if self.d[x][y].is_finite() {
                    index.insert((x, y), morphisms.len());
                    morphisms.push(Morphism {
                        name: alloc::format!("{}->{}", self.objects[x], self.objects[y]),
                        src: x,
                        dst: y,
                        weight: self.d[x][y].clone(),
                    });
                }
            }
        }
        let identities = (0..n).map(|x| index[&(x, x)]).collect();
        let mut composites = BTreeMap::new();
        for (&(x, y), &a) in &index {
            for z in 0..n {
                if let (Some(&b), Some(&c)) = (index.get(&(y, z)), index.get(&(x, z))) {
                    composites.insert((a, b), c);
                }
            }
        }
        WCatPresentation { objects: self.objects.clone(), morphisms, identities, composites }
    }
}

/// Infimum over all paths of the kind's combination of edge weights.
///
/// Floyd–Warshall over the quantale. For the multiplicative kind a cycle of
/// weight below `1` can be repeated indefinitely, so every pair joined
/// through such a cycle has infimum `0`; those entries are set to `0` and
/// marked as not attained.
pub fn best_cost(g: &WGraph, kind: CatKind) -> CostMatrix {
    let n = g.objects.len();
    let mut d = alloc::vec![alloc::vec![Weight::infinity(); n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = kind.unit();
    }
    for e in &g.edges {
        if e.weight < d[e.src][e.dst] {
            d[e.src][e.dst] = e.weight.clone();
        }
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k].is_infinite() {
                continue;
            }
            for j in 0..n {
                let via = kind.combine(&d[i][k], &d[k][j]);
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    let mut attained = alloc::vec![alloc::vec![true; n]; n];
    if kind == CatKind::Multiplicative {
        let one = Weight::one();
        let shrinking: Vec<usize> = (0..n).filter(|&c| d[c][c] < one).collect();
        let mut collapse = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let through = shrinking.iter().any(|&c| d[i][c].is_finite() && d[c][j].is_finite());
                if through && !d[i][j].is_zero() {
                    collapse.push((i, j));
                }
            }
        }
        for (i, j) in collapse {
            d[i][j] = Weight::zero();
            attained[i][j] = false;
        }
    }
    CostMatrix { objects: g.objects.clone(), d, attained }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub src: usize,
    pub dst: usize,
    pub weight: Weight,
}

/// A finite category with weighted morphisms. `composites[(a, b)]` is `b ∘ a`
/// for `a: x -> y`, `b: y -> z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WCatPresentation {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    composites: BTreeMap<(usize, usize), usize>,
}

impl WCatPresentation {
    /// Builds and checks a presentation. Composites with an identity may be
    /// omitted.
    pub fn new<I>(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        composites: I,
    ) -> Result<Self, WCatError>
    where
        I: IntoIterator<Item = ((usize, usize), usize)>,
    {
        let n = objects.len();
        let m = morphisms.len();
        for f in &morphisms {
            for v in [f.src, f.dst] {
                if v >= n {
                    return Err(WCatError::UnknownObject(v));
                }
            }
        }
        if identities.len() != n {
            return Err(WCatError::UnknownObject(identities.len().min(n)));
        }
        for (x, &i) in identities.iter().enumerate() {
            if i >= m {
                return Err(WCatError::UnknownMorphism(i));
            }
            if morphisms[i].src != x || morphisms[i].dst != x {
                return Err(WCatError::BadIdentity { object: x, morphism: i });
            }
        }
        let mut table = BTreeMap::new();
        for ((a, b), c) in composites {
            for k in [a, b, c] {
                if k >= m {
                    return Err(WCatError::UnknownMorphism(k));
                }
            }
            if morphisms[a].dst != morphisms[b].src {
                return Err(WCatError::NotComposable { first: a, second: b });
            }
            table.insert((a, b), c);
        }
        for (a, f) in morphisms.iter().enumerate() {
            table.entry((identities[f.src], a)).or_insert(a);
            table.entry((a, identities[f.dst])).or_insert(a);
        }
        let c = WCatPresentation { objects, morphisms, identities, composites: table };
        c.check_laws()?;
        Ok(c)
    }

    fn check_laws(&self) -> Result<(), WCatError> {
        let m = &self.morphisms;
        for a in 0..m.len() {
            for b in 0..m.len() {
                if m[a].dst != m[b].src {
                    continue;
                }
                let ab = *self.composites.get(&(a, b)).ok_or(WCatError::MissingComposite { first: a, second: b })?;
                if m[ab].src != m[a].src || m[ab].dst != m[b].dst {
                    return Err(WCatError::BadComposite { first: a, second: b });
                }
            }
        }
        for (a, f) in m.iter().enumerate() {
            if self.composites[&(self.identities[f.src], a)] != a || self.composites[&(a, self.identities[f.dst])] != a
            {
                return Err(WCatError::IdentityLaw(a));
            }
        }
        for (&(a, b), &ab) in &self.composites {
            for c in 0..m.len() {
                if m[b].dst != m[c].src {
                    continue;
                }
                let bc = self.composites[&(b, c)];
                if self.composites[&(ab, c)] != self.composites[&(a, bc)] {
                    return Err(WCatError::Associativity(a, b, c));
                }
            }
        }
        Ok(())
    }

    /// One object with only its identity.
    pub fn one_object(identity_weight: Weight) -> Self {
        let morphisms = alloc::vec![Morphism { name: String::from("1"), src: 0, dst: 0, weight: identity_weight }];
        WCatPresentation::new(alloc::vec![String::from("*")], morphisms, alloc::vec![0], []).expect("trivial category")
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    /// `b ∘ a`, if composable.
    pub fn compose(&self, a: usize, b: usize) -> Option<usize> {
        self.composites.get(&(a, b)).copied()
    }

    /// All composable pairs `(a, b)` with their composite.
    pub fn composites(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.composites.iter().map(|(&k, &v)| (k, v))
    }

    pub fn with_weights(&self, weights: impl Fn(&Morphism) -> Weight) -> Self {
        let mut c = self.clone();
        for f in &mut c.morphisms {
            f.weight = weights(f);
        }
        c
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatViolation {
    Identity { object: usize, weight: Weight },
    Composite { first: usize, second: usize, weight: Weight, bound: Weight },
}

/// Every identity and composable pair breaking the kind's weight axioms.
pub fn check_wcat(c: &WCatPresentation, kind: CatKind) -> Vec<CatViolation> {
    let mut out = Vec::new();
    let unit = kind.unit();
    for (x, &i) in c.identities.iter().enumerate() {
        let w = &c.morphisms[i].weight;
        if *w > unit {
            out.push(CatViolation::Identity { object: x, weight: w.clone() });
        }
    }
    for (&(a, b), &ab) in &c.composites {
        let bound = kind.combine(&c.morphisms[a].weight, &c.morphisms[b].weight);
        let w = &c.morphisms[ab].weight;
        if *w > bound {
            out.push(CatViolation::Composite { first: a, second: b, weight: w.clone(), bound });
        }
    }
    out
}

/// A functor between presentations, given on objects and morphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WFunctor {
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

impl WFunctor {
    pub fn identity(c: &WCatPresentation) -> Self {
        WFunctor { objects: (0..c.objects.len()).collect(), morphisms: (0..c.morphisms.len()).collect() }
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &WFunctor) -> WFunctor {
        WFunctor {
            objects: self.objects.iter().map(|&x| g.objects[x]).collect(),
            morphisms: self.morphisms.iter().map(|&a| g.morphisms[a]).collect(),
        }
    }

    /// Checks that `self` is a functor `c -> d`.
    pub fn validate(&self, c: &WCatPresentation, d: &WCatPresentation) -> Result<(), WCatError> {
        let bad = |msg: String| Err(WCatError::NotAFunctor(msg));
        if self.objects.len() != c.objects.len() || self.morphisms.len() != c.morphisms.len() {
            return bad(String::from("map sizes differ from the source category"));
        }
        if let Some(&x) = self.objects.iter().find(|&&x| x >= d.objects.len()) {
            return Err(WCatError::UnknownObject(x));
        }
        if let Some(&a) = self.morphisms.iter().find(|&&a| a >= d.morphisms.len()) {
            return Err(WCatError::UnknownMorphism(a));
        }
        for (a, f) in c.morphisms.iter().enumerate() {
            let g = &d.morphisms[self.morphisms[a]];
            if g.src != self.objects[f.src] || g.dst != self.objects[f.dst] {
                return bad(alloc::format!("{} is sent to {} with wrong endpoints", f.name, g.name));
            }
        }
        for (x, &i) in c.identities.iter().enumerate() {
            if self.morphisms[i] != d.identities[self.objects[x]] {
                return bad(alloc::format!("identity of {} is not preserved", c.objects[x]));
            }
        }
        for (&(a, b), &ab) in &c.composites {
            if d.compose(self.morphisms[a], self.morphisms[b]) != Some(self.morphisms[ab]) {
                return bad(alloc::format!(
                    "composite of {} then {} is not preserved",
                    c.morphisms[a].name,
                    c.morphisms[b].name
                ));
            }
        }
        Ok(())
    }
}

/// Morphisms `a` of `c` with `|F a| > |a|`. The contraction condition is the
/// same for all three kinds.
pub fn check_wfunctor(f: &WFunctor, c: &WCatPresentation, d: &WCatPresentation) -> Result<Vec<usize>, WCatError> {
    f.validate(c, d)?;
    Ok((0..c.morphisms.len()).filter(|&a| d.morphisms[f.morphisms[a]].weight > c.morphisms[a].weight).collect())
}
