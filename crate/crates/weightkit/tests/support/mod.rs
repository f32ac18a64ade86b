//! Independent oracles for the acceptance suite. Nothing here calls the
//! library's arithmetic; values are converted in and out at the edges.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use weightkit_core::impedance::{Element, NetworkTree, ProjValue};
use weightkit_core::linlog::{Constant, Formula};
use weightkit_core::{Rational, Weight};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn zero_q() -> Rational {
    q(0, 1)
}

/// `[0, inf]` with the boundary conventions spelled out case by case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ext {
    Fin(Rational),
    Inf,
}

impl Ext {
    pub fn from_weight(w: &Weight) -> Ext {
        w.as_rational().map_or(Ext::Inf, |r| Ext::Fin(r.clone()))
    }

    pub fn to_weight(&self) -> Weight {
        match self {
            Ext::Fin(r) => Weight::finite(r.clone()).expect("nonnegative"),
            Ext::Inf => Weight::infinity(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Ext::Fin(r) if *r == zero_q())
    }

    pub fn add(&self, o: &Ext) -> Ext {
        match (self, o) {
            (Ext::Fin(a), Ext::Fin(b)) => Ext::Fin(a + b),
            _ => Ext::Inf,
        }
    }

    /// `0 · inf = inf`.
    pub fn mul(&self, o: &Ext) -> Ext {
        match (self, o) {
            (Ext::Fin(a), Ext::Fin(b)) => Ext::Fin(a * b),
            _ => Ext::Inf,
        }
    }

    pub fn max(&self, o: &Ext) -> Ext {
        if self.cmp_ext(o) == Ordering::Less {
            o.clone()
        } else {
            self.clone()
        }
    }

    pub fn min(&self, o: &Ext) -> Ext {
        if self.cmp_ext(o) == Ordering::Greater {
            o.clone()
        } else {
            self.clone()
        }
    }

    pub fn cmp_ext(&self, o: &Ext) -> Ordering {
        match (self, o) {
            (Ext::Inf, Ext::Inf) => Ordering::Equal,
            (Ext::Inf, _) => Ordering::Greater,
            (_, Ext::Inf) => Ordering::Less,
            (Ext::Fin(a), Ext::Fin(b)) => a.cmp(b),
        }
    }

    pub fn ge(&self, o: &Ext) -> bool {
        self.cmp_ext(o) != Ordering::Less
    }

    /// `1/x` with `0` and `inf` exchanged.
    pub fn inv(&self) -> Ext {
        match self {
            Ext::Inf => Ext::Fin(zero_q()),
            Ext::Fin(r) if *r == zero_q() => Ext::Inf,
            Ext::Fin(r) => Ext::Fin(q(1, 1) / r),
        }
    }

    /// `x • y`: `0` absorbs first, then `inf`.
    pub fn bullet(&self, o: &Ext) -> Ext {
        if self.is_zero() || o.is_zero() {
            Ext::Fin(zero_q())
        } else {
            self.mul(o)
        }
    }

    /// `n - m` truncated at `0`, with `inf - inf = 0`.
    pub fn minus(n: &Ext, m: &Ext) -> Ext {
        match (n, m) {
            (Ext::Inf, Ext::Inf) => Ext::Fin(zero_q()),
            (Ext::Inf, _) => Ext::Inf,
            (_, Ext::Inf) => Ext::Fin(zero_q()),
            (Ext::Fin(a), Ext::Fin(b)) => Ext::Fin(if a > b { a - b } else { zero_q() }),
        }
    }

    /// `n / m` with `0/0 = inf/inf = 0`, `n/0 = inf`, `n/inf = 0`.
    pub fn divide(n: &Ext, m: &Ext) -> Ext {
        match (n, m) {
            (Ext::Inf, Ext::Inf) => Ext::Fin(zero_q()),
            (_, Ext::Inf) => Ext::Fin(zero_q()),
            _ if n.is_zero() && m.is_zero() => Ext::Fin(zero_q()),
            (_, _) if m.is_zero() => Ext::Inf,
            (Ext::Inf, _) => Ext::Inf,
            (Ext::Fin(a), Ext::Fin(b)) => Ext::Fin(a / b),
        }
    }
}

pub fn grid() -> Vec<Ext> {
    let mut g: Vec<Ext> =
        [(0, 1), (1, 3), (1, 2), (1, 1), (3, 2), (2, 1), (7, 1)].iter().map(|&(n, d)| Ext::Fin(q(n, d))).collect();
    g.push(Ext::Inf);
    g
}

/// Formula evaluation in `([0, inf], >=, ·, 1)`.
pub fn eval(f: &Formula, env: &[(&str, Ext)]) -> Ext {
    let go = |g: &Formula| eval(g, env);
    match f {
        Formula::Atom(name) => env.iter().find(|(n, _)| n == name).expect("bound").1.clone(),
        Formula::Const(Constant::One | Constant::Bottom) => Ext::Fin(q(1, 1)),
        Formula::Const(Constant::Top) => Ext::Fin(zero_q()),
        Formula::Const(Constant::Zero) => Ext::Inf,
        Formula::Dual(a) => go(a).inv(),
        Formula::Tensor(a, b) => go(a).mul(&go(b)),
        Formula::Par(a, b) => go(a).bullet(&go(b)),
        Formula::Lollipop(a, b) => Ext::divide(&go(b), &go(a)),
        Formula::With(a, b) => go(a).max(&go(b)),
        Formula::Plus(a, b) => go(a).min(&go(b)),
    }
}

pub fn random_formula(rng: &mut ChaCha8Rng, depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..8) {
            0 => Formula::Const(Constant::One),
            1 => Formula::Const(Constant::Bottom),
            2 => Formula::Const(Constant::Top),
            3 => Formula::Const(Constant::Zero),
            4 | 5 => Formula::atom("x"),
            _ => Formula::atom("y"),
        };
    }
    let a = random_formula(rng, depth - 1);
    let b = random_formula(rng, depth - 1);
    match rng.gen_range(0..6) {
        0 => Formula::dual(a),
        1 => Formula::tensor(a, b),
        2 => Formula::par(a, b),
        3 => Formula::lollipop(a, b),
        4 => Formula::with(a, b),
        _ => Formula::plus(a, b),
    }
}

/// Weight of a map with the given source and image weights in one of the
/// two structures: `sup hom(|x|, |f x|)`.
pub fn map_weight(additive: bool, pairs: impl IntoIterator<Item = (Ext, Ext)>) -> Ext {
    pairs.into_iter().fold(Ext::Fin(zero_q()), |acc, (src, img)| {
        let h = if additive { Ext::minus(&img, &src) } else { Ext::divide(&img, &src) };
        acc.max(&h)
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathKind {
    Additive,
    Multiplicative,
    Sup,
}

fn combine(kind: PathKind, a: &Ext, b: &Ext) -> Ext {
    match kind {
        PathKind::Additive => a.add(b),
        PathKind::Multiplicative => a.mul(b),
        PathKind::Sup => a.max(b),
    }
}

fn unit(kind: PathKind) -> Ext {
    match kind {
        PathKind::Multiplicative => Ext::Fin(q(1, 1)),
        _ => Ext::Fin(zero_q()),
    }
}

/// Calls `visit(end, cost)` for every simple path from `start`, including
/// the empty one.
fn simple_paths(
    n: usize,
    edges: &[(usize, usize, Ext)],
    kind: PathKind,
    start: usize,
    visit: &mut dyn FnMut(usize, &Ext),
) {
    fn go(
        at: usize,
        cost: Ext,
        seen: &mut Vec<bool>,
        edges: &[(usize, usize, Ext)],
        kind: PathKind,
        visit: &mut dyn FnMut(usize, &Ext),
    ) {
        visit(at, &cost);
        for (s, t, w) in edges {
            if *s == at && !seen[*t] {
                seen[*t] = true;
                go(*t, combine(kind, &cost, w), seen, edges, kind, visit);
                seen[*t] = false;
            }
        }
    }
    let mut seen = vec![false; n];
    seen[start] = true;
    go(start, unit(kind), &mut seen, edges, kind, visit);
}

/// Least cost over all walks by path enumeration. For the multiplicative
/// kind, a simple cycle of product below 1 that can be reached and left
/// along finite paths drives the infimum to 0.
pub fn path_oracle(n: usize, edges: &[(usize, usize, Ext)], kind: PathKind) -> Vec<Vec<Ext>> {
    let mut d = vec![vec![Ext::Inf; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        simple_paths(n, edges, kind, i, &mut |end, cost| {
            row[end] = row[end].min(cost);
        });
    }
    if kind != PathKind::Multiplicative {
        return d;
    }
    // finite reachability, as simple paths over finite edges
    let finite: Vec<(usize, usize, Ext)> = edges.iter().filter(|e| e.2 != Ext::Inf).cloned().collect();
    let mut reach = vec![vec![false; n]; n];
    for (i, row) in reach.iter_mut().enumerate() {
        simple_paths(n, &finite, kind, i, &mut |end, _| row[end] = true);
    }
    // vertices on a simple cycle of product < 1: a simple path c -> s plus an edge s -> c
    let one = Ext::Fin(q(1, 1));
    let shrinking: Vec<bool> = (0..n)
        .map(|c| {
            let mut to = vec![Ext::Inf; n];
            simple_paths(n, edges, kind, c, &mut |end, cost| to[end] = to[end].min(cost));
            edges.iter().any(|(s, t, w)| *t == c && !to[*s].mul(w).ge(&one))
        })
        .collect();
    for i in 0..n {
        for j in 0..n {
            if (0..n).any(|c| shrinking[c] && reach[i][c] && reach[c][j]) {
                d[i][j] = Ext::Fin(zero_q());
            }
        }
    }
    d
}

/// For every integer reachable as a sum of at most `parts` products `a · b`
/// with `0 < |a|, |b| <= coeff`, the least total cost, each product costing
/// `w(a) w(b)` where `w(a) = a` for `a >= 0` and `inf` (`None`) otherwise.
/// The empty sum reaches `0` at cost `0`.
pub fn integer_tensor_oracle(parts: usize, coeff: i64) -> BTreeMap<i64, Option<i64>> {
    let values: Vec<i64> = (-coeff..=coeff).filter(|&v| v != 0).collect();
    let mut products = Vec::new();
    for &a in &values {
        for &b in &values {
            products.push((a * b, (a > 0 && b > 0).then_some(a * b)));
        }
    }
    fn better(old: Option<&Option<i64>>, new: Option<i64>) -> bool {
        match (old, new) {
            (None, _) => true,
            (Some(None), Some(_)) => true,
            (Some(Some(o)), Some(n)) => n < *o,
            _ => false,
        }
    }
    fn go(
        products: &[(i64, Option<i64>)],
        from: usize,
        left: usize,
        sum: i64,
        cost: Option<i64>,
        best: &mut BTreeMap<i64, Option<i64>>,
    ) {
        if better(best.get(&sum), cost) {
            best.insert(sum, cost);
        }
        if left == 0 {
            return;
        }
        for (i, &(p, c)) in products.iter().enumerate().skip(from) {
            let cost = cost.and_then(|x| c.map(|y| x + y));
            go(products, i, left - 1, sum + p, cost, best);
        }
    }
    let mut best = BTreeMap::new();
    go(&products, 0, parts, 0, Some(0), &mut best);
    best
}

/// Exact complex numbers on the Riemann sphere, `None` for `inf`.
pub type Cx = Option<(Rational, Rational)>;

fn cx_is_zero(z: &Cx) -> bool {
    matches!(z, Some((a, b)) if *a == zero_q() && *b == zero_q())
}

fn series(z: &Cx, w: &Cx) -> Cx {
    match (z, w) {
        (Some((a, b)), Some((c, d))) => Some((a + c, b + d)),
        _ => None,
    }
}

/// `zw / (z + w)`, case by case.
fn parallel(z: &Cx, w: &Cx) -> Cx {
    if cx_is_zero(z) || cx_is_zero(w) {
        return Some((zero_q(), zero_q()));
    }
    match (z, w) {
        (None, _) => w.clone(),
        (_, None) => z.clone(),
        (Some((a, b)), Some((c, d))) => {
            let (sr, si) = (a + c, b + d);
            if sr == zero_q() && si == zero_q() {
                return None;
            }
            let (pr, pi) = (a * c - b * d, a * d + b * c);
            let n = &sr * &sr + &si * &si;
            Some(((&pr * &sr + &pi * &si) / &n, (&pi * &sr - &pr * &si) / &n))
        }
    }
}

pub fn network_oracle(net: &NetworkTree, omega: &Rational) -> Cx {
    match net {
        NetworkTree::Leaf(Element::R, v) => Some((v.clone(), zero_q())),
        NetworkTree::Leaf(Element::L, v) => Some((zero_q(), omega * v)),
        NetworkTree::Leaf(Element::C, v) => Some((zero_q(), -(q(1, 1) / (omega * v)))),
        NetworkTree::Series(cs) => {
            cs.iter().map(|c| network_oracle(c, omega)).reduce(|a, b| series(&a, &b)).expect("nonempty")
        }
        NetworkTree::Parallel(cs) => {
            cs.iter().map(|c| network_oracle(c, omega)).reduce(|a, b| parallel(&a, &b)).expect("nonempty")
        }
    }
}

pub fn proj_to_cx(z: &ProjValue) -> Cx {
    z.finite().map(|g| (g.re.clone(), g.im.clone()))
}

/// Depth at most `depth`, at most `leaves` leaves.
pub fn random_network(rng: &mut ChaCha8Rng, depth: usize, leaves: usize) -> NetworkTree {
    fn go(rng: &mut ChaCha8Rng, depth: usize, budget: &mut usize) -> NetworkTree {
        if depth == 1 || *budget < 2 || rng.gen_bool(0.3) {
            *budget -= 1;
            let kind = [Element::R, Element::L, Element::C][rng.gen_range(0..3)];
            return NetworkTree::Leaf(kind, q(rng.gen_range(1..5), rng.gen_range(1..3)));
        }
        let k = rng.gen_range(2..=3).min(*budget);
        let mut children = Vec::new();
        for i in 0..k {
            // keep one leaf for each later sibling
            let mut own = *budget - (k - i - 1);
            let before = own;
            children.push(go(rng, depth - 1, &mut own));
            *budget -= before - own;
        }
        if rng.gen_bool(0.5) {
            NetworkTree::Series(children)
        } else {
            NetworkTree::Parallel(children)
        }
    }
    let mut budget = leaves;
    go(rng, depth, &mut budget)
}
