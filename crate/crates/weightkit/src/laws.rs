//! Named law suites over every module, with per-law counts and the first
//! counterexample. Randomized laws draw from a ChaCha generator seeded by
//! [`Config::seed`], so reports are reproducible.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weightkit_core::impedance::{
    cubical_check_cases, pc_add, pc_parallel, reduce_network, Element, GaussQ, NetworkTree, ProjValue,
};
use weightkit_core::linlog::{self, Constant, Formula, Validity};
use weightkit_core::transform::{prob_hom, to_probabilistic, transform_back};
use weightkit_core::wab::{
    abs_weight, check_algebra, int_weight, integer_ring, integer_tensor_bound_check, SearchBound,
};
use weightkit_core::wcat::{best_cost, check_wcat, endofunctor_check, CatKind, PlFunction, WGraph};
use weightkit_core::wset::{tensor, transpose, Elem, WMap, WSet};
use weightkit_core::{Rational, Structure, Weight};

use crate::formats::FormatError;

pub const SUITES: &[&str] = &[
    "residuation",
    "star-autonomy",
    "semiring",
    "linlog",
    "wset",
    "closure",
    "ring",
    "impedance",
    "transform",
    "endofunctor",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub samples: usize,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config { samples: 500, seed: 0 }
    }
}

/// The internal homs under test. The standard model uses the library's;
/// overrides replace single table entries, which is how a corrupted hom is
/// injected.
#[derive(Clone, Debug, Default)]
pub struct Model {
    overrides: Vec<(Structure, Weight, Weight, Weight)>,
}

impl Model {
    pub fn standard() -> Self {
        Model::default()
    }

    pub fn with_override(mut self, s: Structure, a: Weight, b: Weight, value: Weight) -> Self {
        self.overrides.push((s, a, b, value));
        self
    }

    /// Lines `<additive|multiplicative> <a> <b> <value>` setting `hom(a, b)`.
    pub fn parse_hom_table(text: &str) -> Result<Self, FormatError> {
        let mut model = Model::standard();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || FormatError::Line { line: i + 1, message: "expected `<structure> <a> <b> <value>`".into() };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [s, a, b, v] = fields[..] else {
                return Err(bad());
            };
            let s = match s {
                "additive" => Structure::Additive,
                "multiplicative" => Structure::Multiplicative,
                _ => return Err(bad()),
            };
            let w = |t: &str| t.parse::<Weight>().map_err(|_| bad());
            model = model.with_override(s, w(a)?, w(b)?, w(v)?);
        }
        Ok(model)
    }

    pub fn hom(&self, s: Structure, a: &Weight, b: &Weight) -> Weight {
        self.overrides
            .iter()
            .rev()
            .find(|(t, x, y, _)| *t == s && x == a && y == b)
            .map_or_else(|| s.hom(a, b), |(_, _, _, v)| v.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawResult {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub counterexample: Option<String>,
}

impl LawResult {
    fn new(name: &str) -> Self {
        LawResult { name: name.into(), checked: 0, failed: 0, counterexample: None }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub laws: Vec<LawResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(LawResult::passed)
    }
}

#[derive(Debug, thiserror::Error)]
#[error("unknown suite `{0}`")]
pub struct UnknownSuite(pub String);

/// Runs one suite, or every suite for `all`.
pub fn run(name: &str, cfg: Config, model: &Model) -> Result<Vec<SuiteReport>, UnknownSuite> {
    if name == "all" {
        return Ok(SUITES.iter().map(|s| run_one(s, cfg, model)).collect());
    }
    if !SUITES.contains(&name) {
        return Err(UnknownSuite(name.into()));
    }
    Ok(vec![run_one(name, cfg, model)])
}

fn run_one(name: &str, cfg: Config, model: &Model) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n = cfg.samples;
    let laws = match name {
        "residuation" => residuation(model, &mut rng, n),
        "star-autonomy" => star_autonomy(model, &mut rng, n),
        "semiring" => semiring(),
        "linlog" => linlog_laws(&mut rng, n),
        "wset" => wset_laws(&mut rng, n),
        "closure" => closure(&mut rng, n),
        "ring" => ring(),
        "impedance" => impedance(&mut rng, n),
        "transform" => transform_laws(&mut rng, n),
        "endofunctor" => endofunctor(&mut rng, n),
        _ => unreachable!("checked by run"),
    };
    SuiteReport { suite: name.into(), laws }
}

/// One line per law, `name<TAB>checked<TAB>failed<TAB>pass|FAIL`, then the
/// counterexample of each failing law and a summary line.
pub fn render(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    let (mut total, mut failing) = (0, 0);
    for r in reports {
        writeln!(out, "suite {}", r.suite).expect("string write");
        for law in &r.laws {
            total += 1;
            let verdict = if law.passed() { "pass" } else { "FAIL" };
            writeln!(out, "{}\t{}\t{}\t{verdict}", law.name, law.checked, law.failed).expect("string write");
            if let Some(c) = &law.counterexample {
                failing += 1;
                writeln!(out, "  counterexample: {c}").expect("string write");
            }
        }
    }
    writeln!(out, "summary\t{total} laws\t{failing} failed").expect("string write");
    out
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn random_weight(rng: &mut ChaCha8Rng) -> Weight {
    match rng.gen_range(0..8) {
        0 => Weight::infinity(),
        1 => Weight::zero(),
        2 | 3 => Weight::grid().choose(rng).expect("nonempty").clone(),
        _ => Weight::ratio(rng.gen_range(0..40), rng.gen_range(1..9)),
    }
}

fn grid_weight(rng: &mut ChaCha8Rng) -> Weight {
    Weight::grid().choose(rng).expect("nonempty").clone()
}

fn residuation(model: &Model, rng: &mut ChaCha8Rng, n: usize) -> Vec<LawResult> {
    let mut out = Vec::new();
    for (s, label) in [(Structure::Additive, "additive"), (Structure::Multiplicative, "multiplicative")] {
        let law = |l: &Weight, m: &Weight, k: &Weight| (&s.tensor(l, m) >= k) == (*l >= model.hom(s, m, k));
        let describe = |l: &Weight, m: &Weight, k: &Weight| {
            format!(
                "{label} l={l} m={m} n={k}: tensor(l,m) >= n is {}, l >= hom(m,n)={} is {}",
                &s.tensor(l, m) >= k,
                model.hom(s, m, k),
                *l >= model.hom(s, m, k)
            )
        };
        let g = Weight::grid();
        let mut grid = LawResult::new(&format!("{label} residuation on grid triples"));
        for l in &g {
            for m in &g {
                for k in &g {
                    grid.check(law(l, m, k), || describe(l, m, k));
                }
            }
        }
        let mut random = LawResult::new(&format!("{label} residuation on random triples"));
        for _ in 0..n {
            let (l, m, k) = (random_weight(rng), random_weight(rng), random_weight(rng));
            random.check(law(&l, &m, &k), || describe(&l, &m, &k));
        }
        out.push(grid);
        out.push(random);
    }
    out
}

fn star_autonomy(model: &Model, rng: &mut ChaCha8Rng, n: usize) -> Vec<LawResult> {
    let mul = Structure::Multiplicative;
    let law = |m: &Weight, l: &Weight| model.hom(mul, m, l) == (m * &l.inv()).inv();
    let describe = |m: &Weight, l: &Weight| {
        format!("m={m} l={l}: hom(m,l)={} but (m.l*)*={}", model.hom(mul, m, l), (m * &l.inv()).inv())
    };
    let g = Weight::grid();
    let mut grid = LawResult::new("hom(m,l) = (m.l*)* on grid pairs");
    for m in &g {
        for l in &g {
            grid.check(law(m, l), || describe(m, l));
        }
    }
    let mut random = LawResult::new("hom(m,l) = (m.l*)* on random pairs");
    let mut involution = LawResult::new("l** = l");
    for _ in 0..n {
        let (m, l) = (random_weight(rng), random_weight(rng));
        random.check(law(&m, &l), || describe(&m, &l));
        involution.check(l.inv().inv() == l, || format!("l={l}"));
    }
    let mut dual_par = LawResult::new("A -o B = A^ @ B over grid environments");
    for _ in 0..n {
        let (a, b) = (random_formula(rng, 2), random_formula(rng, 2));
        let lhs = Formula::lollipop(a.clone(), b.clone());
        let rhs = Formula::par(Formula::dual(a), b);
        let mut atoms = lhs.atoms();
        atoms.extend(rhs.atoms());
        for env in linlog::grid_environments(atoms) {
            let (x, y) = (linlog::eval(&lhs, &env).expect("bound"), linlog::eval(&rhs, &env).expect("bound"));
            dual_par.check(x == y, || format!("{lhs} = {x} but {rhs} = {y}"));
        }
    }
    vec![grid, random, involution, dual_par]
}

fn semiring() -> Vec<LawResult> {
    let g = Weight::grid();
    let mut comm = LawResult::new("+ and . commute on the grid");
    let mut assoc = LawResult::new("+ and . associate on the grid");
    let mut dist = LawResult::new(". distributes over + on the grid");
    let mut units = LawResult::new("units 0 for + and 1 for .");
    for a in &g {
        units.check(a + &Weight::zero() == *a && a * &Weight::one() == *a, || format!("a={a}"));
        for b in &g {
            comm.check(a + b == b + a && a * b == b * a, || format!("a={a} b={b}"));
            for c in &g {
                assoc.check(&(a + b) + c == a + &(b + c) && &(a * b) * c == a * &(b * c), || {
                    format!("a={a} b={b} c={c}")
                });
                dist.check(a * &(b + c) == &(a * b) + &(a * c), || format!("a={a} b={b} c={c}"));
            }
        }
    }
    let (zero, inf) = (Weight::zero(), Weight::infinity());
    let seven = Weight::from_int(7);
    let mut forms = LawResult::new("undetermined forms");
    let table = [
        ("0.inf = inf", &zero * &inf == inf),
        ("0 bullet inf = 0", zero.bullet(&inf) == zero),
        ("inf - inf = 0", weightkit_core::hom_plus(&inf, &inf) == zero),
        ("0/0 = 0", weightkit_core::hom_dot(&zero, &zero) == zero),
        ("inf/inf = 0", weightkit_core::hom_dot(&inf, &inf) == zero),
        ("7/0 = inf", weightkit_core::hom_dot(&zero, &seven) == inf),
        ("7/inf = 0", weightkit_core::hom_dot(&inf, &seven) == zero),
    ];
    for (name, ok) in table {
        forms.check(ok, || name.into());
    }
    vec![comm, assoc, dist, units, forms]
}

/// A random formula over atoms `x`, `y` and the four constants.
pub fn random_formula(rng: &mut ChaCha8Rng, depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..10) {
            0 => Formula::Const(Constant::One),
            1 => Formula::Const(Constant::Bottom),
            2 => Formula::Const(Constant::Top),
            3 => Formula::Const(Constant::Zero),
            4..=6 => Formula::atom("x"),
            _ => Formula::atom("y"),
        };
    }
    let a = random_formula(rng, depth - 1);
    match rng.gen_range(0..7) {
        0 => Formula::dual(a),
        k => {
            let b = random_formula(rng, depth - 1);
            match k {
                1 => Formula::tensor(a, b),
                2 => Formula::par(a, b),
                3 => Formula::lollipop(a, b),
                4 => Formula::with(a, b),
                5 => Formula::plus(a, b),
                _ => Formula::par(Formula::dual(a), b),
            }
        }
    }
}

fn linlog_laws(rng: &mut ChaCha8Rng, n: usize) -> Vec<LawResult> {
    let x = || Formula::atom("x");
    let mut models = LawResult::new("model checks");
    let par = Formula::par(x(), Formula::dual(x()));
    models.check(linlog::valid_on_grid(&par).is_valid(), || format!("{par} is not valid"));
    let lolli = Formula::lollipop(x(), x());
    models.check(linlog::valid_on_grid(&lolli).is_valid(), || format!("{lolli} is not valid"));
    let tensor = Formula::tensor(x(), Formula::dual(x()));
    let refuted = match linlog::valid_on_grid(&tensor) {
        Validity::Counterexample { env, value } => env.get("x") == Some(&Weight::zero()) && value.is_infinite(),
        Validity::Valid => false,
    };
    models.check(refuted, || format!("{tensor} is not refuted at x = 0 with value inf"));

    let mut round_trip = LawResult::new("print then parse is the identity");
    let mut involution = LawResult::new("A^^ = A in the model");
    let mut de_morgan = LawResult::new("(A * B)^ = A^ @ B^ in the model");
    for _ in 0..n {
        let a = random_formula(rng, 3);
        let b = random_formula(rng, 2);
        let text = a.to_string();
        round_trip.check(linlog::parse(&text).as_ref() == Ok(&a), || text.clone());
        let env = linlog::Environment::new().with("x", grid_weight(rng)).with("y", grid_weight(rng));
        let ev = |f: &Formula| linlog::eval(f, &env).expect("bound");
        involution.check(ev(&Formula::dual(Formula::dual(a.clone()))) == ev(&a), || format!("{a}"));
        let lhs = Formula::dual(Formula::tensor(a.clone(), b.clone()));
        let rhs = Formula::par(Formula::dual(a.clone()), Formula::dual(b.clone()));
        de_morgan.check(ev(&lhs) == ev(&rhs), || format!("{lhs} vs {rhs}"));
    }
    vec![models, round_trip, involution, de_morgan]
}

fn random_wset(rng: &mut ChaCha8Rng, prefix: &str, min: usize, max: usize) -> WSet {
    let n = rng.gen_range(min..=max);
    WSet::new((0..n).map(|i| (Elem::Atom(format!("{prefix}{i}")), grid_weight(rng)))).expect("distinct ids")
}

fn random_map(rng: &mut ChaCha8Rng, x: WSet, y: WSet) -> WMap {
    let images = (0..x.len()).map(|_| rng.gen_range(0..y.len())).collect();
    WMap::from_indices(x, y, images).expect("in range")
}

fn wset_laws(rng: &mut ChaCha8Rng, n: usize) -> Vec<LawResult> {
    let mut exp = LawResult::new("exponential law |f| = |transpose f|");
    let mut comp = LawResult::new("|g f| <= |f| (x) |g|");
    for _ in 0..n {
        let x = random_wset(rng, "x", 0, 3);
        let y = random_wset(rng, "y", 0, 3);
        let z = random_wset(rng, "z", 1, 3);
        for s in [Structure::Additive, Structure::Multiplicative] {
            let f = random_map(rng, tensor(&x, &y, s), z.clone());
            let g = transpose(&f, &x, &y, s).expect("hom object within limits");
            exp.check(f.weight(s) == g.weight(s), || format!("{s:?}: |f| = {} but |g| = {}", f.weight(s), g.weight(s)));
        }
        let yy = random_wset(rng, "y", 1, 3);
        let f = random_map(rng, x.clone(), yy.clone());
        let g = random_map(rng, yy, z);
        let gf = f.then(&g).expect("composable");
        for s in [Structure::Additive, Structure::Multiplicative] {
            let bound = s.tensor(&f.weight(s), &g.weight(s));
            comp.check(gf.weight(s) <= bound, || format!("{s:?}: |gf| = {} > {bound}", gf.weight(s)));
        }
    }
    vec![exp, comp]
}

/// A random graph with at most 6 objects and 12 edges of grid weight.
pub fn random_graph(rng: &mut ChaCha8Rng) -> WGraph {
    let n = rng.gen_range(1..=6);
    let mut g = WGraph::new();
    for i in 0..n {
        g.object(&format!("v{i}"));
    }
    for _ in 0..rng.gen_range(0..=12) {
        let (s, t) = (rng.gen_range(0..n), rng.gen_range(0..n));
        g.add_edge(s, t, grid_weight(rng)).expect("objects exist");
    }
    g
}

fn closure(rng: &mut ChaCha8Rng, n: usize) -> Vec<LawResult> {
    let mut triangle = LawResult::new("triangle law of best_cost");
    let mut category = LawResult::new("closure is a weighted category");
    let mut edges = LawResult::new("best_cost is below every edge");
    for _ in 0..n {
        let g = random_graph(rng);
        for kind in CatKind::ALL {
            let d = best_cost(&g, kind);
            let bad = d.triangle_violations(kind);
            triangle.check(bad.is_empty(), || format!("{kind}: triple {:?}", bad[0]));
            let bad = check_wcat(&d.to_category(), kind);
            category.check(bad.is_empty(), || format!("{kind}: {:?}", bad[0]));
            for e in g.edges() {
                edges.check(*d.get(e.src, e.dst) <= e.weight, || format!("{kind}: edge {} -> {}", e.src, e.dst));
            }
        }
    }
    vec![triangle, category, edges]
}

fn ring() -> Vec<LawResult> {
    let mut out = Vec::new();
    for (label, weight) in [("wZ", int_weight as fn(i64) -> Weight), ("|Z|", abs_weight)] {
        let mut axioms = LawResult::new(&format!("ring axioms of {label} on [-3,3]"));
        let report = check_algebra(&integer_ring(-3, 3, weight)).expect("well-formed sample");
        axioms.checked = report.checked;
        axioms.failed = report.violations.len();
        axioms.counterexample = report.violations.first().map(|v| format!("{v:?}"));
        let mut tensor = LawResult::new(&format!("|ab| <= |a (x) b| for {label} on [-3,3]"));
        let report = integer_tensor_bound_check(-3, 3, weight, SearchBound::default());
        tensor.checked = report.checked;
        tensor.failed = report.violations.len();
        tensor.counterexample = report.violations.first().map(|v| format!("{v:?}"));
        out.push(axioms);
        out.push(tensor);
    }
    out
}

pub fn random_proj(rng: &mut ChaCha8Rng) -> ProjValue {
    match rng.gen_range(0..10) {
        0 => ProjValue::Infinity,
        1 => ProjValue::zero(),
        2 => ProjValue::one(),
        _ => {
            let d = rng.gen_range(1..=4);
            ProjValue::Finite(GaussQ::new(q(rng.gen_range(-8..=8), d), q(rng.gen_range(-8..=8), d)))
        }
    }
}

/// A random series-parallel network of depth at most 4 with at most 10 leaves.
pub fn random_network(rng: &mut ChaCha8Rng) -> NetworkTree {
    fn go(rng: &mut ChaCha8Rng, depth: usize, budget: &mut usize) -> NetworkTree {
        if depth == 1 || *budget <= 1 || rng.gen_bool(0.35) {
            *budget = budget.saturating_sub(1);
            let kind = *[Element::R, Element::L, Element::C].choose(rng).expect("nonempty");
            return NetworkTree::Leaf(kind, q(rng.gen_range(1..10), rng.gen_range(1..4)));
        }
        let k = rng.gen_range(2..=3);
        let mut children = Vec::new();
        for _ in 0..k {
            if *budget == 0 {
                break;
            }
            children.push(go(rng, depth - 1, budget));
        }
        if rng.gen_bool(0.5) {
            NetworkTree::Series(children)
        } else {
            NetworkTree::Parallel(children)
        }
    }
    let mut budget = 10;
    go(rng, 4, &mut budget)
}

fn impedance(rng: &mut ChaCha8Rng, n: usize) -> Vec<LawResult> {
    let cases: Vec<(ProjValue, ProjValue)> = (0..n).map(|_| (random_proj(rng), random_proj(rng))).collect();
    let report = cubical_check_cases(&cases);
    let mut cubical = LawResult::new("cubical semiring identities");
    cubical.checked = report.checked;
    cubical.failed = report.violations.len();
    cubical.counterexample = report.violations.first().map(|v| {
        let ops: Vec<String> = v.operands.iter().map(ToString::to_string).collect();
        format!("{} at [{}]", v.law, ops.join(", "))
    });
    let mut order = LawResult::new("series and parallel ignore grouping and order");
    let omega = q(3, 2);
    for _ in 0..n.min(200) {
        let (a, b, c) = (random_network(rng), random_network(rng), random_network(rng));
        let z = |t: &NetworkTree| reduce_network(t, &omega).expect("valid network");
        let (za, zb, zc) = (z(&a), z(&b), z(&c));
        let nested = NetworkTree::Series(vec![a.clone(), NetworkTree::Series(vec![b.clone(), c.clone()])]);
        order.check(z(&nested) == pc_add(&pc_add(&zc, &za), &zb), || "series".into());
        let nested = NetworkTree::Parallel(vec![NetworkTree::Parallel(vec![a, b]), c]);
        order.check(z(&nested) == pc_parallel(&zc, &pc_parallel(&zb, &za)), || "parallel".into());
    }
    vec![cubical, order]
}

fn transform_laws(rng: &mut ChaCha8Rng, n: usize) -> Vec<LawResult> {
    let mut round_trip = LawResult::new("from_prob(to_prob(l)) = l within 1e-9");
    let mut transport = LawResult::new("p(hom+(m,n)) = min(1, p(n)/p(m)) within 1e-12");
    let mut values: Vec<Weight> = Weight::grid();
    values.extend((0..n).map(|_| random_weight(rng)));
    for w in values.iter().filter(|w| w.is_finite()) {
        let back = transform_back(to_probabilistic(w)).value;
        round_trip.check((back - w.to_f64()).abs() <= 1e-9, || format!("l={w} came back as {back}"));
    }
    let pairs = values.iter().flat_map(|a| values.iter().take(16).map(move |b| (a, b)));
    for (m, k) in pairs {
        let lhs = to_probabilistic(&weightkit_core::hom_plus(m, k)).value;
        let rhs = prob_hom(to_probabilistic(m).value, to_probabilistic(k).value);
        transport.check((lhs - rhs).abs() <= 1e-12, || format!("m={m} n={k}: {lhs} vs {rhs}"));
    }
    vec![round_trip, transport]
}

fn endofunctor(rng: &mut ChaCha8Rng, n: usize) -> Vec<LawResult> {
    let mut examples = LawResult::new("2s passes and s+1 fails");
    let double = PlFunction::linear(q(2, 1)).expect("positive slope");
    examples.check(endofunctor_check(&double).passed(), || "2s rejected".into());
    let shift = PlFunction::affine(q(1, 1), q(1, 1)).expect("valid");
    examples.check(!endofunctor_check(&shift).passed(), || "s+1 accepted".into());
    let mut collapse = LawResult::new("inf-hat after 0-hat = 0-hat on the grid");
    for at_inf in [Weight::zero(), Weight::infinity()] {
        let zero_hat = PlFunction::zero_hat(at_inf.clone());
        let composite = PlFunction::infinity_hat().after(&zero_hat);
        for s in Weight::grid() {
            let ok = composite.as_ref().is_ok_and(|c| c.eval_weight(&s) == zero_hat.eval_weight(&s));
            collapse.check(ok, || format!("0-hat(inf)={at_inf} at s={s}"));
        }
    }
    let mut closed = LawResult::new("composites of endofunctors are endofunctors");
    for _ in 0..n {
        let (f, g) = (random_concave(rng), random_concave(rng));
        let ok = g.after(&f).is_ok_and(|gf| {
            endofunctor_check(&gf).passed()
                && Weight::grid().iter().all(|s| gf.eval_weight(s) == g.eval_weight(&f.eval_weight(s)))
        });
        closed.check(ok, || format!("{f:?} then {g:?}"));
    }
    vec![examples, collapse, closed]
}

/// Concave and nondecreasing with `λ(0) = 0`.
fn random_concave(rng: &mut ChaCha8Rng) -> PlFunction {
    let k = rng.gen_range(0..4);
    let mut slopes: Vec<Rational> = (0..=k).map(|_| q(rng.gen_range(0..12), rng.gen_range(1..5))).collect();
    slopes.sort_by(|a, b| b.cmp(a));
    let mut points = vec![(q(0, 1), q(0, 1))];
    for s in &slopes[..k] {
        let (x, y) = points.last().expect("nonempty").clone();
        let dx = q(rng.gen_range(1..4), 1);
        points.push((&x + &dx, y + s * dx));
    }
    let tail = Weight::finite(slopes[k].clone()).expect("nonnegative");
    PlFunction::new(points, tail, Weight::infinity()).expect("valid breakpoints")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_on_the_standard_model() {
        let cfg = Config { samples: 40, seed: 7 };
        for r in run("all", cfg, &Model::standard()).unwrap() {
            assert!(r.passed(), "{}", render(std::slice::from_ref(&r)));
        }
    }

    #[test]
    fn corrupted_hom_is_caught() {
        let model =
            Model::standard().with_override(Structure::Additive, Weight::one(), Weight::from_int(2), Weight::zero());
        let r = &run("residuation", Config::default(), &model).unwrap()[0];
        assert!(!r.passed());
        let law = r.laws.iter().find(|l| !l.passed()).unwrap();
        assert!(law.counterexample.as_ref().unwrap().contains("m=1 n=2"));
    }

    #[test]
    fn hom_tables() {
        let m = Model::parse_hom_table("# bad\nmultiplicative 2 1 7\n").unwrap();
        assert_eq!(m.hom(Structure::Multiplicative, &Weight::from_int(2), &Weight::one()), Weight::from_int(7));
        assert_eq!(m.hom(Structure::Additive, &Weight::from_int(2), &Weight::one()), Weight::zero());
        assert!(Model::parse_hom_table("sideways 1 2 3").is_err());
        assert!(Model::parse_hom_table("additive 1 2").is_err());
    }

    #[test]
    fn reports_are_reproducible() {
        let cfg = Config { samples: 30, seed: 3 };
        let a = render(&run("star-autonomy", cfg, &Model::standard()).unwrap());
        let b = render(&run("star-autonomy", cfg, &Model::standard()).unwrap());
        assert_eq!(a, b);
        assert!(run("nope", cfg, &Model::standard()).is_err());
    }
}
