//! Weight axioms of weighted monoids, rings and modules, checked
//! exhaustively on finite samples.
//!
//! Samples are finite windows of possibly infinite algebras, so operation
//! tables are partial: a `None` entry means the result falls outside the
//! sample, and that instance is counted as skipped.

use alloc::string::String;
use alloc::vec::Vec;

use crate::weight::Weight;

use super::search::{tensor_by, SearchBound};

/// `table[i][j]` is the index of `i op j`, or `None` outside the sample.
pub type Table = Vec<Vec<Option<usize>>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    AdditiveMonoid,
    MultiplicativeMonoid,
    Ring,
    Module,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSample {
    pub kind: AlgebraKind,
    pub labels: Vec<String>,
    pub weights: Vec<Weight>,
    pub zero: Option<usize>,
    pub one: Option<usize>,
    pub add: Option<Table>,
    pub mul: Option<Table>,
    /// Scalar ring weights of a module sample.
    pub scalar_weights: Vec<Weight>,
    /// `action[s][a]` is the index of `s · a`.
    pub action: Option<Table>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("missing {0}")]
    Missing(&'static str),
    #[error("{table} table has shape mismatch")]
    Shape { table: &'static str },
    #[error("{table} table refers to element {index} outside the carrier")]
    OutOfRange { table: &'static str, index: usize },
    #[error("{0} carrier labels and weights differ in length")]
    Carrier(&'static str),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    /// `|0| = 0`
    ZeroWeight,
    /// `|a + b| <= |a| + |b|`
    Subadditive,
    /// `|1| <= 1`
    UnitWeight,
    /// `|a b| <= |a| · |b|`
    Submultiplicative,
    /// `|λ a| <= |λ| · |a|`
    ScalarAction,
    /// `|a b| <= |a ⊗ b|`
    TensorBound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub operands: Vec<usize>,
    pub lhs: Weight,
    pub rhs: Weight,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checked: usize,
    pub skipped: usize,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn record(&mut self, axiom: Axiom, operands: Vec<usize>, lhs: Weight, rhs: Weight, ok: bool) {
        self.checked += 1;
        if !ok {
            self.violations.push(Violation { axiom, operands, lhs, rhs });
        }
    }
}

fn validate_table(
    table: &Table,
    rows: usize,
    cols: usize,
    carrier: usize,
    name: &'static str,
) -> Result<(), AlgebraError> {
    if table.len() != rows || table.iter().any(|r| r.len() != cols) {
        return Err(AlgebraError::Shape { table: name });
    }
    match table.iter().flatten().flatten().find(|&&k| k >= carrier) {
        Some(&index) => Err(AlgebraError::OutOfRange { table: name, index }),
        None => Ok(()),
    }
}

impl AlgebraSample {
    fn needs_add(&self) -> bool {
        matches!(self.kind, AlgebraKind::AdditiveMonoid | AlgebraKind::Ring | AlgebraKind::Module)
    }

    fn needs_mul(&self) -> bool {
        matches!(self.kind, AlgebraKind::MultiplicativeMonoid | AlgebraKind::Ring)
    }

    pub fn validate(&self) -> Result<(), AlgebraError> {
        let n = self.weights.len();
        if self.labels.len() != n {
            return Err(AlgebraError::Carrier("element"));
        }
        let in_range = |i: Option<usize>, what: &'static str| match i {
            None => Err(AlgebraError::Missing(what)),
            Some(k) if k >= n => Err(AlgebraError::OutOfRange { table: what, index: k }),
            Some(_) => Ok(()),
        };
        if self.needs_add() {
            in_range(self.zero, "zero")?;
            validate_table(self.add.as_ref().ok_or(AlgebraError::Missing("addition table"))?, n, n, n, "addition")?;
        }
        if self.needs_mul() {
            in_range(self.one, "one")?;
            validate_table(
                self.mul.as_ref().ok_or(AlgebraError::Missing("multiplication table"))?,
                n,
                n,
                n,
                "multiplication",
            )?;
        }
        if self.kind == AlgebraKind::Module {
            let action = self.action.as_ref().ok_or(AlgebraError::Missing("action table"))?;
            validate_table(action, self.scalar_weights.len(), n, n, "action")?;
        }
        Ok(())
    }
}

/// Checks every instance of the axioms of the sample's kind.
pub fn check_algebra(s: &AlgebraSample) -> Result<AxiomReport, AlgebraError> {
    s.validate()?;
    let w = &s.weights;
    let mut report = AxiomReport::default();
    let binary = |report: &mut AxiomReport, table: &Table, axiom: Axiom, lw: &[Weight]| {
        for (i, row) in table.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                let Some(k) = *entry else {
                    report.skipped += 1;
                    continue;
                };
                let rhs = match axiom {
                    Axiom::Subadditive => &lw[i] + &w[j],
                    _ => &lw[i] * &w[j],
                };
                let ok = w[k] <= rhs;
                report.record(axiom, alloc::vec![i, j], w[k].clone(), rhs, ok);
            }
        }
    };
    if s.needs_add() {
        let z = s.zero.expect("validated");
        report.record(Axiom::ZeroWeight, alloc::vec![z], w[z].clone(), Weight::zero(), w[z].is_zero());
        binary(&mut report, s.add.as_ref().expect("validated"), Axiom::Subadditive, w);
    }
    if s.needs_mul() {
        let u = s.one.expect("validated");
        report.record(Axiom::UnitWeight, alloc::vec![u], w[u].clone(), Weight::one(), w[u] <= Weight::one());
        binary(&mut report, s.mul.as_ref().expect("validated"), Axiom::Submultiplicative, w);
    }
    if s.kind == AlgebraKind::Module {
        binary(&mut report, s.action.as_ref().expect("validated"), Axiom::ScalarAction, &s.scalar_weights);
    }
    Ok(report)
}

/// The integers `lo..=hi` as a ring sample weighted by `weight`.
pub fn integer_ring<F>(lo: i64, hi: i64, weight: F) -> AlgebraSample
where
    F: Fn(i64) -> Weight,
{
    assert!(lo <= 0 && 1 <= hi, "sample must contain 0 and 1");
    let values: Vec<i64> = (lo..=hi).collect();
    let index = |v: i64| (lo..=hi).contains(&v).then(|| (v - lo) as usize);
    let table = |op: fn(i64, i64) -> i64| -> Table {
        values.iter().map(|&a| values.iter().map(|&b| index(op(a, b))).collect()).collect()
    };
    AlgebraSample {
        kind: AlgebraKind::Ring,
        labels: values.iter().map(|v| alloc::format!("{v}")).collect(),
        weights: values.iter().map(|&v| weight(v)).collect(),
        zero: index(0),
        one: index(1),
        add: Some(table(|a, b| a + b)),
        mul: Some(table(|a, b| a * b)),
        scalar_weights: Vec::new(),
        action: None,
    }
}

/// For an integer ring weight, checks `|ab| <= |a ⊗ b|` with the tensor
/// weight of `Z ⊗ Z ≅ Z` searched within `bound`. The search uses `weight`
/// outside the sample too, so it must be defined on all integers.
pub fn integer_tensor_bound_check<F>(lo: i64, hi: i64, weight: F, bound: SearchBound) -> AxiomReport
where
    F: Fn(i64) -> Weight,
{
    let mut report = AxiomReport::default();
    let wv = |v: &[i64]| weight(v[0]);
    for a in lo..=hi {
        for b in lo..=hi {
            let seed = &weight(a) * &weight(b);
            let t = tensor_by(wv, wv, 1, 1, &[a * b], bound, Some(seed)).value;
            let lhs = weight(a * b);
            let ok = lhs <= t;
            let (ia, ib) = ((a - lo) as usize, (b - lo) as usize);
            report.record(Axiom::TensorBound, alloc::vec![ia, ib], lhs, t, ok);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wab::{abs_weight, int_weight};

    #[test]
    fn integer_rings_pass() {
        for f in [int_weight as fn(i64) -> Weight, abs_weight, |_| Weight::zero()] {
            let r = check_algebra(&integer_ring(-2, 2, f)).unwrap();
            assert!(r.passed(), "{:?}", r.violations);
            assert!(r.checked > 0 && r.skipped > 0);
        }
    }

    #[test]
    fn violations_are_listed() {
        // a spike at 4 breaks both 2 + 2 and 2 · 2
        let f = |v: i64| if v == 4 { Weight::from_int(100) } else { abs_weight(v) };
        let r = check_algebra(&integer_ring(-4, 4, f)).unwrap();
        assert!(!r.passed());
        assert!(r.violations.iter().all(|v| v.operands.len() == 2 && v.lhs > v.rhs));
        assert!(r.violations.iter().any(|v| v.axiom == Axiom::Subadditive));
        assert!(r.violations.iter().any(|v| v.axiom == Axiom::Submultiplicative));
    }

    #[test]
    fn unit_and_zero_axioms() {
        let mut s = integer_ring(-1, 1, abs_weight);
        s.weights[2] = Weight::from_int(2);
        let r = check_algebra(&s).unwrap();
        assert!(r.violations.iter().any(|v| v.axiom == Axiom::UnitWeight));
        s.weights[1] = Weight::one();
        let r = check_algebra(&s).unwrap();
        assert!(r.violations.iter().any(|v| v.axiom == Axiom::ZeroWeight));
    }

    #[test]
    fn module_action() {
        // Z acting on itself, scalars weighted by w, elements by |-|.
        let mut s = integer_ring(-2, 2, abs_weight);
        s.kind = AlgebraKind::Module;
        s.scalar_weights = (-2..=2).map(int_weight).collect();
        s.action = s.mul.clone();
        assert!(check_algebra(&s).unwrap().passed());
        s.scalar_weights = (-2..=2).map(|_| Weight::zero()).collect();
        assert!(!check_algebra(&s).unwrap().passed());
    }

    #[test]
    fn malformed_tables() {
        let mut s = integer_ring(-1, 1, abs_weight);
        s.add.as_mut().unwrap()[0].pop();
        assert_eq!(check_algebra(&s), Err(AlgebraError::Shape { table: "addition" }));
        let mut s = integer_ring(-1, 1, abs_weight);
        s.mul.as_mut().unwrap()[0][0] = Some(7);
        assert_eq!(check_algebra(&s), Err(AlgebraError::OutOfRange { table: "multiplication", index: 7 }));
        let mut s = integer_ring(-1, 1, abs_weight);
        s.one = None;
        assert_eq!(check_algebra(&s), Err(AlgebraError::Missing("one")));
    }

    #[test]
    fn tensor_bound_on_integers() {
        let r = integer_tensor_bound_check(-2, 2, int_weight, SearchBound::new(2, 2));
        assert!(r.passed());
        assert_eq!(r.checked, 25);
    }
}
