//! Bounded infimum searches over decompositions `v = Σ parts`.
//!
//! Both the symmetrized weight and the tensor weight are infima over
//! infinitely many decompositions. The search here enumerates decompositions
//! with at most `max_parts` parts whose coordinates lie in
//! `[-max_coeff, max_coeff]`, as a min-plus shortest-path problem over partial
//! sums: a partial sum reached with no more parts and no more cost dominates,
//! so each is kept once with its cheapest cost, and branches whose cost
//! already reaches the best known total are cut.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::weight::Weight;

/// Limits of a decomposition search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBound {
    pub max_parts: usize,
    pub max_coeff: i64,
    /// Partial sums kept per layer before the search gives up exhaustiveness.
    pub max_states: usize,
}

impl Default for SearchBound {
    fn default() -> Self {
        SearchBound { max_parts: 4, max_coeff: 4, max_states: 200_000 }
    }
}

impl SearchBound {
    pub fn new(max_parts: usize, max_coeff: i64) -> Self {
        SearchBound { max_parts, max_coeff, ..Self::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Cheapest decomposition found; `inf` if none has finite cost.
    pub value: Weight,
    /// Every decomposition within the bound was accounted for.
    pub exhaustive: bool,
}

/// All vectors of length `dim` with coordinates in `[-c, c]`, zero excluded.
pub(crate) fn box_vectors(dim: usize, c: i64) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = alloc::vec![Vec::new()];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-c..=c).map(move |k| {
                    let mut v = v.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&k| k != 0));
    out
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Cheapest way to write `target` as a sum of at most `max_parts` entries of
/// `parts` (each usable repeatedly), with costs added. `upper` seeds the
/// best known value.
pub(crate) fn min_decomposition(
    parts: &BTreeMap<Vec<i64>, Weight>,
    target: &[i64],
    max_parts: usize,
    max_states: usize,
    upper: Option<Weight>,
) -> SearchOutcome {
    let zero = alloc::vec![0; target.len()];
    if target == zero.as_slice() {
        return SearchOutcome { value: Weight::zero(), exhaustive: true };
    }
    let mut best = upper.unwrap_or_else(Weight::infinity);
    let mut exhaustive = true;
    let mut seen: BTreeMap<Vec<i64>, Weight> = BTreeMap::new();
    seen.insert(zero.clone(), Weight::zero());
    let mut frontier: Vec<(Vec<i64>, Weight)> = alloc::vec![(zero, Weight::zero())];

    for step in 1..=max_parts {
        for (state, cost) in &frontier {
            if let Some(last) = parts.get(&sub(target, state)) {
                let total = cost + last;
                if total < best {
                    best = total;
                }
            }
        }
        if step == max_parts {
            break;
        }
        let mut next: BTreeMap<Vec<i64>, Weight> = BTreeMap::new();
        'expand: for (state, cost) in &frontier {
            for (part, pc) in parts {
                let total = cost + pc;
                if total >= best {
                    continue;
                }
                let ns = add(state, part);
                if seen.get(&ns).is_some_and(|old| *old <= total) {
                    continue;
                }
                if next.len() >= max_states && !next.contains_key(&ns) {
                    exhaustive = false;
                    break 'expand;
                }
                seen.insert(ns.clone(), total.clone());
                next.insert(ns, total);
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next.into_iter().collect();
    }
    SearchOutcome { value: best, exhaustive }
}

/// Greatest symmetric weight below `weight`, on `Z^dim`:
/// `inf Σ min(|a_i|, |-a_i|)` over `a_1 + … + a_p = target`.
pub fn symmetrize_by<F>(weight: F, target: &[i64], bound: SearchBound) -> SearchOutcome
where
    F: Fn(&[i64]) -> Weight,
{
    let parts: BTreeMap<Vec<i64>, Weight> = box_vectors(target.len(), bound.max_coeff)
        .into_iter()
        .filter_map(|v| {
            let neg: Vec<i64> = v.iter().map(|k| -k).collect();
            let cost = weight(&v).meet(&weight(&neg));
            cost.is_finite().then_some((v, cost))
        })
        .collect();
    min_decomposition(&parts, target, bound.max_parts, bound.max_states, None)
}

/// Projective tensor weight on `Z^rows ⊗ Z^cols`:
/// `inf Σ |a_i| · |b_i|` over `target = Σ a_i ⊗ b_i` (row-major matrix).
pub fn tensor_by<FA, FB>(
    weight_a: FA,
    weight_b: FB,
    rows: usize,
    cols: usize,
    target: &[i64],
    bound: SearchBound,
    upper: Option<Weight>,
) -> SearchOutcome
where
    FA: Fn(&[i64]) -> Weight,
    FB: Fn(&[i64]) -> Weight,
{
    assert_eq!(target.len(), rows * cols, "target matrix shape");
    let left: Vec<(Vec<i64>, Weight)> = box_vectors(rows, bound.max_coeff)
        .into_iter()
        .map(|a| {
            let w = weight_a(&a);
            (a, w)
        })
        .collect();
    let right: Vec<(Vec<i64>, Weight)> = box_vectors(cols, bound.max_coeff)
        .into_iter()
        .map(|b| {
            let w = weight_b(&b);
            (b, w)
        })
        .collect();
    let mut parts: BTreeMap<Vec<i64>, Weight> = BTreeMap::new();
    for (a, wa) in &left {
        for (b, wb) in &right {
            let cost = wa * wb;
            if cost.is_infinite() {
                continue;
            }
            let outer: Vec<i64> = a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect();
            match parts.get(&outer) {
                Some(old) if *old <= cost => {}
                _ => {
                    parts.insert(outer, cost);
                }
            }
        }
    }
    min_decomposition(&parts, target, bound.max_parts, bound.max_states, upper)
}
