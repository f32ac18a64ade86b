#![allow(dead_code)]

use proptest::prelude::*;
use weightkit_core::Weight;

pub fn w(s: &str) -> Weight {
    s.parse().unwrap()
}

pub fn grid_weight() -> impl Strategy<Value = Weight> {
    prop::sample::select(Weight::grid())
}

/// Grid points, small fractions and infinity.
pub fn weight() -> impl Strategy<Value = Weight> {
    prop_oneof![
        3 => grid_weight(),
        3 => (0u64..40, 1u64..9).prop_map(|(n, d)| Weight::ratio(n, d)),
        1 => Just(Weight::infinity()),
        1 => Just(Weight::zero()),
    ]
}
