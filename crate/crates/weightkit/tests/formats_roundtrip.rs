use proptest::prelude::*;
use weightkit::formats::{parse_wset, write_wset};
use weightkit_core::wset::{Elem, WSet};
use weightkit_core::Weight;

fn weight() -> impl Strategy<Value = Weight> {
    prop_oneof![Just(Weight::infinity()), (0u64..1000, 1u64..50).prop_map(|(n, d)| Weight::ratio(n, d)),]
}

proptest! {
    #[test]
    fn wset_text_round_trips(entries in prop::collection::btree_map("[a-z][a-z0-9_]{0,6}", weight(), 0..8)) {
        let x = WSet::new(entries.into_iter().map(|(id, w)| (Elem::Atom(id), w))).unwrap();
        let text = write_wset(&x);
        prop_assert_eq!(parse_wset(&text).unwrap(), x);
    }

    #[test]
    fn weight_literals_round_trip(w in weight()) {
        prop_assert_eq!(w.to_string().parse::<Weight>().unwrap(), w);
    }
}
