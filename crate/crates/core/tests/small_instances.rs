mod common;

use circol::extremal::{build_extremal, check_forced_degree, ExtremalSpec};
use circol::oracle::{min_defective_colours, min_fragmentation_colours};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn oracle_is_monotone(g in common::graph(9), d in 1usize..5) {
        prop_assert!(min_fragmentation_colours(&g, d).unwrap() >= min_fragmentation_colours(&g, d + 1).unwrap());
        prop_assert!(min_defective_colours(&g, d - 1).unwrap() >= min_defective_colours(&g, d).unwrap());
    }

    #[test]
    fn defective_below_fragmentation(g in common::graph(9), d in 0usize..4) {
        prop_assert!(min_defective_colours(&g, d).unwrap() <= min_fragmentation_colours(&g, d + 1).unwrap());
    }
}

#[test]
fn extremal_recurrence_and_hub() {
    for d in 1..=5u32 {
        for k in 1..=4u32 {
            let spec = ExtremalSpec::new(k, d).unwrap();
            let g = build_extremal(k, d).unwrap();
            assert_eq!(g.order() as u128, spec.expected_order);
            assert_eq!(g.degree(g.order() - 1), g.order() - 1);
            if k >= 2 {
                let prev = build_extremal(k - 1, d).unwrap().order();
                assert_eq!(g.order(), d as usize * prev + 1);
            }
        }
    }
}

#[test]
fn forced_degree_implies_many_colours() {
    assert!(check_forced_degree(2, 2).unwrap().holds);
    let g = build_extremal(2, 2).unwrap();
    assert!(min_fragmentation_colours(&g, 2).unwrap() >= 3);
    assert!(min_defective_colours(&g, 1).unwrap() >= 3);
}
