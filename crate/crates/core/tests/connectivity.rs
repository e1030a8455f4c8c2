mod common;

use circol::connectivity::{
    articulation_points, biconnected_components, find_separation, is_three_connected,
};
use circol::graph::{self, Graph};
use circol::VertexSet;
use proptest::prelude::*;

fn connected_without(g: &Graph, gone: &[usize]) -> bool {
    let (h, _) = g.remove_vertices(&VertexSet::from(gone.to_vec())).unwrap();
    h.is_connected()
}

/// No set of at most two vertices disconnects `g`.
fn brute_three_connected(g: &Graph) -> bool {
    let n = g.order();
    g.is_connected()
        && (0..n).all(|a| connected_without(g, &[a]))
        && common::pairs(n).all(|(a, b)| connected_without(g, &[a, b]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn separations_are_valid_and_complete(g in common::graph(12)) {
        prop_assume!(g.order() >= 4);
        match find_separation(&g).unwrap() {
            Some(sep) => {
                prop_assert!(sep.validate(&g).is_ok(), "{:?}", sep.validate(&g));
                prop_assert!(sep.separator.len() <= 2);
                prop_assert!(sep.side1.len() < g.order() && sep.side2.len() < g.order());
                prop_assert!(!brute_three_connected(&g));
            }
            None => prop_assert!(brute_three_connected(&g)),
        }
    }

    #[test]
    fn cut_vertices_match_brute_force(g in common::graph(12)) {
        let base = g.components().len();
        let brute: VertexSet = g
            .vertices()
            .filter(|&v| {
                let (h, _) = g.remove_vertices(&[v].into()).unwrap();
                h.components().len() > base - usize::from(g.degree(v) == 0)
            })
            .collect();
        prop_assert_eq!(articulation_points(&g), brute);
    }

    #[test]
    fn blocks_cover_every_edge_once(g in common::graph(12)) {
        let blocks = biconnected_components(&g);
        for (u, v) in g.edges() {
            let holders = blocks.iter().filter(|b| b.contains(u) && b.contains(v)).count();
            prop_assert_eq!(holders, 1);
        }
    }
}

#[test]
fn named_graphs() {
    assert!(is_three_connected(&graph::petersen()).unwrap());
    assert!(is_three_connected(&graph::wheel(7).unwrap()).unwrap());
    assert!(!is_three_connected(&graph::cycle(6).unwrap()).unwrap());
    assert!(is_three_connected(&graph::complete(3).unwrap()).is_err());
}
