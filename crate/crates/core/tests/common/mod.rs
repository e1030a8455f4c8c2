#![allow(dead_code)]

use circol::Graph;
use proptest::prelude::*;

/// Graphs on `1..=max_n` vertices given by an edge-presence vector.
pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.4), n * (n - 1) / 2).prop_map(
            move |bits| {
                let mut edges = Vec::new();
                let mut it = bits.into_iter();
                for u in 0..n {
                    for v in u + 1..n {
                        if it.next().unwrap() {
                            edges.push((u, v));
                        }
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            },
        )
    })
}

/// Every pair of vertices.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (a + 1..n).map(move |b| (a, b)))
}
