mod common;

use circol::bounds::h;
use circol::cycles::circumference;
use circol::fragment::{
    colour_bounded_circumference, fragment_colour, Branch, ColourOptions, TraceNode,
};
use circol::graph::{self, Graph};
use circol::verify::verify_fragmentation;
use circol::{Colour, Colouring, PrecolouredClique};
use proptest::prelude::*;
use std::collections::BTreeSet;

fn traced() -> ColourOptions {
    ColourOptions {
        emit_trace: true,
        ..ColourOptions::default()
    }
}

fn clique_strategy(g: &Graph) -> BoxedStrategy<Vec<(usize, Colour)>> {
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut options = vec![
        Just(vec![]).boxed(),
        (0..n, 0u32..6).prop_map(|(v, c)| vec![(v, c)]).boxed(),
    ];
    if !edges.is_empty() {
        options.push(
            (prop::sample::select(edges), 0u32..6, 0u32..6, any::<bool>())
                .prop_map(|((u, v), a, b, same)| vec![(u, a), (v, if same { a } else { b })])
                .boxed(),
        );
    }
    prop::strategy::Union::new(options).boxed()
}

fn graph_and_clique() -> impl Strategy<Value = (Graph, Vec<(usize, Colour)>)> {
    common::graph(12).prop_flat_map(|g| {
        let s = clique_strategy(&g);
        (Just(g), s)
    })
}

fn colours_of(col: &Colouring, vs: impl Iterator<Item = usize>) -> BTreeSet<Colour> {
    vs.map(|v| col.colour(v)).collect()
}

fn check_trace(t: &TraceNode, col: &Colouring) -> Result<(), TestCaseError> {
    for c in &t.children {
        prop_assert!(
            c.k + c.order() < t.k + t.order(),
            "no progress below {} k={}",
            t.branch,
            t.k
        );
        check_trace(c, col)?;
    }
    if t.branch == Branch::CycleDeletion {
        let pre = colours_of(col, t.precoloured.iter());
        let q: BTreeSet<usize> = t
            .cycle
            .iter()
            .copied()
            .filter(|&v| !t.precoloured.contains(v))
            .collect();
        let cyc = colours_of(col, q.iter().copied());
        let rest = colours_of(
            col,
            t.vertices
                .iter()
                .filter(|&v| !q.contains(&v) && !t.precoloured.contains(v)),
        );
        prop_assert!(pre.is_disjoint(&cyc) && pre.is_disjoint(&rest) && cyc.is_disjoint(&rest));
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn output_always_verifies((g, entries) in graph_and_clique()) {
        let clique = PrecolouredClique::new(&g, entries).unwrap();
        let k = circumference(&g);
        let (col, trace) = fragment_colour(&g, k, &clique, traced()).unwrap();
        let report = verify_fragmentation(&g, &col, k, &clique).unwrap();
        prop_assert!(report.passed(), "{}", report.to_text());
        check_trace(&trace.unwrap(), &col)?;
    }

    #[test]
    fn larger_k_is_also_fine((g, entries) in graph_and_clique(), extra in 0usize..6) {
        let clique = PrecolouredClique::new(&g, entries).unwrap();
        let k = circumference(&g) + extra;
        for recompute in [true, false] {
            let opts = ColourOptions { recompute_circumference: recompute, ..traced() };
            let (col, trace) = fragment_colour(&g, k, &clique, opts).unwrap();
            prop_assert!(verify_fragmentation(&g, &col, k, &clique).unwrap().passed());
            check_trace(&trace.unwrap(), &col)?;
        }
    }

    #[test]
    fn deterministic(g in common::graph(12)) {
        let a = colour_bounded_circumference(&g, traced()).unwrap();
        let b = colour_bounded_circumference(&g, traced()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn h_bound_when_every_deletion_is_large(g in common::graph(12)) {
        let (col, k, trace) = colour_bounded_circumference(&g, traced()).unwrap();
        let trace = trace.unwrap();
        let large = trace
            .walk()
            .iter()
            .filter(|t| t.branch == Branch::CycleDeletion)
            .all(|t| t.k >= 10);
        if large && k >= 3 {
            prop_assert!(col.num_colours() as u32 <= h(k as u64).unwrap());
        }
    }
}

#[test]
fn long_cycles_stay_within_h() {
    for m in 10..=30 {
        let g = graph::cycle(m).unwrap();
        let (col, k, _) = colour_bounded_circumference(&g, ColourOptions::default()).unwrap();
        assert!(col.num_colours() as u32 <= h(k as u64).unwrap());
    }
}

#[test]
fn structured_families_verify() {
    let mut cases = vec![graph::petersen()];
    for t in 1..=3 {
        for b in 1..=3 {
            cases.push(graph::tree_closure(t, b).unwrap());
        }
    }
    for seed in 0..20 {
        cases.push(graph::random_cactus(40, 2 + seed as usize % 15, seed).unwrap());
    }
    let none = PrecolouredClique::empty();
    for g in &cases {
        let (col, k, _) = colour_bounded_circumference(g, ColourOptions::default()).unwrap();
        assert!(verify_fragmentation(g, &col, k, &none).unwrap().passed());
    }
}
