//! Colouring graphs of circumference at most `k` so that every
//! monochromatic component has order at most `k`, using at most
//! `floor(3 log2 k)` colours.
//!
//! The recursion takes a graph, the circumference bound `k`, and a
//! precoloured clique `C` of at most two vertices, and returns a colouring
//! in which every monochromatic component meeting `C` lies inside `C`.
//! Branches, tried in order:
//!
//! 1. at most two vertices: colour directly;
//! 2. `k = 2` (a forest): proper 2-colouring, contracting `C` first when its
//!    two vertices share a colour;
//! 3. exactly three vertices: one fresh colour for everything outside `C`;
//! 4. a separation `(G1, G2)` of order at most two: add the edge on the
//!    separator, colour the side holding `C`, then the other side with the
//!    separator precoloured;
//! 5. 3-connected: lower `k` to the circumference, take a longest cycle `Q`,
//!    give `V(Q) \ C` one fresh colour and recurse on `G - V(Q) - C` with
//!    `k' = max(2, floor(k / 2))` and a palette disjoint from the rest.
//!
//! Every recursive call has a smaller `k + |V|`.

use std::collections::{BTreeSet, HashMap};
use std::fmt::{self, Write};

use crate::bounds::deletion_bound;
use crate::colouring::{Colour, Colouring, PrecolouredClique};
use crate::connectivity::find_separation;
use crate::cycles::{circumference, has_cycle_at_least, longest_cycle};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColourOptions {
    /// Jump straight to the circumference in the 3-connected branch instead
    /// of lowering `k` one step at a time.
    pub recompute_circumference: bool,
    /// Check the circumference precondition up front and the post-deletion
    /// circumference bound at every cycle deletion. Expensive.
    pub assert_circumference: bool,
    pub emit_trace: bool,
}

impl Default for ColourOptions {
    fn default() -> Self {
        ColourOptions {
            recompute_circumference: true,
            assert_circumference: false,
            emit_trace: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// At most three vertices.
    Base,
    /// `k = 2`, proper 2-colouring.
    Forest,
    /// `k = 2` with both clique vertices of one colour.
    Contraction,
    Separation,
    KReduction,
    CycleDeletion,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Base => "base",
            Branch::Forest => "forest",
            Branch::Contraction => "contraction",
            Branch::Separation => "separation",
            Branch::KReduction => "k-reduction",
            Branch::CycleDeletion => "cycle-deletion",
        })
    }
}

/// One step of the recursion. Vertex ids are those of the top-level graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceNode {
    pub branch: Branch,
    pub k: usize,
    pub vertices: VertexSet,
    pub precoloured: VertexSet,
    pub separator: VertexSet,
    pub cycle: Vec<usize>,
    pub children: Vec<TraceNode>,
}

impl TraceNode {
    fn new(branch: Branch, k: usize, origin: &[usize], pre: &[(usize, Colour)]) -> Self {
        TraceNode {
            branch,
            k,
            vertices: origin.iter().copied().collect(),
            precoloured: pre.iter().map(|&(v, _)| origin[v]).collect(),
            separator: VertexSet::new(),
            cycle: Vec::new(),
            children: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Pre-order walk.
    pub fn walk(&self) -> Vec<&TraceNode> {
        let mut out = vec![self];
        for c in &self.children {
            out.extend(c.walk());
        }
        out
    }

    /// One line per node: depth, branch, `k`, order, separator, `|Q|`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_lines(0, &mut out);
        out
    }

    fn write_lines(&self, depth: usize, out: &mut String) {
        writeln!(
            out,
            "{depth} {} k={} n={} S={} Q={}",
            self.branch,
            self.k,
            self.order(),
            if self.separator.is_empty() {
                "-".to_string()
            } else {
                self.separator.to_string()
            },
            self.cycle.len()
        )
        .unwrap();
        for c in &self.children {
            c.write_lines(depth + 1, out);
        }
    }
}

/// Smallest colour ids not in `avoid`, in increasing order.
fn free_ids(avoid: &BTreeSet<Colour>) -> impl Iterator<Item = Colour> + '_ {
    (0..).filter(move |c| !avoid.contains(c))
}

/// Keeps the colours of precoloured vertices and maps every other colour,
/// in order of first appearance, to the smallest ids not used by them.
fn canonicalise(col: &mut [Colour], pre: &[(usize, Colour)]) {
    let reserved: BTreeSet<Colour> = pre.iter().map(|e| e.1).collect();
    let mut fresh = free_ids(&reserved);
    let mut map = HashMap::new();
    for c in col.iter_mut() {
        if !reserved.contains(c) {
            *c = *map.entry(*c).or_insert_with(|| fresh.next().unwrap());
        }
    }
}

struct Engine {
    opts: ColourOptions,
}

type Solved = (Vec<Colour>, TraceNode);

impl Engine {
    /// Colours `g`. `pre` lists precoloured vertices (local ids); `origin`
    /// maps local ids to top-level ids for the trace.
    fn solve(
        &self,
        g: &Graph,
        k: usize,
        pre: &[(usize, Colour)],
        origin: &[usize],
    ) -> Result<Solved> {
        let n = g.order();
        let (mut col, node) = if n <= 2 {
            self.tiny(g, k, pre, origin)
        } else if k == 2 {
            self.forest(g, pre, origin)?
        } else if n == 3 {
            self.triple(g, k, pre, origin)
        } else if let Some(sep) = find_separation(g)? {
            self.separated(g, k, pre, origin, sep)?
        } else {
            self.three_connected(g, k, pre, origin)?
        };
        canonicalise(&mut col, pre);
        Ok((col, node))
    }

    fn precoloured(n: usize, pre: &[(usize, Colour)]) -> Vec<Option<Colour>> {
        let mut fixed = vec![None; n];
        for &(v, c) in pre {
            fixed[v] = Some(c);
        }
        fixed
    }

    fn tiny(&self, g: &Graph, k: usize, pre: &[(usize, Colour)], origin: &[usize]) -> Solved {
        let fixed = Self::precoloured(g.order(), pre);
        let col = g
            .vertices()
            .map(|v| {
                fixed[v].unwrap_or_else(|| {
                    let blocked: BTreeSet<Colour> =
                        g.neighbours(v).iter().filter_map(|&w| fixed[w]).collect();
                    let c = free_ids(&blocked).next().unwrap();
                    c
                })
            })
            .collect();
        (col, TraceNode::new(Branch::Base, k, origin, pre))
    }

    fn triple(&self, g: &Graph, k: usize, pre: &[(usize, Colour)], origin: &[usize]) -> Solved {
        let fixed = Self::precoloured(g.order(), pre);
        let reserved: BTreeSet<Colour> = pre.iter().map(|e| e.1).collect();
        let fresh = free_ids(&reserved).next().unwrap();
        let col = g.vertices().map(|v| fixed[v].unwrap_or(fresh)).collect();
        (col, TraceNode::new(Branch::Base, k, origin, pre))
    }

    fn forest(&self, g: &Graph, pre: &[(usize, Colour)], origin: &[usize]) -> Result<Solved> {
        if !g.is_forest() {
            return Err(Error::Precondition("graph has a cycle but k = 2".into()));
        }
        if let [(a, ca), (b, cb)] = *pre {
            if ca == cb {
                return self.contract_clique(g, (a, b, ca), pre, origin);
            }
        }
        let colours: Vec<Colour> = {
            let reserved: BTreeSet<Colour> = pre.iter().map(|e| e.1).collect();
            let mut pair: Vec<Colour> = reserved.iter().copied().collect();
            pair.extend(free_ids(&reserved).take(2 - pair.len()));
            pair
        };
        let fixed = Self::precoloured(g.order(), pre);

        // BFS parity per tree, rooted at a precoloured vertex when the tree has one.
        let mut col: Vec<Option<Colour>> = vec![None; g.order()];
        let roots = pre.iter().map(|e| e.0).chain(g.vertices());
        let mut queue = std::collections::VecDeque::new();
        for r in roots {
            if col[r].is_some() {
                continue;
            }
            col[r] = Some(fixed[r].unwrap_or(colours[0]));
            queue.push_back(r);
            while let Some(v) = queue.pop_front() {
                let other = if col[v] == Some(colours[0]) {
                    colours[1]
                } else {
                    colours[0]
                };
                for &w in g.neighbours(v) {
                    if col[w].is_none() {
                        col[w] = Some(other);
                        queue.push_back(w);
                    }
                }
            }
        }
        let col: Vec<Colour> = col.into_iter().map(Option::unwrap).collect();
        for &(v, c) in pre {
            if col[v] != c {
                return Err(Error::Precondition(format!(
                    "graph is not a forest (k = 2) or precolouring conflicts at vertex {}",
                    origin[v]
                )));
            }
        }
        for (u, v) in g.edges() {
            if col[u] == col[v] {
                return Err(Error::Precondition(format!(
                    "graph has a cycle through {}-{} but k = 2",
                    origin[u], origin[v]
                )));
            }
        }
        Ok((col, TraceNode::new(Branch::Forest, 2, origin, pre)))
    }

    fn contract_clique(
        &self,
        g: &Graph,
        (a, b, c): (usize, usize, Colour),
        pre: &[(usize, Colour)],
        origin: &[usize],
    ) -> Result<Solved> {
        let (h, map) = g.contract_edge(a, b)?;
        let mut h_origin = vec![usize::MAX; h.order()];
        for (old, &new) in map.iter().enumerate() {
            h_origin[new] = h_origin[new].min(origin[old]);
        }
        let (h_col, child) = self.solve(&h, 2, &[(map[a], c)], &h_origin)?;
        let col = map.iter().map(|&new| h_col[new]).collect();
        let mut node = TraceNode::new(Branch::Contraction, 2, origin, pre);
        node.children.push(child);
        Ok((col, node))
    }

    fn separated(
        &self,
        g: &Graph,
        k: usize,
        pre: &[(usize, Colour)],
        origin: &[usize],
        sep: crate::connectivity::Separation,
    ) -> Result<Solved> {
        let s = sep.separator.as_slice();
        let augmented = match *s {
            [a, b] => g.add_edge(a, b)?,
            _ => g.clone(),
        };
        // A clique cannot have vertices strictly on both sides.
        let (first, second) = if pre.iter().all(|&(v, _)| sep.side1.contains(v)) {
            (&sep.side1, &sep.side2)
        } else {
            (&sep.side2, &sep.side1)
        };

        let (g1, map1) = augmented.induced_subgraph(first)?;
        let pre1: Vec<(usize, Colour)> = pre.iter().map(|&(v, c)| (map1[v].unwrap(), c)).collect();
        let origin1: Vec<usize> = first.iter().map(|v| origin[v]).collect();
        let (col1, child1) = self.solve(&g1, k, &pre1, &origin1)?;

        let mut col = vec![Colour::MAX; g.order()];
        for v in first.iter() {
            col[v] = col1[map1[v].unwrap()];
        }

        let (g2, map2) = augmented.induced_subgraph(second)?;
        let pre2: Vec<(usize, Colour)> = s.iter().map(|&v| (map2[v].unwrap(), col[v])).collect();
        let origin2: Vec<usize> = second.iter().map(|v| origin[v]).collect();
        let (col2, child2) = self.solve(&g2, k, &pre2, &origin2)?;

        // Reuse the first side's colours for the second side where possible,
        // so the combined count is the larger of the two.
        let s_colours: BTreeSet<Colour> = pre2.iter().map(|e| e.1).collect();
        let used1: BTreeSet<Colour> = col1.iter().copied().collect();
        let avoid: BTreeSet<Colour> = used1.union(&s_colours).copied().collect();
        let mut targets = used1
            .iter()
            .copied()
            .filter(|c| !s_colours.contains(c))
            .chain(free_ids(&avoid));
        let mut remap = HashMap::new();
        for v in second.iter() {
            let c = col2[map2[v].unwrap()];
            col[v] = if s_colours.contains(&c) {
                c
            } else {
                *remap.entry(c).or_insert_with(|| targets.next().unwrap())
            };
        }

        let mut node = TraceNode::new(Branch::Separation, k, origin, pre);
        node.separator = s.iter().map(|&v| origin[v]).collect();
        node.children = vec![child1, child2];
        Ok((col, node))
    }

    fn three_connected(
        &self,
        g: &Graph,
        k: usize,
        pre: &[(usize, Colour)],
        origin: &[usize],
    ) -> Result<Solved> {
        if !self.opts.recompute_circumference && !has_cycle_at_least(g, k) {
            let (col, child) = self.solve(g, k - 1, pre, origin)?;
            let mut node = TraceNode::new(Branch::KReduction, k, origin, pre);
            node.children.push(child);
            return Ok((col, node));
        }
        let q = longest_cycle(g)
            .ok_or_else(|| Error::Assertion("3-connected graph without a cycle".into()))?;
        if q.len() > k {
            return Err(Error::Precondition(format!(
                "circumference {} exceeds k = {k}",
                q.len()
            )));
        }
        let (col, deletion) = self.delete_cycle(g, q.vertices(), pre, origin)?;
        if q.len() == k {
            return Ok((col, deletion));
        }
        let mut node = TraceNode::new(Branch::KReduction, k, origin, pre);
        node.children.push(deletion);
        Ok((col, node))
    }

    /// Cycle deletion with `k = |Q|`.
    fn delete_cycle(
        &self,
        g: &Graph,
        q: &[usize],
        pre: &[(usize, Colour)],
        origin: &[usize],
    ) -> Result<Solved> {
        let k = q.len();
        let s: VertexSet = q.iter().copied().chain(pre.iter().map(|e| e.0)).collect();
        let (rest, map) = g.remove_vertices(&s)?;
        let rest_origin: Vec<usize> = g
            .vertices()
            .filter(|&v| map[v].is_some())
            .map(|v| origin[v])
            .collect();

        if self.opts.assert_circumference && k >= 9 {
            let bound = deletion_bound(k as u64)? as usize;
            let actual = circumference(&rest);
            if actual > bound {
                return Err(Error::Assertion(format!(
                    "G - S has circumference {actual} > {bound} for k = {k}"
                )));
            }
        }

        let k_rest = (k / 2).max(2);
        let (rest_col, child) = self.solve(&rest, k_rest, &[], &rest_origin)?;

        let mut reserved: BTreeSet<Colour> = pre.iter().map(|e| e.1).collect();
        let cycle_colour = free_ids(&reserved).next().unwrap();
        reserved.insert(cycle_colour);
        let targets: Vec<Colour> = free_ids(&reserved).take(rest.order()).collect();

        let fixed = Self::precoloured(g.order(), pre);
        let col = g
            .vertices()
            .map(|v| match (fixed[v], map[v]) {
                (Some(c), _) => c,
                (None, Some(i)) => targets[rest_col[i] as usize],
                (None, None) => cycle_colour,
            })
            .collect();

        let mut node = TraceNode::new(Branch::CycleDeletion, k, origin, pre);
        node.cycle = q.iter().map(|&v| origin[v]).collect();
        node.children.push(child);
        Ok((col, node))
    }
}

/// Colours `g` for circumference bound `k >= 2` with `clique` precoloured.
///
/// Colours of the clique are kept; all other colours are the smallest ids
/// not used by the clique, in order of first appearance.
pub fn fragment_colour(
    g: &Graph,
    k: usize,
    clique: &PrecolouredClique,
    opts: ColourOptions,
) -> Result<(Colouring, Option<TraceNode>)> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "k must be at least 2, got {k}"
        )));
    }
    // Re-validate: the clique may have been built against another graph.
    let clique = PrecolouredClique::new(g, clique.entries().to_vec())?;
    if opts.assert_circumference && has_cycle_at_least(g, k + 1) {
        return Err(Error::Precondition(format!(
            "graph has a cycle longer than k = {k}"
        )));
    }
    let origin: Vec<usize> = g.vertices().collect();
    let engine = Engine { opts };
    let (col, trace) = engine.solve(g, k, clique.entries(), &origin)?;
    Ok((Colouring::new(col), opts.emit_trace.then_some(trace)))
}

/// Colours `g` with `k = max(circumference(g), 2)` and no precolouring.
/// Returns the colouring and the `k` used.
pub fn colour_bounded_circumference(
    g: &Graph,
    opts: ColourOptions,
) -> Result<(Colouring, usize, Option<TraceNode>)> {
    let k = circumference(g);
    let (col, trace) = fragment_colour(g, k, &PrecolouredClique::empty(), opts)?;
    Ok((col, k, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;
    use crate::verify::verify_fragmentation;

    fn traced() -> ColourOptions {
        ColourOptions {
            emit_trace: true,
            ..ColourOptions::default()
        }
    }

    fn check(g: &Graph, k: usize, clique: &PrecolouredClique, col: &Colouring) {
        let r = verify_fragmentation(g, col, k, clique).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn forest_gets_proper_two_colouring() {
        let g = random_cactus(25, 2, 3).unwrap();
        let none = PrecolouredClique::empty();
        let (col, _) = fragment_colour(&g, 2, &none, ColourOptions::default()).unwrap();
        assert_eq!(col.num_colours(), 2);
        assert!(g.edges().all(|(u, v)| col.colour(u) != col.colour(v)));
        check(&g, 2, &none, &col);
    }

    #[test]
    fn k5_takes_one_colour() {
        let g = complete(5).unwrap();
        let (col, trace) = fragment_colour(&g, 5, &PrecolouredClique::empty(), traced()).unwrap();
        assert_eq!(col.as_slice(), &[0; 5]);
        let t = trace.unwrap();
        assert_eq!(t.branch, Branch::CycleDeletion);
        assert_eq!(t.cycle.len(), 5);
        assert_eq!(t.children[0].order(), 0);
    }

    #[test]
    fn petersen_takes_two_colours() {
        let g = petersen();
        let (col, trace) = fragment_colour(&g, 9, &PrecolouredClique::empty(), traced()).unwrap();
        assert_eq!(col.num_colours(), 2);
        let t = trace.unwrap();
        assert_eq!(t.branch, Branch::CycleDeletion);
        let left_out: Vec<usize> = (0..10).filter(|v| !t.cycle.contains(v)).collect();
        assert_eq!(left_out.len(), 1);
        let q_colour = col.colour(t.cycle[0]);
        assert!(t.cycle.iter().all(|&v| col.colour(v) == q_colour));
        assert_ne!(col.colour(left_out[0]), q_colour);
        check(&g, 9, &PrecolouredClique::empty(), &col);
    }

    #[test]
    fn non_clique_precolouring_is_rejected() {
        let g = path(3).unwrap();
        let err = PrecolouredClique::new(&g, vec![(0, 7), (2, 7)]).unwrap_err();
        assert!(matches!(err, Error::NotAClique(_)));
    }

    #[test]
    fn equal_colours_on_forest_edge_contract() {
        let g = path(5).unwrap();
        let clique = PrecolouredClique::new(&g, vec![(1, 4), (2, 4)]).unwrap();
        let (col, trace) = fragment_colour(&g, 2, &clique, traced()).unwrap();
        assert_eq!(trace.unwrap().branch, Branch::Contraction);
        assert_eq!((col.colour(1), col.colour(2)), (4, 4));
        assert_ne!(col.colour(0), 4);
        assert_ne!(col.colour(3), 4);
        check(&g, 2, &clique, &col);
    }

    #[test]
    fn entry_point_examples() {
        let (col, k, _) =
            colour_bounded_circumference(&star(5).unwrap(), ColourOptions::default()).unwrap();
        assert_eq!((k, col.num_colours()), (2, 2));

        let c9 = cycle(9).unwrap();
        let (col, k, _) = colour_bounded_circumference(&c9, ColourOptions::default()).unwrap();
        assert_eq!(k, 9);
        assert!(col.num_colours() <= 9);
        check(&c9, 9, &PrecolouredClique::empty(), &col);

        let (col, k, _) =
            colour_bounded_circumference(&complete(4).unwrap(), ColourOptions::default()).unwrap();
        assert_eq!((k, col.num_colours()), (4, 1));
    }

    #[test]
    fn k_too_small_is_a_precondition_violation() {
        let err = fragment_colour(
            &complete(5).unwrap(),
            4,
            &PrecolouredClique::empty(),
            ColourOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
        let err = fragment_colour(
            &cycle(4).unwrap(),
            2,
            &PrecolouredClique::empty(),
            ColourOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
        let strict = ColourOptions {
            assert_circumference: true,
            ..ColourOptions::default()
        };
        assert!(
            fragment_colour(&cycle(7).unwrap(), 6, &PrecolouredClique::empty(), strict).is_err()
        );
    }

    #[test]
    fn stepwise_reduction_matches_jump() {
        let g = wheel(8).unwrap();
        let jump = fragment_colour(&g, 12, &PrecolouredClique::empty(), traced()).unwrap();
        let step = fragment_colour(
            &g,
            12,
            &PrecolouredClique::empty(),
            ColourOptions {
                recompute_circumference: false,
                ..traced()
            },
        )
        .unwrap();
        assert_eq!(jump.0, step.0);
        let steps = step
            .1
            .unwrap()
            .walk()
            .iter()
            .filter(|n| n.branch == Branch::KReduction)
            .count();
        assert_eq!(steps, 4);
    }

    #[test]
    fn trace_text_lines() {
        let g = cycle(4).unwrap();
        let (_, trace) = fragment_colour(&g, 4, &PrecolouredClique::empty(), traced()).unwrap();
        let text = trace.unwrap().to_text();
        assert_eq!(
            text,
            "0 separation k=4 n=4 S=0,2 Q=0\n1 base k=4 n=3 S=- Q=0\n1 base k=4 n=3 S=- Q=0\n"
        );
    }
}
