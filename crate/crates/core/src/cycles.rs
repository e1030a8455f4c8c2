//! Exact longest cycles and longest paths.
//!
//! The main search is a depth-first enumeration of simple paths with a
//! reachability bound, run separately inside every block (a cycle never
//! leaves its biconnected component). [`circumference_subset_dp`] is an
//! independent dynamic programme over vertex subsets for small graphs,
//! kept as a cross-check.

use crate::connectivity::biconnected_components;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`circumference_subset_dp`].
pub const SUBSET_DP_LIMIT: usize = 15;

/// A cycle given as a vertex sequence; the closing edge is implicit.
///
/// Witnesses produced by this module are canonical: they start at their
/// smallest vertex and continue toward the smaller of its two cycle
/// neighbours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness(Vec<usize>);

impl CycleWitness {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Checks length, distinctness and adjacency in `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let c = &self.0;
        if c.len() < 3 {
            return Err(format!("cycle of length {} is too short", c.len()));
        }
        let mut seen = vec![false; g.order()];
        for &v in c {
            if v >= g.order() {
                return Err(format!("vertex {v} out of range"));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(format!("vertex {v} repeated"));
            }
        }
        for (i, &v) in c.iter().enumerate() {
            let w = c[(i + 1) % c.len()];
            if !g.has_edge(v, w) {
                return Err(format!("{v}-{w} is not an edge"));
            }
        }
        Ok(())
    }

    /// Rotates and orients a cycle into canonical form.
    pub fn canonical(mut cycle: Vec<usize>) -> CycleWitness {
        if let Some(pos) = (0..cycle.len()).min_by_key(|&i| cycle[i]) {
            cycle.rotate_left(pos);
            if cycle.len() > 2 && cycle[cycle.len() - 1] < cycle[1] {
                cycle[1..].reverse();
            }
        }
        CycleWitness(cycle)
    }
}

/// Visited marks cleared in O(1) by bumping a generation counter.
struct Marks {
    mark: Vec<u32>,
    stamp: u32,
}

impl Marks {
    fn new(n: usize) -> Self {
        Marks {
            mark: vec![0; n],
            stamp: 0,
        }
    }

    fn clear(&mut self) {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.mark.fill(0);
            self.stamp = 1;
        }
    }

    /// Marks `v`, returning false if it was already marked.
    fn insert(&mut self, v: usize) -> bool {
        std::mem::replace(&mut self.mark[v], self.stamp) != self.stamp
    }
}

/// Depth-first search for long cycles through a fixed anchor, using only
/// vertices with larger ids.
struct CycleSearch<'g> {
    g: &'g Graph,
    anchor: usize,
    on_path: Vec<bool>,
    near_anchor: Vec<bool>,
    path: Vec<usize>,
    best: Option<Vec<usize>>,
    /// Only cycles strictly longer than this are recorded.
    best_len: usize,
    stop_at: usize,
    done: bool,
    marks: Marks,
    queue: Vec<usize>,
}

impl<'g> CycleSearch<'g> {
    /// Longest cycle of length `> floor` (lexicographically least among the
    /// longest), stopping early once one of length `>= stop_at` is found.
    fn run(g: &'g Graph, floor: usize, stop_at: usize) -> Option<Vec<usize>> {
        let n = g.order();
        let mut s = CycleSearch {
            g,
            anchor: 0,
            on_path: vec![false; n],
            near_anchor: vec![false; n],
            path: Vec::with_capacity(n),
            best: None,
            best_len: floor.max(2),
            stop_at,
            done: false,
            marks: Marks::new(n),
            queue: Vec::with_capacity(n),
        };
        for anchor in 0..n {
            // Vertices available to this anchor: anchor..n.
            if n - anchor <= s.best_len || s.done {
                break;
            }
            s.anchor = anchor;
            for &w in g.neighbours(anchor) {
                s.near_anchor[w] = true;
            }
            s.path.push(anchor);
            s.on_path[anchor] = true;
            s.extend();
            s.on_path[anchor] = false;
            s.path.pop();
            for &w in g.neighbours(anchor) {
                s.near_anchor[w] = false;
            }
        }
        s.best
    }

    fn extend(&mut self) {
        let g = self.g;
        let end = *self.path.last().unwrap();
        for &w in g.neighbours(end) {
            if w == self.anchor {
                let len = self.path.len();
                // Each cycle is seen in both directions; keep the canonical one.
                if len >= 3 && self.path[1] < end && len > self.best_len {
                    self.best_len = len;
                    self.best = Some(self.path.clone());
                    if len >= self.stop_at {
                        self.done = true;
                        return;
                    }
                }
                continue;
            }
            if w < self.anchor || self.on_path[w] {
                continue;
            }
            self.path.push(w);
            self.on_path[w] = true;
            if self.promising() {
                self.extend();
            }
            self.on_path[w] = false;
            self.path.pop();
            if self.done {
                return;
            }
        }
    }

    /// Upper-bounds the cycle length reachable from the current path: the
    /// path plus every free vertex reachable from its end. Also requires a
    /// way back to the anchor that respects the canonical orientation.
    fn promising(&mut self) -> bool {
        let end = *self.path.last().unwrap();
        let second = self.path[1];
        let mut closable = end > second && self.near_anchor[end];
        let mut reach = 0;
        self.marks.clear();
        self.marks.insert(end);
        self.queue.clear();
        self.queue.push(end);
        while let Some(v) = self.queue.pop() {
            for &w in self.g.neighbours(v) {
                if w > self.anchor && !self.on_path[w] && self.marks.insert(w) {
                    reach += 1;
                    closable |= w > second && self.near_anchor[w];
                    self.queue.push(w);
                }
            }
        }
        closable && self.path.len() + reach > self.best_len
    }
}

/// Best cycle over all blocks of length `>= min_len`.
fn search_blocks(g: &Graph, min_len: usize, early_exit: bool) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    for block in biconnected_components(g) {
        let need = best.as_ref().map_or(min_len.max(3), |b| b.len());
        if block.len() < need {
            continue;
        }
        let (sub, _) = g.induced_subgraph(&block).expect("block ids are in range");
        let stop_at = if early_exit { need } else { usize::MAX };
        let Some(local) = CycleSearch::run(&sub, need - 1, stop_at) else {
            continue;
        };
        // The relabelling is monotone, so local canonical order is global order.
        let found: Vec<usize> = local.iter().map(|&i| block.as_slice()[i]).collect();
        let better = match &best {
            None => true,
            Some(b) => found.len() > b.len() || (found.len() == b.len() && found < *b),
        };
        if better {
            best = Some(found);
            if early_exit {
                break;
            }
        }
    }
    best
}

/// A longest cycle, or `None` for a forest.
///
/// Among all longest cycles, the one whose canonical form is
/// lexicographically least is returned.
pub fn longest_cycle(g: &Graph) -> Option<CycleWitness> {
    search_blocks(g, 3, false).map(CycleWitness)
}

/// Length of a longest cycle; 2 when `g` is a forest.
pub fn circumference(g: &Graph) -> usize {
    longest_cycle(g).map_or(2, |c| c.len())
}

/// Whether some cycle has length at least `min_len`. Values below 3 ask
/// for any cycle at all.
pub fn has_cycle_at_least(g: &Graph, min_len: usize) -> bool {
    search_blocks(g, min_len.max(3), true).is_some()
}

struct PathSearch<'g> {
    g: &'g Graph,
    on_path: Vec<bool>,
    len: usize,
    best: usize,
    marks: Marks,
    queue: Vec<usize>,
}

impl PathSearch<'_> {
    fn extend(&mut self, end: usize) {
        let g = self.g;
        self.best = self.best.max(self.len);
        for &w in g.neighbours(end) {
            if self.on_path[w] {
                continue;
            }
            self.on_path[w] = true;
            self.len += 1;
            if self.len + self.reach(w) > self.best {
                self.extend(w);
            }
            self.len -= 1;
            self.on_path[w] = false;
        }
    }

    fn reach(&mut self, from: usize) -> usize {
        let mut count = 0;
        self.marks.clear();
        self.marks.insert(from);
        self.queue.clear();
        self.queue.push(from);
        while let Some(v) = self.queue.pop() {
            for &w in self.g.neighbours(v) {
                if !self.on_path[w] && self.marks.insert(w) {
                    count += 1;
                    self.queue.push(w);
                }
            }
        }
        count
    }
}

/// Maximum number of vertices on a simple path (0 for the empty graph).
pub fn longest_path_order(g: &Graph) -> usize {
    let n = g.order();
    let mut s = PathSearch {
        g,
        on_path: vec![false; n],
        len: 0,
        best: 0,
        marks: Marks::new(n),
        queue: Vec::new(),
    };
    for comp in g.components() {
        for start in comp.iter() {
            if s.best >= comp.len() {
                break;
            }
            s.on_path[start] = true;
            s.len = 1;
            s.extend(start);
            s.on_path[start] = false;
        }
    }
    s.best
}

/// Circumference by dynamic programming over (vertex subset, endpoint)
/// states. Only for graphs with at most [`SUBSET_DP_LIMIT`] vertices.
pub fn circumference_subset_dp(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > SUBSET_DP_LIMIT {
        return Err(Error::TooLarge {
            what: "graph for subset DP",
            size: n as u128,
            limit: SUBSET_DP_LIMIT as u128,
        });
    }
    let mut best = 2;
    for s in 0..n {
        // Bit i stands for vertex s + 1 + i.
        let r = n - s - 1;
        let nbr: Vec<u32> = (s + 1..n)
            .map(|v| {
                g.neighbours(v)
                    .iter()
                    .filter(|&&w| w > s)
                    .fold(0, |m, &w| m | 1 << (w - s - 1))
            })
            .collect();
        let back: u32 = g
            .neighbours(s)
            .iter()
            .filter(|&&w| w > s)
            .fold(0, |m, &w| m | 1 << (w - s - 1));
        // ends[mask]: endpoints v such that some path s, ..., v covers exactly mask.
        let mut ends = vec![0u32; 1 << r];
        for i in 0..r {
            if back >> i & 1 == 1 {
                ends[1 << i] |= 1 << i;
            }
        }
        for mask in 1usize..1 << r {
            let mut e = ends[mask];
            if e == 0 {
                continue;
            }
            let size = mask.count_ones() as usize + 1;
            if size >= 3 && e & back != 0 {
                best = best.max(size);
            }
            while e != 0 {
                let i = e.trailing_zeros() as usize;
                e &= e - 1;
                let mut next = nbr[i] & !(mask as u32);
                while next != 0 {
                    let j = next.trailing_zeros();
                    next &= next - 1;
                    ends[mask | 1 << j] |= 1 << j;
                }
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn circumference_examples() {
        assert_eq!(circumference(&cycle(5).unwrap()), 5);
        assert_eq!(circumference(&star(4).unwrap()), 2);
        assert_eq!(circumference(&Graph::empty(3)), 2);
        assert_eq!(circumference(&petersen()), 9);
        assert_eq!(circumference(&complete(6).unwrap()), 6);
    }

    #[test]
    fn longest_cycle_witnesses() {
        assert_eq!(longest_cycle(&path(4).unwrap()), None);
        let k4 = complete(4).unwrap();
        let c = longest_cycle(&k4).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2, 3]);
        c.validate(&k4).unwrap();

        // Hub 0 with rim 1..5: lexicographically least Hamilton cycle.
        let w = wheel(6).unwrap();
        let c = longest_cycle(&w).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2, 3, 4, 5]);
        c.validate(&w).unwrap();
    }

    #[test]
    fn witness_comes_from_the_right_block() {
        // Triangle 0-1-2 and a 4-cycle 2-3-4-5 sharing vertex 2.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 2)])
            .unwrap();
        assert_eq!(longest_cycle(&g).unwrap().vertices(), &[2, 3, 4, 5]);
    }

    #[test]
    fn threshold_queries() {
        let c5 = cycle(5).unwrap();
        assert!(has_cycle_at_least(&c5, 5));
        assert!(!has_cycle_at_least(&c5, 6));
        assert!(has_cycle_at_least(&complete(4).unwrap(), 4));
        assert!(!has_cycle_at_least(&petersen(), 10));
        assert!(has_cycle_at_least(&petersen(), 9));
        assert!(!has_cycle_at_least(&star(3).unwrap(), 3));
    }

    #[test]
    fn longest_path_examples() {
        assert_eq!(longest_path_order(&path(5).unwrap()), 5);
        assert_eq!(longest_path_order(&star(3).unwrap()), 3);
        assert_eq!(longest_path_order(&Graph::empty(1)), 1);
        assert_eq!(longest_path_order(&petersen()), 10);
    }

    #[test]
    fn subset_dp_examples() {
        assert_eq!(circumference_subset_dp(&cycle(5).unwrap()).unwrap(), 5);
        assert_eq!(circumference_subset_dp(&complete(4).unwrap()).unwrap(), 4);
        assert_eq!(circumference_subset_dp(&petersen()).unwrap(), 9);
        assert_eq!(circumference_subset_dp(&star(5).unwrap()).unwrap(), 2);
        assert!(matches!(
            circumference_subset_dp(&path(16).unwrap()),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn canonical_form() {
        let c = CycleWitness::canonical(vec![3, 1, 4, 2]);
        assert_eq!(c.vertices(), &[1, 3, 2, 4]);
        let c = CycleWitness::canonical(vec![5, 0, 2]);
        assert_eq!(c.vertices(), &[0, 2, 5]);
    }
}
