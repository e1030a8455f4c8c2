//! Cut vertices, blocks, and separations of order at most two.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

const UNSEEN: usize = usize::MAX;

struct LowPoints {
    is_cut: Vec<bool>,
    blocks: Vec<VertexSet>,
}

/// Iterative Tarjan low-point search on `g` with the vertices flagged in
/// `removed` deleted.
fn low_points(g: &Graph, removed: &[bool], want_blocks: bool) -> LowPoints {
    let n = g.order();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut time = 0;
    // (vertex, parent, next neighbour index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN || removed[root] {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        stack.push((root, UNSEEN, 0));

        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if let Some(&w) = g.neighbours(v).get(top.2) {
                top.2 += 1;
                if removed[w] {
                    continue;
                }
                if disc[w] == UNSEEN {
                    if want_blocks {
                        edge_stack.push((v, w));
                    }
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    if want_blocks {
                        edge_stack.push((v, w));
                    }
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            let Some(&(u, _, _)) = stack.last() else {
                continue;
            };
            low[u] = low[u].min(low[v]);
            if low[v] >= disc[u] {
                if u == root {
                    root_children += 1;
                } else {
                    is_cut[u] = true;
                }
                if want_blocks {
                    let mut block = Vec::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        block.push(a);
                        block.push(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    blocks.push(VertexSet::from(block));
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }
    LowPoints { is_cut, blocks }
}

/// Cut vertices of `g`.
pub fn articulation_points(g: &Graph) -> VertexSet {
    let lp = low_points(g, &vec![false; g.order()], false);
    (0..g.order()).filter(|&v| lp.is_cut[v]).collect()
}

/// Vertex sets of the biconnected components (blocks). Bridges appear as
/// two-element blocks; isolated vertices have none.
pub fn biconnected_components(g: &Graph) -> Vec<VertexSet> {
    let mut blocks = low_points(g, &vec![false; g.order()], true).blocks;
    blocks.sort();
    blocks
}

/// Connected components of `g - removed`, listed by smallest vertex.
fn components_avoiding(g: &Graph, removed: &[bool]) -> Vec<VertexSet> {
    let mut seen = removed.to_vec();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        stack.push(s);
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in g.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.push(VertexSet::from(comp));
    }
    out
}

/// A separation `(G1, G2)` of order at most two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub separator: VertexSet,
    pub side1: VertexSet,
    pub side2: VertexSet,
}

impl Separation {
    /// Builds the separation for separator `s`: side1 is the lexicographically
    /// least set of the form `component + S`, side2 is the rest plus `S`.
    fn from_separator(g: &Graph, s: VertexSet) -> Option<Separation> {
        let mut removed = vec![false; g.order()];
        for v in s.iter() {
            removed[v] = true;
        }
        let comps = components_avoiding(g, &removed);
        if comps.len() < 2 {
            return None;
        }
        let (best, side1) = comps
            .iter()
            .enumerate()
            .map(|(i, c)| (i, c.union(&s)))
            .min_by(|a, b| a.1.as_slice().cmp(b.1.as_slice()))?;
        let side2 = comps
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != best)
            .fold(s.clone(), |acc, (_, c)| acc.union(c));
        Some(Separation {
            separator: s,
            side1,
            side2,
        })
    }

    /// Checks every separation invariant against `g`, including the
    /// minimality witnesses for two-vertex separators.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let n = g.order();
        let s = &self.separator;
        if s.len() > 2 {
            return Err(format!("separator {s} has more than two vertices"));
        }
        for set in [s, &self.side1, &self.side2] {
            set.check_range(n).map_err(|e| e.to_string())?;
        }
        if self.side1.union(&self.side2).len() != n {
            return Err("sides do not cover the graph".into());
        }
        let common: VertexSet = self
            .side1
            .iter()
            .filter(|&v| self.side2.contains(v))
            .collect();
        if &common != s {
            return Err(format!("sides intersect in {common}, not in {s}"));
        }
        if self.side1 == *s || self.side2 == *s {
            return Err("a side equals the separator".into());
        }
        for (u, v) in g.edges() {
            let crosses = |a: usize, b: usize| !self.side2.contains(a) && !self.side1.contains(b);
            if crosses(u, v) || crosses(v, u) {
                return Err(format!("edge {u}-{v} joins the two sides"));
            }
        }
        if let &[a, b] = s.as_slice() {
            for side in [&self.side1, &self.side2] {
                if !path_within(g, side, a, b) {
                    return Err(format!("side {side} has no {a}-{b} path"));
                }
            }
        }
        Ok(())
    }
}

fn path_within(g: &Graph, allowed: &VertexSet, a: usize, b: usize) -> bool {
    let mut seen = vec![false; g.order()];
    let mut stack = vec![a];
    seen[a] = true;
    while let Some(v) = stack.pop() {
        if v == b {
            return true;
        }
        for &w in g.neighbours(v) {
            if !seen[w] && allowed.contains(w) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

fn require_order(g: &Graph) -> Result<()> {
    if g.order() <= 3 {
        return Err(Error::Precondition(format!(
            "separation search needs at least 4 vertices, got {}",
            g.order()
        )));
    }
    Ok(())
}

/// Finds a separation of order at most two, or `None` when `g` is
/// 3-connected.
///
/// Smallest separator order wins, then the lexicographically least
/// separator, then the lexicographically least side1.
pub fn find_separation(g: &Graph) -> Result<Option<Separation>> {
    require_order(g)?;
    let n = g.order();

    if !g.is_connected() {
        return Ok(Separation::from_separator(g, VertexSet::new()));
    }
    if let Some(v) = articulation_points(g).iter().next() {
        return Ok(Separation::from_separator(g, [v].into()));
    }
    let mut removed = vec![false; n];
    for a in 0..n {
        removed[a] = true;
        let lp = low_points(g, &removed, false);
        removed[a] = false;
        // A partner below `a` would have been found on an earlier pass.
        if let Some(b) = (a + 1..n).find(|&b| lp.is_cut[b]) {
            return Ok(Separation::from_separator(g, [a, b].into()));
        }
    }
    Ok(None)
}

/// Connected, no cut vertex, no 2-vertex cut, at least 4 vertices.
pub fn is_three_connected(g: &Graph) -> Result<bool> {
    Ok(find_separation(g)?.is_none())
}
