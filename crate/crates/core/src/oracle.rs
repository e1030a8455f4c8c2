//! Brute-force optimal colour counts for small graphs.
//!
//! Backtracking over vertices in BFS order. Vertex order position 0 gets
//! colour 0 and a new colour may only be opened after all smaller ones are
//! in use; partial assignments are cut as soon as a monochromatic component
//! (or a monochromatic degree) exceeds the budget.

use rayon::prelude::*;

use crate::colouring::{Colour, Colouring};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ORACLE_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Constraint {
    /// Monochromatic components of order at most d.
    ComponentOrder(usize),
    /// Monochromatic degree at most d.
    Degree(usize),
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut order = Vec::with_capacity(g.order());
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let start = order.len();
        order.push(s);
        let mut i = start;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &w in g.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

struct Search<'g> {
    g: &'g Graph,
    order: Vec<usize>,
    colours: Colour,
    rule: Constraint,
    col: Vec<Option<Colour>>,
    stack: Vec<usize>,
    seen: Vec<bool>,
}

impl Search<'_> {
    fn ok_after_assigning(&mut self, v: usize) -> bool {
        let c = self.col[v];
        match self.rule {
            Constraint::ComponentOrder(d) => {
                self.seen.fill(false);
                self.stack.clear();
                self.stack.push(v);
                self.seen[v] = true;
                let mut size = 0;
                while let Some(x) = self.stack.pop() {
                    size += 1;
                    if size > d {
                        return false;
                    }
                    for &w in self.g.neighbours(x) {
                        if !self.seen[w] && self.col[w] == c {
                            self.seen[w] = true;
                            self.stack.push(w);
                        }
                    }
                }
                true
            }
            Constraint::Degree(d) => {
                let same = |x: usize| {
                    self.g
                        .neighbours(x)
                        .iter()
                        .filter(|&&w| self.col[w] == c)
                        .count()
                };
                same(v) <= d
                    && self
                        .g
                        .neighbours(v)
                        .iter()
                        .filter(|&&w| self.col[w] == c)
                        .all(|&w| same(w) <= d)
            }
        }
    }

    fn assign(&mut self, pos: usize, opened: Colour) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let v = self.order[pos];
        let limit = (opened + 1).min(self.colours);
        for c in 0..limit {
            self.col[v] = Some(c);
            if self.ok_after_assigning(v) && self.assign(pos + 1, opened.max(c + 1)) {
                return true;
            }
        }
        self.col[v] = None;
        false
    }
}

fn check_size(g: &Graph) -> Result<()> {
    if g.order() > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            what: "graph for exhaustive colouring",
            size: g.order() as u128,
            limit: ORACLE_LIMIT as u128,
        });
    }
    Ok(())
}

fn feasible(g: &Graph, colours: Colour, rule: Constraint) -> Option<Colouring> {
    let n = g.order();
    let mut s = Search {
        g,
        order: bfs_order(g),
        colours,
        rule,
        col: vec![None; n],
        stack: Vec::new(),
        seen: vec![false; n],
    };
    s.assign(0, 0)
        .then(|| Colouring::new(s.col.into_iter().map(Option::unwrap).collect()))
}

fn minimum(g: &Graph, rule: Constraint) -> Result<(usize, Colouring)> {
    check_size(g)?;
    let n = g.order();
    if n == 0 {
        return Ok((0, Colouring::new(Vec::new())));
    }
    // n colours always suffice; the smallest feasible count wins regardless
    // of evaluation order.
    (1..=n)
        .into_par_iter()
        .find_map_first(|c| feasible(g, c as Colour, rule).map(|col| (c, col)))
        .ok_or_else(|| Error::Assertion("no colouring with n colours".into()))
}

/// A colouring with at most `colours` colours whose monochromatic
/// components have order at most `d`, if one exists.
pub fn fragmentation_colouring_with(
    g: &Graph,
    d: usize,
    colours: u32,
) -> Result<Option<Colouring>> {
    check_size(g)?;
    if d == 0 && g.order() > 0 {
        return Err(Error::InvalidParameter(
            "component order bound must be at least 1".into(),
        ));
    }
    Ok(feasible(g, colours, Constraint::ComponentOrder(d)))
}

/// A colouring with at most `colours` colours and monochromatic degree at
/// most `d`, if one exists.
pub fn defective_colouring_with(g: &Graph, d: usize, colours: u32) -> Result<Option<Colouring>> {
    check_size(g)?;
    Ok(feasible(g, colours, Constraint::Degree(d)))
}

/// Fewest colours such that every monochromatic component has order at
/// most `d`, with an optimal colouring.
pub fn min_fragmentation_colouring(g: &Graph, d: usize) -> Result<(usize, Colouring)> {
    if d == 0 && g.order() > 0 {
        return Err(Error::InvalidParameter(
            "component order bound must be at least 1".into(),
        ));
    }
    minimum(g, Constraint::ComponentOrder(d))
}

pub fn min_fragmentation_colours(g: &Graph, d: usize) -> Result<usize> {
    min_fragmentation_colouring(g, d).map(|r| r.0)
}

/// Fewest colours such that every vertex has at most `d` neighbours of its
/// own colour, with an optimal colouring.
pub fn min_defective_colouring(g: &Graph, d: usize) -> Result<(usize, Colouring)> {
    minimum(g, Constraint::Degree(d))
}

pub fn min_defective_colours(g: &Graph, d: usize) -> Result<usize> {
    min_defective_colouring(g, d).map(|r| r.0)
}
