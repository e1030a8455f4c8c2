//! Independent checks of a colouring against the fragmentation guarantees.
//!
//! Rules:
//! - R1: every monochromatic component has order at most `k`;
//! - R2: every monochromatic component meeting the precoloured clique lies
//!   inside it;
//! - R3: the number of colours is within budget;
//! - R4: the precoloured vertices keep their colours.
//!
//! Nothing here is shared with the colouring engine.

use std::fmt::{self, Write};

use crate::bounds::{theorem1_bound, MAX_K};
use crate::colouring::{Colouring, PrecolouredClique};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    ComponentOrder = 1,
    Containment = 2,
    ColourBudget = 3,
    PrecolourKept = 4,
}

impl Rule {
    pub const ALL: [Rule; 4] = [
        Rule::ComponentOrder,
        Rule::Containment,
        Rule::ColourBudget,
        Rule::PrecolourKept,
    ];
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}", *self as u8)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    pub witness: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub colours_used: usize,
    pub colour_budget: usize,
    pub max_component_order: usize,
    pub component_partition: Vec<VertexSet>,
    pub c_containment_ok: bool,
    pub max_mono_degree: usize,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn rule_passed(&self, rule: Rule) -> bool {
        self.violations.iter().all(|v| v.rule != rule)
    }

    /// One line per rule, then a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for rule in Rule::ALL {
            let witnesses: Vec<&Violation> =
                self.violations.iter().filter(|v| v.rule == rule).collect();
            if witnesses.is_empty() {
                writeln!(out, "{rule} PASS").unwrap();
            } else {
                write!(out, "{rule} FAIL witness").unwrap();
                for w in witnesses {
                    write!(out, " {{{}}}", w.witness).unwrap();
                }
                out.push('\n');
            }
        }
        writeln!(
            out,
            "colours={} budget={} maxcomp={} maxdeg={}",
            self.colours_used, self.colour_budget, self.max_component_order, self.max_mono_degree
        )
        .unwrap();
        out
    }
}

fn check_total(g: &Graph, col: &Colouring) -> Result<()> {
    if col.len() != g.order() {
        return Err(Error::PartialColouring {
            expected: g.order(),
            got: col.len(),
        });
    }
    Ok(())
}

/// Connected components of every colour class, listed by smallest vertex.
pub fn monochromatic_components(g: &Graph, col: &Colouring) -> Result<Vec<VertexSet>> {
    check_total(g, col)?;
    let n = g.order();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let c = col.colour(s);
        seen[s] = true;
        queue.push_back(s);
        let mut part = Vec::new();
        while let Some(v) = queue.pop_front() {
            part.push(v);
            for &w in g.neighbours(v) {
                if !seen[w] && col.colour(w) == c {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        parts.push(VertexSet::from(part));
    }
    Ok(parts)
}

/// Number of neighbours of `v` with the colour of `v`.
pub fn mono_degree(g: &Graph, col: &Colouring, v: usize) -> Result<usize> {
    check_total(g, col)?;
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    let c = col.colour(v);
    Ok(g.neighbours(v)
        .iter()
        .filter(|&&w| col.colour(w) == c)
        .count())
}

/// Allowed number of colours: `floor(3 log2 k)` for `k >= 3`; for `k <= 2`
/// the proper 2-colouring budget, `max(2, distinct precolours + 1)`.
pub fn colour_budget(k: usize, clique: &PrecolouredClique) -> usize {
    if k <= 2 {
        2.max(clique.colours().len() + 1)
    } else {
        theorem1_bound((k as u64).min(MAX_K)).expect("k in range") as usize
    }
}

/// Checks rules R1-R4. Failures are reported, not returned as errors; the
/// only error is a colouring whose length differs from the graph order.
pub fn verify_fragmentation(
    g: &Graph,
    col: &Colouring,
    k: usize,
    clique: &PrecolouredClique,
) -> Result<VerifyReport> {
    let parts = monochromatic_components(g, col)?;
    let mut violations = Vec::new();

    for part in &parts {
        if part.len() > k {
            violations.push(Violation {
                rule: Rule::ComponentOrder,
                witness: part.clone(),
            });
        }
    }

    let mut c_containment_ok = true;
    for part in &parts {
        let meets = clique.vertices().any(|v| part.contains(v));
        if meets && !part.iter().all(|v| clique.contains(v)) {
            c_containment_ok = false;
            violations.push(Violation {
                rule: Rule::Containment,
                witness: part.clone(),
            });
        }
    }

    let palette = col.palette();
    let budget = colour_budget(k, clique);
    if palette.len() > budget {
        // One representative vertex per colour.
        let reps: VertexSet = palette
            .iter()
            .filter_map(|&c| (0..g.order()).find(|&v| col.colour(v) == c))
            .collect();
        violations.push(Violation {
            rule: Rule::ColourBudget,
            witness: reps,
        });
    }

    for &(v, c) in clique.entries() {
        if v >= col.len() || col.colour(v) != c {
            violations.push(Violation {
                rule: Rule::PrecolourKept,
                witness: [v].into(),
            });
        }
    }

    let mut max_mono_degree = 0;
    for v in g.vertices() {
        max_mono_degree = max_mono_degree.max(mono_degree(g, col, v)?);
    }

    Ok(VerifyReport {
        colours_used: palette.len(),
        colour_budget: budget,
        max_component_order: parts.iter().map(VertexSet::len).max().unwrap_or(0),
        component_partition: parts,
        c_containment_ok,
        max_mono_degree,
        violations,
    })
}
