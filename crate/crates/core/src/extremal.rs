//! The lower-bound family `G_{k,d}`: `G_1 = K_{1,d}`, and `G_k` is `d`
//! disjoint copies of `G_{k-1}` plus one vertex adjacent to everything.
//!
//! `G_{k,d}` has circumference at most `2^k`, no path on `2^{k+1}` vertices,
//! and every `k`-colouring has a vertex with monochromatic degree at least
//! `d`. The checks below confirm these by exhaustive search on small
//! instances.

use std::fmt::Write;

use rayon::prelude::*;

use crate::colouring::{Colour, Colouring};
use crate::cycles::{circumference, longest_path_order};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_ORDER_CAP: u128 = 10_000;
/// Largest order handed to the exact cycle and path searches.
pub const STRUCTURAL_LIMIT: u128 = 200;
/// Largest number of colour vectors enumerated by the forced-degree check.
pub const ENUMERATION_LIMIT: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalSpec {
    pub k: u32,
    pub d: u32,
    /// `n_1 = d + 1`, `n_k = d * n_{k-1} + 1`.
    pub expected_order: u128,
}

impl ExtremalSpec {
    pub fn new(k: u32, d: u32) -> Result<Self> {
        if k == 0 || d == 0 {
            return Err(Error::InvalidParameter(format!(
                "need k >= 1 and d >= 1, got k = {k}, d = {d}"
            )));
        }
        let mut order: u128 = 1;
        for _ in 0..k {
            order = order
                .checked_mul(u128::from(d))
                .and_then(|x| x.checked_add(1))
                .ok_or(Error::TooLarge {
                    what: "extremal graph order",
                    size: u128::MAX,
                    limit: DEFAULT_ORDER_CAP,
                })?;
        }
        Ok(ExtremalSpec {
            k,
            d,
            expected_order: order,
        })
    }

    pub fn circumference_bound(&self) -> u128 {
        1 << self.k
    }

    /// Paths must have fewer vertices than this.
    pub fn path_bound(&self) -> u128 {
        1 << (self.k + 1)
    }
}

/// Builds `G_{k,d}` with copies laid out contiguously and the dominating
/// vertex last. Refuses graphs above [`DEFAULT_ORDER_CAP`] vertices.
pub fn build_extremal(k: u32, d: u32) -> Result<Graph> {
    build_extremal_capped(k, d, DEFAULT_ORDER_CAP)
}

pub fn build_extremal_capped(k: u32, d: u32, cap: u128) -> Result<Graph> {
    let spec = ExtremalSpec::new(k, d)?;
    if spec.expected_order > cap {
        return Err(Error::TooLarge {
            what: "extremal graph order",
            size: spec.expected_order,
            limit: cap,
        });
    }
    let d = d as usize;
    // G_0 is a single vertex, so G_1 comes out as the star K_{1,d}.
    let mut order = 1usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for _ in 0..k {
        let mut next = Vec::with_capacity(edges.len() * d + order * d);
        for copy in 0..d {
            let off = copy * order;
            next.extend(edges.iter().map(|&(u, v)| (u + off, v + off)));
        }
        let hub = order * d;
        next.extend((0..hub).map(|v| (v, hub)));
        edges = next;
        order = hub + 1;
    }
    Graph::from_edges(order, &edges)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralReport {
    pub spec: ExtremalSpec,
    pub order: usize,
    pub circumference: usize,
    pub longest_path_order: usize,
}

impl StructuralReport {
    pub fn circumference_ok(&self) -> bool {
        self.circumference as u128 <= self.spec.circumference_bound()
    }

    pub fn path_ok(&self) -> bool {
        (self.longest_path_order as u128) < self.spec.path_bound()
    }

    pub fn passed(&self) -> bool {
        self.circumference_ok() && self.path_ok()
    }

    pub fn to_text(&self) -> String {
        let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" };
        let mut out = String::new();
        writeln!(
            out,
            "order {} expected {}",
            self.order, self.spec.expected_order
        )
        .unwrap();
        writeln!(
            out,
            "circumference {} <= {} {}",
            self.circumference,
            self.spec.circumference_bound(),
            verdict(self.circumference_ok())
        )
        .unwrap();
        writeln!(
            out,
            "longest_path {} < {} {}",
            self.longest_path_order,
            self.spec.path_bound(),
            verdict(self.path_ok())
        )
        .unwrap();
        out
    }
}

/// Exact circumference and longest path of `G_{k,d}`.
pub fn verify_structural(k: u32, d: u32) -> Result<StructuralReport> {
    let spec = ExtremalSpec::new(k, d)?;
    if spec.expected_order > STRUCTURAL_LIMIT {
        return Err(Error::TooLarge {
            what: "instance for exact cycle search",
            size: spec.expected_order,
            limit: STRUCTURAL_LIMIT,
        });
    }
    let g = build_extremal(k, d)?;
    Ok(StructuralReport {
        spec,
        order: g.order(),
        circumference: circumference(&g),
        longest_path_order: longest_path_order(&g),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcedDegreeReport {
    /// Every enumerated colouring has a vertex of monochromatic degree `>= d`.
    pub holds: bool,
    pub colourings_checked: u128,
    /// Lexicographically first colouring with all monochromatic degrees
    /// below `d`, when one exists.
    pub counterexample: Option<Colouring>,
}

impl ForcedDegreeReport {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "forced_degree {} colourings={}\n",
            if self.holds { "PASS" } else { "FAIL" },
            self.colourings_checked
        );
        if let Some(c) = &self.counterexample {
            let list: Vec<String> = c.as_slice().iter().map(u32::to_string).collect();
            writeln!(out, "counterexample {}", list.join(",")).unwrap();
        }
        out
    }
}

fn all_degrees_below(g: &Graph, col: &[Colour], d: usize) -> bool {
    g.vertices().all(|v| {
        g.neighbours(v)
            .iter()
            .filter(|&&w| col[w] == col[v])
            .take(d)
            .count()
            < d
    })
}

/// Enumerates every colouring of `g` with `colours` colours in which vertex
/// `fixed` has colour 0, looking for one with all monochromatic degrees
/// below `d`. Fixing one vertex loses nothing because the property is
/// invariant under permuting colours.
///
/// Colour vectors are visited in lexicographic order; work is split by
/// prefix across the rayon pool and the first counterexample in that order
/// is reported.
pub fn forced_mono_degree(
    g: &Graph,
    colours: u32,
    d: usize,
    fixed: usize,
) -> Result<ForcedDegreeReport> {
    let n = g.order();
    if colours == 0 || fixed >= n {
        return Err(Error::InvalidParameter(format!(
            "need at least one colour and a fixed vertex below {n}"
        )));
    }
    let free: Vec<usize> = (0..n).filter(|&v| v != fixed).collect();
    let base = u128::from(colours);
    let total = base
        .checked_pow(free.len() as u32)
        .filter(|&t| t <= ENUMERATION_LIMIT)
        .ok_or(Error::TooLarge {
            what: "colouring enumeration",
            size: base.saturating_pow(free.len() as u32),
            limit: ENUMERATION_LIMIT,
        })?;

    // Enough prefixes to keep a pool busy, few enough to stay cheap.
    let mut prefix_len = 0;
    while prefix_len < free.len() && base.pow(prefix_len as u32) < 256 {
        prefix_len += 1;
    }
    let prefixes = base.pow(prefix_len as u32) as u64;
    let suffix = &free[prefix_len..];

    let found: Vec<Option<Vec<Colour>>> = (0..prefixes)
        .into_par_iter()
        .map(|p| {
            let mut col = vec![0 as Colour; n];
            // Most significant digit belongs to the first free vertex.
            let mut rest = p;
            for &v in free[..prefix_len].iter().rev() {
                col[v] = (rest % u64::from(colours)) as Colour;
                rest /= u64::from(colours);
            }
            loop {
                if all_degrees_below(g, &col, d) {
                    return Some(col);
                }
                // Odometer over the suffix, last vertex fastest.
                let mut i = suffix.len();
                loop {
                    if i == 0 {
                        return None;
                    }
                    i -= 1;
                    let v = suffix[i];
                    col[v] += 1;
                    if col[v] < colours {
                        break;
                    }
                    col[v] = 0;
                }
            }
        })
        .collect();

    let counterexample = found.into_iter().flatten().next().map(Colouring::new);
    Ok(ForcedDegreeReport {
        holds: counterexample.is_none(),
        colourings_checked: total,
        counterexample,
    })
}

/// Exhaustively checks that every `k`-colouring of `G_{k,d}` has a vertex
/// of monochromatic degree at least `d`, with the dominating vertex fixed
/// to colour 0.
pub fn check_forced_degree(k: u32, d: u32) -> Result<ForcedDegreeReport> {
    let spec = ExtremalSpec::new(k, d)?;
    let free_count = u32::try_from(spec.expected_order - 1).unwrap_or(u32::MAX);
    let total = u128::from(k).saturating_pow(free_count);
    if total > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            what: "colouring enumeration",
            size: total,
            limit: ENUMERATION_LIMIT,
        });
    }
    let g = build_extremal(k, d)?;
    forced_mono_degree(&g, k, d as usize, g.order() - 1)
}
