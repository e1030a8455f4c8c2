//! Vertex colourings and precoloured cliques.
//!
//! Text format of a colouring:
//!
//! ```text
//! c <number of distinct colours>
//! 0 <colour of vertex 0>
//! 1 <colour of vertex 1>
//! ...
//! ```

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Colour = u32;

/// Total map from vertex ids `0..n` to colour ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Colouring(Vec<Colour>);

impl Colouring {
    pub fn new(colours: Vec<Colour>) -> Self {
        Colouring(colours)
    }

    /// Every vertex coloured `c`.
    pub fn constant(n: usize, c: Colour) -> Self {
        Colouring(vec![c; n])
    }

    pub fn colour(&self, v: usize) -> Colour {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Colour] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Colour> {
        self.0
    }

    /// Distinct colours in increasing order.
    pub fn palette(&self) -> Vec<Colour> {
        self.0
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    pub fn num_colours(&self) -> usize {
        self.palette().len()
    }

    /// Relabels colours to `0..c` in order of first appearance.
    pub fn relabelled(&self) -> Colouring {
        let mut map = std::collections::HashMap::new();
        Colouring(
            self.0
                .iter()
                .map(|&c| {
                    let next = map.len() as Colour;
                    *map.entry(c).or_insert(next)
                })
                .collect(),
        )
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "c {}", self.num_colours()).unwrap();
        for (v, c) in self.0.iter().enumerate() {
            writeln!(out, "{v} {c}").unwrap();
        }
        out
    }

    /// Parses the colouring text format. Vertex lines must list `0, 1, ...`
    /// in order, and the header count must match the colours present.
    pub fn parse(bytes: &[u8]) -> Result<Colouring> {
        let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("input is not UTF-8: {e}"),
        })?;
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let bad = |line: usize, msg: String| Error::Parse { line, msg };

        let (hline, header) = lines
            .next()
            .ok_or_else(|| bad(0, "missing \"c <count>\" header".into()))?;
        let declared: usize = header
            .strip_prefix("c ")
            .and_then(|t| t.trim().parse().ok())
            .ok_or_else(|| bad(hline, format!("expected \"c <count>\", got {header:?}")))?;

        let mut colours = Vec::new();
        for (lineno, line) in lines {
            let mut it = line.split_whitespace();
            let (Some(v), Some(c), None) = (it.next(), it.next(), it.next()) else {
                return Err(bad(
                    lineno,
                    format!("expected \"<vertex> <colour>\", got {line:?}"),
                ));
            };
            let v: usize = v
                .parse()
                .map_err(|_| bad(lineno, format!("bad vertex id {v:?}")))?;
            let c: Colour = c
                .parse()
                .map_err(|_| bad(lineno, format!("bad colour {c:?}")))?;
            if v != colours.len() {
                return Err(bad(
                    lineno,
                    format!("expected vertex {}, got {v}", colours.len()),
                ));
            }
            colours.push(c);
        }
        let col = Colouring(colours);
        if col.num_colours() != declared {
            return Err(bad(
                hline,
                format!(
                    "header declares {declared} colours, found {}",
                    col.num_colours()
                ),
            ));
        }
        Ok(col)
    }
}

impl From<Vec<Colour>> for Colouring {
    fn from(v: Vec<Colour>) -> Self {
        Colouring(v)
    }
}

/// Up to two pairwise adjacent vertices with fixed colours.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PrecolouredClique {
    entries: Vec<(usize, Colour)>,
}

impl PrecolouredClique {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates the entries against `g`: at most two distinct vertices, in
    /// range, adjacent when there are two.
    pub fn new(g: &Graph, mut entries: Vec<(usize, Colour)>) -> Result<Self> {
        entries.sort_unstable();
        if entries.len() > 2 {
            return Err(Error::NotAClique(format!(
                "{} vertices given",
                entries.len()
            )));
        }
        for &(v, _) in &entries {
            if v >= g.order() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: g.order(),
                });
            }
        }
        if let [(a, _), (b, _)] = entries[..] {
            if a == b {
                return Err(Error::NotAClique(format!("vertex {a} listed twice")));
            }
            if !g.has_edge(a, b) {
                return Err(Error::NotAClique(format!("{a} and {b} are not adjacent")));
            }
        }
        Ok(PrecolouredClique { entries })
    }

    /// Parses `"v:c,v:c"`. The empty string gives no entries.
    pub fn parse_entries(spec: &str) -> Result<Vec<(usize, Colour)>> {
        spec.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|item| {
                let parsed = item
                    .split_once(':')
                    .and_then(|(v, c)| Some((v.trim().parse().ok()?, c.trim().parse().ok()?)));
                parsed.ok_or_else(|| Error::Parse {
                    line: 0,
                    msg: format!("bad precolour entry {item:?}, expected v:c"),
                })
            })
            .collect()
    }

    pub fn entries(&self) -> &[(usize, Colour)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|e| e.0)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.entries.iter().any(|e| e.0 == v)
    }

    /// Distinct colours of the clique, increasing.
    pub fn colours(&self) -> Vec<Colour> {
        let mut c: Vec<Colour> = self.entries.iter().map(|e| e.1).collect();
        c.sort_unstable();
        c.dedup();
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    #[test]
    fn text_round_trip() {
        let col = Colouring::new(vec![3, 0, 3, 7]);
        let text = col.to_text();
        assert_eq!(text, "c 3\n0 3\n1 0\n2 3\n3 7\n");
        assert_eq!(Colouring::parse(text.as_bytes()).unwrap(), col);
    }

    #[test]
    fn parse_rejects_inconsistent_files() {
        assert!(Colouring::parse(b"c 2\n0 1\n1 1\n").is_err());
        assert!(Colouring::parse(b"c 1\n1 0\n").is_err());
        assert!(Colouring::parse(b"0 1\n").is_err());
    }

    #[test]
    fn relabel_by_first_appearance() {
        let col = Colouring::new(vec![9, 4, 9, 2]).relabelled();
        assert_eq!(col.as_slice(), &[0, 1, 0, 2]);
    }

    #[test]
    fn clique_validation() {
        let p3 = path(3).unwrap();
        assert!(PrecolouredClique::new(&p3, vec![(0, 1), (1, 1)]).is_ok());
        assert!(matches!(
            PrecolouredClique::new(&p3, vec![(0, 7), (2, 7)]),
            Err(Error::NotAClique(_))
        ));
        assert!(PrecolouredClique::new(&p3, vec![(0, 1), (0, 2)]).is_err());
        let c3 = cycle(3).unwrap();
        assert!(PrecolouredClique::new(&c3, vec![(0, 1), (1, 2), (2, 3)]).is_err());
        assert!(PrecolouredClique::new(&c3, vec![(5, 1)]).is_err());
    }

    #[test]
    fn parse_precolour_spec() {
        assert_eq!(
            PrecolouredClique::parse_entries("0:9, 1:9").unwrap(),
            vec![(0, 9), (1, 9)]
        );
        assert!(PrecolouredClique::parse_entries("").unwrap().is_empty());
        assert!(PrecolouredClique::parse_entries("0-9").is_err());
    }
}
