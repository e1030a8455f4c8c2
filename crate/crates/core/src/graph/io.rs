//! Edge-list text format.
//!
//! ```text
//! # optional comment lines
//! n m
//! u v      (m lines, 0 <= u, v < n, u != v)
//! ```

use std::fmt::Write;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line: lineno,
            msg: format!("expected two integers, got {line:?}"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line: lineno,
            msg: format!("not a non-negative integer: {tok:?}"),
        })
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line: lineno,
            msg: format!("trailing tokens in {line:?}"),
        });
    }
    Ok((a, b))
}

impl Graph {
    /// Parses the edge-list format. Duplicate edge lines collapse to one edge.
    pub fn parse_edge_list(bytes: &[u8]) -> Result<Graph> {
        let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse {
            line: 0,
            msg: format!("input is not UTF-8: {e}"),
        })?;
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end()))
            .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty());

        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "missing \"n m\" header".into(),
        })?;
        let (n, m) = parse_pair(header, hline)?;

        let mut edges = Vec::with_capacity(m);
        for (lineno, line) in lines {
            let (u, v) = parse_pair(line, lineno)?;
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    order: n,
                });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: hline,
                msg: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edges(n, &edges)
    }

    /// Canonical edge-list text: header, then edges `u < v` in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.order(), self.size()).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::parse_edge_list(s.as_bytes())
    }
}
