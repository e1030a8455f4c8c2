//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! A [`Graph`] is an immutable value. Operations that change the vertex or
//! edge set return a new graph together with an explicit id-map, so callers
//! can move per-vertex data (colours, mostly) between a graph and the pieces
//! derived from it.

mod generators;
mod io;

pub use generators::*;

use std::fmt;

use crate::error::{Error, Result};

/// Sorted list of distinct vertex ids.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// `{0..n} \ self`.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet((0..n).filter(|&v| !self.contains(v)).collect())
    }

    /// Checks every id against the host graph order.
    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange {
                vertex: v,
                order: n,
            }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse to one.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    fn from_raw_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Checks the representation invariants: symmetric adjacency, no loops,
    /// strictly increasing neighbour lists, ids in range.
    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        for (u, list) in self.adj.iter().enumerate() {
            for (i, &v) in list.iter().enumerate() {
                self.check_vertex(v)?;
                if v == u {
                    return Err(Error::SelfLoop(u));
                }
                if i > 0 && list[i - 1] >= v {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency of {u} not strictly increasing"
                    )));
                }
                if !self.has_edge(v, u) {
                    return Err(Error::InvalidParameter(format!(
                        "edge {u}-{v} missing its reverse (n = {n})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Subgraph induced by `keep`, relabelled in increasing order.
    ///
    /// The returned map sends each old id to its new id, or `None` when the
    /// vertex was dropped.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        keep.check_range(self.order())?;
        let mut map = vec![None; self.order()];
        for (new, old) in keep.iter().enumerate() {
            map[old] = Some(new);
        }
        let adj = keep
            .iter()
            .map(|old| self.adj[old].iter().filter_map(|&w| map[w]).collect())
            .collect();
        // Relabelling is monotone, so lists stay sorted.
        Ok((Graph { adj }, map))
    }

    /// `G - remove`.
    pub fn remove_vertices(&self, remove: &VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        remove.check_range(self.order())?;
        self.induced_subgraph(&remove.complement(self.order()))
    }

    /// Copy of the graph with the edge `uv` added. Idempotent.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut g = self.clone();
        if !g.has_edge(u, v) {
            let pos = g.adj[u].binary_search(&v).unwrap_err();
            g.adj[u].insert(pos, v);
            let pos = g.adj[v].binary_search(&u).unwrap_err();
            g.adj[v].insert(pos, u);
        }
        Ok(g)
    }

    /// Contracts the edge `uv`.
    ///
    /// The larger endpoint is merged into the smaller one; every other vertex
    /// keeps its relative order. The map sends both endpoints to the merged id.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<(Graph, Vec<usize>)> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let (lo, hi) = (u.min(v), u.max(v));
        let map: Vec<usize> = (0..self.order())
            .map(|w| match w.cmp(&hi) {
                std::cmp::Ordering::Less => w,
                std::cmp::Ordering::Equal => lo,
                std::cmp::Ordering::Greater => w - 1,
            })
            .collect();
        let mut adj = vec![Vec::new(); self.order() - 1];
        for (a, b) in self.edges() {
            let (x, y) = (map[a], map[b]);
            if x != y {
                adj[x].push(y);
                adj[y].push(x);
            }
        }
        Ok((Self::from_raw_adjacency(adj), map))
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
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

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// True when the graph has no cycle.
    pub fn is_forest(&self) -> bool {
        self.size() + self.components().len() == self.order()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn induced_subgraph_of_cycle_is_path() {
        let (p, map) = cycle(5)
            .unwrap()
            .induced_subgraph(&[0, 1, 2].into())
            .unwrap();
        assert_eq!(p, path(3).unwrap());
        assert_eq!(map, vec![Some(0), Some(1), Some(2), None, None]);
    }

    #[test]
    fn induced_subgraph_identity() {
        let k4 = complete(4).unwrap();
        let all: VertexSet = k4.vertices().collect();
        let (h, map) = k4.induced_subgraph(&all).unwrap();
        assert_eq!(h, k4);
        assert_eq!(map, (0..4).map(Some).collect::<Vec<_>>());
    }

    #[test]
    fn induced_subgraph_drops_star_centre() {
        let (h, _) = star(3)
            .unwrap()
            .induced_subgraph(&[1, 2, 3].into())
            .unwrap();
        assert_eq!(h, Graph::empty(3));
    }

    #[test]
    fn induced_subgraph_rejects_out_of_range() {
        let err = path(3)
            .unwrap()
            .induced_subgraph(&[0, 5].into())
            .unwrap_err();
        assert!(matches!(err, Error::VertexOutOfRange { vertex: 5, .. }));
    }

    #[test]
    fn add_edge_cases() {
        assert_eq!(path(3).unwrap().add_edge(0, 2).unwrap(), cycle(3).unwrap());
        assert_eq!(cycle(3).unwrap().add_edge(0, 1).unwrap(), cycle(3).unwrap());
        assert_eq!(
            Graph::empty(2).add_edge(0, 1).unwrap(),
            complete(2).unwrap()
        );
        assert_eq!(Graph::empty(2).add_edge(1, 1), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn contract_edge_cases() {
        let (g, map) = path(3).unwrap().contract_edge(0, 1).unwrap();
        assert_eq!(g, path(2).unwrap());
        assert_eq!(map[0], map[1]);

        let (g, _) = cycle(3).unwrap().contract_edge(1, 2).unwrap();
        assert_eq!(g, complete(2).unwrap());

        let (g, map) = cycle(4).unwrap().contract_edge(3, 0).unwrap();
        assert_eq!(g, cycle(3).unwrap());
        assert_eq!(map, vec![0, 1, 2, 0]);

        assert_eq!(
            path(3).unwrap().contract_edge(0, 2),
            Err(Error::NotAnEdge(0, 2))
        );
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        ));
    }

    #[test]
    fn forest_detection() {
        assert!(star(4).unwrap().is_forest());
        assert!(Graph::empty(3).is_forest());
        assert!(!cycle(4).unwrap().is_forest());
    }
}
