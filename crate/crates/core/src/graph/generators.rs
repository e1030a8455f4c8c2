//! Deterministic graph families used as test corpora.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

/// Cycle `0-1-...-(m-1)-0`.
pub fn cycle(m: usize) -> Result<Graph> {
    require(m >= 3, || {
        format!("cycle needs at least 3 vertices, got {m}")
    })?;
    let edges: Vec<_> = (0..m).map(|i| (i, (i + 1) % m)).collect();
    Graph::from_edges(m, &edges)
}

/// Path `0-1-...-(m-1)`.
pub fn path(m: usize) -> Result<Graph> {
    require(m >= 1, || "path needs at least 1 vertex".into())?;
    let edges: Vec<_> = (1..m).map(|i| (i - 1, i)).collect();
    Graph::from_edges(m, &edges)
}

pub fn complete(m: usize) -> Result<Graph> {
    require(m >= 1, || "complete graph needs at least 1 vertex".into())?;
    let edges: Vec<_> = (0..m)
        .flat_map(|u| (u + 1..m).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(m, &edges)
}

/// `K_{1,d}` with centre 0.
pub fn star(d: usize) -> Result<Graph> {
    require(d >= 1, || "star needs at least 1 leaf".into())?;
    let edges: Vec<_> = (1..=d).map(|v| (0, v)).collect();
    Graph::from_edges(d + 1, &edges)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    require(a >= 1 && b >= 1, || "both parts must be non-empty".into())?;
    let edges: Vec<_> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(a + b, &edges)
}

/// Wheel on `m` vertices: hub 0 joined to the rim cycle `1..m`.
pub fn wheel(m: usize) -> Result<Graph> {
    require(m >= 4, || {
        format!("wheel needs at least 4 vertices, got {m}")
    })?;
    let rim = m - 1;
    let mut edges: Vec<_> = (1..m).map(|v| (0, v)).collect();
    edges.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
    Graph::from_edges(m, &edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).expect("static edge list")
}

/// Random cactus on `m` vertices whose blocks are bridges or cycles of
/// length at most `max_cycle`, so its circumference is at most
/// `max(max_cycle, 2)`.
///
/// Blocks are hung one at a time from a uniformly chosen existing vertex.
pub fn random_cactus(m: usize, max_cycle: usize, seed: u64) -> Result<Graph> {
    require(m >= 1, || "cactus needs at least 1 vertex".into())?;
    require(max_cycle >= 2, || {
        format!("block cycle cap must be at least 2, got {max_cycle}")
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut n = 1;
    let mut edges = Vec::new();
    while n < m {
        let anchor = rng.random_range(0..n);
        let longest = max_cycle.min(m - n + 1);
        let len = rng.random_range(2..=longest);
        if len == 2 {
            edges.push((anchor, n));
        } else {
            let mut prev = anchor;
            for v in n..n + len - 1 {
                edges.push((prev, v));
                prev = v;
            }
            edges.push((prev, anchor));
        }
        n += len - 1;
    }
    Graph::from_edges(m, &edges)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    require((0.0..=1.0).contains(&p), || {
        format!("edge probability {p} not in [0, 1]")
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Closure of the complete `branching`-ary rooted tree of height `depth`
/// (levels `0..=depth`), labelled in BFS order with the root at 0.
/// Every ancestor-descendant pair is adjacent.
pub fn tree_closure(depth: usize, branching: usize) -> Result<Graph> {
    require(depth >= 1 && branching >= 1, || {
        "tree closure needs depth >= 1 and branching >= 1".into()
    })?;
    let mut n: usize = 0;
    let mut level = 1usize;
    for _ in 0..=depth {
        n = n.checked_add(level).ok_or_else(too_big)?;
        level = level.checked_mul(branching).ok_or_else(too_big)?;
    }
    require(n <= 1 << 20, || {
        format!("tree closure with {n} vertices is too large")
    })?;
    let mut edges = Vec::new();
    for v in 1..n {
        let mut a = v;
        while a > 0 {
            a = (a - 1) / branching;
            edges.push((a, v));
        }
    }
    Graph::from_edges(n, &edges)
}

fn too_big() -> Error {
    Error::InvalidParameter("graph size overflows".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_shape() {
        let g = star(3).unwrap();
        assert_eq!((g.order(), g.size()), (4, 3));
        assert_eq!(g.degree(0), 3);
    }

    #[test]
    fn tree_closure_shape() {
        let g = tree_closure(2, 2).unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.degree(0), 6);
        // Leaves see their parent and the root.
        assert!((3..7).all(|v| g.degree(v) == 2));
        assert_eq!(tree_closure(3, 2).unwrap().order(), 15);
        assert_eq!(tree_closure(3, 1).unwrap(), complete(4).unwrap());
    }

    #[test]
    fn small_families() {
        assert_eq!(cycle(5).unwrap().size(), 5);
        assert_eq!(wheel(6).unwrap().size(), 10);
        assert_eq!(complete_bipartite(2, 3).unwrap().size(), 6);
        let p = petersen();
        assert_eq!((p.order(), p.size()), (10, 15));
        assert!(p.vertices().all(|v| p.degree(v) == 3));
    }

    #[test]
    fn zero_sizes_rejected() {
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(star(0).is_err());
        assert!(wheel(3).is_err());
        assert!(tree_closure(0, 2).is_err());
        assert!(random_cactus(0, 5, 1).is_err());
    }

    #[test]
    fn cactus_is_deterministic_and_valid() {
        for seed in 0..20 {
            let a = random_cactus(30, 7, seed).unwrap();
            let b = random_cactus(30, 7, seed).unwrap();
            assert_eq!(a.to_edge_list(), b.to_edge_list());
            assert_eq!(a.order(), 30);
            assert!(a.is_connected());
            a.validate().unwrap();
        }
    }
}
