//! Small named graphs used by the examples and tests.

use crate::graph::Multigraph;

pub fn k4() -> Multigraph {
    Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

pub fn cube() -> Multigraph {
    Multigraph::from_edges(
        8,
        &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
    )
}

/// Cycle on `n >= 2` vertices (a parallel pair for `n = 2`).
pub fn cycle(n: usize) -> Multigraph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Multigraph::from_edges(n, &edges)
}

/// `k` parallel edges between two vertices.
pub fn bundle(k: usize) -> Multigraph {
    Multigraph::from_edges(2, &vec![(0, 1); k])
}

/// Poles 0 and 1 joined by internally disjoint paths of the given lengths.
pub fn paths(lengths: &[usize]) -> Multigraph {
    let mut edges = Vec::new();
    let mut n = 2;
    for &len in lengths {
        assert!(len >= 1);
        let mut at = 0;
        for _ in 1..len {
            edges.push((at, n));
            at = n;
            n += 1;
        }
        edges.push((at, 1));
    }
    Multigraph::from_edges(n, &edges)
}

/// Graph with every edge of `g` subdivided once.
pub fn subdivided(g: &Multigraph) -> Multigraph {
    let mut edges = Vec::new();
    for e in 0..g.m() {
        let (a, b) = g.ends(e);
        let mid = g.n() + e;
        edges.push((a, mid));
        edges.push((mid, b));
    }
    Multigraph::from_edges(g.n() + g.m(), &edges)
}

/// Wheel with `rim` outer vertices; the hub is vertex `rim`.
pub fn wheel(rim: usize) -> Multigraph {
    let mut edges: Vec<_> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    edges.extend((0..rim).map(|i| (i, rim)));
    Multigraph::from_edges(rim + 1, &edges)
}
