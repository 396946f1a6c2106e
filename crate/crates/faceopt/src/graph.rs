//! Loop-free undirected multigraphs with stable string identifiers.
//!
//! Vertices and edges are stored in sorted-id order and addressed by dense
//! indices (`VertexIx`, `EdgeIx`) everywhere else in the crate.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};

pub type VertexIx = usize;
pub type EdgeIx = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertex_ids: Vec<String>,
    edge_ids: Vec<String>,
    ends: Vec<(VertexIx, VertexIx)>,
    incident: Vec<Vec<EdgeIx>>,
}

/// Two-coloring of the vertices; `side[v]` is the color class of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<bool>,
}

impl Bipartition {
    pub fn same_side(&self, u: VertexIx, v: VertexIx) -> bool {
        self.side[u] == self.side[v]
    }
}

fn padded(prefix: char, i: usize, count: usize) -> String {
    let width = count.saturating_sub(1).to_string().len();
    format!("{prefix}{i:0width$}")
}

impl Multigraph {
    /// Builds a graph from vertex ids and `(edge id, end, end)` triples.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, S)]) -> Result<Self> {
        let mut vertex_ids: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        vertex_ids.sort();
        for w in vertex_ids.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateId(w[0].clone()));
            }
        }
        let index: HashMap<&str, usize> =
            vertex_ids.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut raw = Vec::with_capacity(edges.len());
        let mut seen = HashSet::new();
        for (id, a, b) in edges {
            let id = id.as_ref();
            if index.contains_key(id) || !seen.insert(id.to_string()) {
                return Err(Error::DuplicateId(id.to_string()));
            }
            let u = *index
                .get(a.as_ref())
                .ok_or_else(|| Error::UnknownVertex(a.as_ref().to_string()))?;
            let v = *index
                .get(b.as_ref())
                .ok_or_else(|| Error::UnknownVertex(b.as_ref().to_string()))?;
            if u == v {
                return Err(Error::LoopEdge(id.to_string()));
            }
            raw.push((id.to_string(), u, v));
        }
        raw.sort_by(|x, y| x.0.cmp(&y.0));
        let edge_ids = raw.iter().map(|r| r.0.clone()).collect();
        let ends = raw.iter().map(|r| (r.1, r.2)).collect();
        Ok(Self::assemble(vertex_ids, edge_ids, ends))
    }

    /// Builds a graph on vertices `0..n` with synthetic ids `v0..`, `e0..`
    /// (zero padded so that id order equals index order).
    ///
    /// Panics on loops or out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(VertexIx, VertexIx)]) -> Self {
        for &(u, v) in edges {
            assert!(u < n && v < n && u != v, "bad edge ({u},{v})");
        }
        let vertex_ids = (0..n).map(|i| padded('v', i, n)).collect();
        let edge_ids = (0..edges.len()).map(|i| padded('e', i, edges.len())).collect();
        Self::assemble(vertex_ids, edge_ids, edges.to_vec())
    }

    fn assemble(vertex_ids: Vec<String>, edge_ids: Vec<String>, ends: Vec<(usize, usize)>) -> Self {
        let mut incident = vec![Vec::new(); vertex_ids.len()];
        for (e, &(u, v)) in ends.iter().enumerate() {
            incident[u].push(e);
            incident[v].push(e);
        }
        Multigraph { vertex_ids, edge_ids, ends, incident }
    }

    pub fn n(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn m(&self) -> usize {
        self.ends.len()
    }

    pub fn ends(&self, e: EdgeIx) -> (VertexIx, VertexIx) {
        self.ends[e]
    }

    pub fn edge_ends(&self) -> &[(VertexIx, VertexIx)] {
        &self.ends
    }

    pub fn other_end(&self, e: EdgeIx, v: VertexIx) -> VertexIx {
        let (a, b) = self.ends[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn incident(&self, v: VertexIx) -> &[EdgeIx] {
        &self.incident[v]
    }

    pub fn degree(&self, v: VertexIx) -> usize {
        self.incident[v].len()
    }

    pub fn vertex_id(&self, v: VertexIx) -> &str {
        &self.vertex_ids[v]
    }

    pub fn edge_id(&self, e: EdgeIx) -> &str {
        &self.edge_ids[e]
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertex_ids
    }

    pub fn edge_ids(&self) -> &[String] {
        &self.edge_ids
    }

    pub fn vertex_index(&self, id: &str) -> Option<VertexIx> {
        self.vertex_ids.binary_search_by(|v| v.as_str().cmp(id)).ok()
    }

    pub fn edge_index(&self, id: &str) -> Option<EdgeIx> {
        self.edge_ids.binary_search_by(|e| e.as_str().cmp(id)).ok()
    }

    /// Subgraph formed by `edges` and their endpoints, ids preserved.
    pub fn edge_subgraph(&self, edges: &[EdgeIx]) -> Multigraph {
        let mut verts: Vec<VertexIx> = edges
            .iter()
            .flat_map(|&e| [self.ends[e].0, self.ends[e].1])
            .collect();
        verts.sort_unstable();
        verts.dedup();
        let mut es: Vec<EdgeIx> = edges.to_vec();
        es.sort_unstable();
        es.dedup();
        let vmap: HashMap<VertexIx, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        Self::assemble(
            verts.iter().map(|&v| self.vertex_ids[v].clone()).collect(),
            es.iter().map(|&e| self.edge_ids[e].clone()).collect(),
            es.iter().map(|&e| (vmap[&self.ends[e].0], vmap[&self.ends[e].1])).collect(),
        )
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return false;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &e in &self.incident[v] {
                let w = self.other_end(e, v);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n()
    }

    /// Connected, at least two vertices, and no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        if self.n() < 2 || !self.is_connected() {
            return false;
        }
        // iterative lowpoint DFS
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut time = 0;
        let mut root_children = 0;
        // (vertex, edge used to enter, next incident position)
        let mut stack: Vec<(VertexIx, Option<EdgeIx>, usize)> = vec![(0, None, 0)];
        disc[0] = 0;
        low[0] = 0;
        time += 1;
        while let Some(top) = stack.len().checked_sub(1) {
            let (v, via, pos) = stack[top];
            if pos < self.incident[v].len() {
                let e = self.incident[v][pos];
                stack[top].2 += 1;
                if Some(e) == via {
                    continue;
                }
                let w = self.other_end(e, v);
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == 0 {
                        root_children += 1;
                    }
                    stack.push((w, Some(e), 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if p != 0 && low[v] >= disc[p] {
                        return false;
                    }
                }
            }
        }
        root_children <= 1
    }

    /// A proper two-coloring, or `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut color: Vec<Option<bool>> = vec![None; self.n()];
        for s in 0..self.n() {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let c = color[v].unwrap();
                for &e in &self.incident[v] {
                    let w = self.other_end(e, v);
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(cw) if cw == c => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(Bipartition { side: color.into_iter().map(|c| c.unwrap()).collect() })
    }

    /// Number of faces of any planar embedding of a connected graph.
    pub fn face_count(&self) -> i64 {
        self.m() as i64 - self.n() as i64 + 2
    }

    /// The only face size `k` compatible with Euler's formula, if integral.
    pub fn euler_uniform_k(&self) -> Option<u32> {
        let f = self.face_count();
        let twice_m = 2 * self.m() as i64;
        if f <= 0 || twice_m % f != 0 {
            return None;
        }
        let k = twice_m / f;
        (k > 0).then_some(k as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn k4() -> Multigraph {
        Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    #[test]
    fn build_k4() {
        let g = k4();
        assert_eq!((g.n(), g.m()), (4, 6));
    }

    #[test]
    fn parallel_pair_and_errors() {
        let g = Multigraph::new(&["u", "v"], &[("e1", "u", "v"), ("e2", "u", "v")]).unwrap();
        assert_eq!(g.m(), 2);
        assert!(g.is_biconnected());
        assert_eq!(
            Multigraph::new(&["u"], &[("e", "u", "u")]),
            Err(Error::LoopEdge("e".into()))
        );
        assert_eq!(
            Multigraph::new(&["u", "v"], &[("e", "u", "w")]),
            Err(Error::UnknownVertex("w".into()))
        );
        assert_eq!(
            Multigraph::new(&["u", "v"], &[("e", "u", "v"), ("e", "v", "u")]),
            Err(Error::DuplicateId("e".into()))
        );
    }

    #[test]
    fn ids_sorted() {
        let g = Multigraph::new(&["b", "a"], &[("y", "a", "b"), ("x", "b", "a")]).unwrap();
        assert_eq!(g.vertex_id(0), "a");
        assert_eq!(g.edge_id(0), "x");
        assert_eq!(g.ends(0), (1, 0));
        assert_eq!(g.edge_index("y"), Some(1));
    }

    #[test]
    fn biconnectivity() {
        assert!(k4().is_biconnected());
        assert!(!Multigraph::from_edges(3, &[(0, 1), (1, 2)]).is_biconnected());
        let bowtie =
            Multigraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
        assert!(!bowtie.is_biconnected());
    }

    #[test]
    fn bipartitions() {
        let c4 = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let b = c4.bipartition().unwrap();
        assert_eq!(b.side.iter().filter(|&&s| s).count(), 2);
        assert!(k4().bipartition().is_none());
        let pair = Multigraph::from_edges(2, &[(0, 1), (0, 1)]);
        assert!(!pair.bipartition().unwrap().same_side(0, 1));
    }

    #[test]
    fn euler_k() {
        assert_eq!(k4().euler_uniform_k(), Some(3));
        let chord = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        assert_eq!(chord.euler_uniform_k(), None);
    }
}
