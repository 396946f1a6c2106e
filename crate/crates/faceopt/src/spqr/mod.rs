//! SPQR-trees in the Q-node convention: every real edge is a Q-node leaf and
//! S-, P- and R-skeletons consist of virtual edges only. The tree is rooted at
//! the Q-node of a chosen edge.

mod assemble;
mod build;

use std::collections::HashMap;

pub use assemble::{assemble, NodePlan, Plan};

use crate::embedding::{trace_faces, Dart};
use crate::error::{Error, Result};
use crate::graph::{EdgeIx, Multigraph, VertexIx};
use crate::planar::planar_rotation;
use build::{triconnected_components, CompKind, Tag};

pub type NodeIx = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeKind {
    S,
    P,
    Q,
    R,
}

/// What a skeleton edge stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Link {
    /// The real edge of a Q-node.
    Real(EdgeIx),
    /// The neighbor node and the index of the twin edge in its skeleton.
    Virtual { node: NodeIx, twin: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkelEdge {
    /// Endpoints as graph vertices.
    pub ends: (VertexIx, VertexIx),
    pub link: Link,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpqrNode {
    pub kind: NodeKind,
    /// Skeleton vertices (graph vertex indices, ascending).
    pub vertices: Vec<VertexIx>,
    pub edges: Vec<SkelEdge>,
    /// Edge ends in local vertex indices (positions in `vertices`).
    pub local_ends: Vec<(usize, usize)>,
    /// Planar rotation of an R-skeleton in local indices.
    base_rotation: Option<Vec<Vec<usize>>>,
}

impl SpqrNode {
    pub fn local(&self, v: VertexIx) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn neighbor(&self, x: usize) -> Option<NodeIx> {
        match self.edges[x].link {
            Link::Virtual { node, .. } => Some(node),
            Link::Real(_) => None,
        }
    }

    /// Synthetic id of skeleton edge `x` of node `me`.
    pub fn edge_label(me: NodeIx, x: usize) -> String {
        format!("n{me}.{x}")
    }
}

/// Embedding parameters of a single skeleton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SkeletonChoice {
    /// S- and Q-skeletons have a unique embedding.
    Fixed,
    /// P-skeleton: cyclic order of all skeleton edges at the first vertex.
    Order(Vec<usize>),
    /// R-skeleton: base embedding or its mirror.
    Flip(bool),
}

/// Faces of an embedded skeleton, with darts over skeleton edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkelFaces {
    pub faces: Vec<Vec<Dart>>,
    pub face_of: Vec<usize>,
}

impl SkelFaces {
    /// The two faces incident to skeleton edge `x`, forward side first.
    pub fn sides(&self, x: usize) -> (usize, usize) {
        (self.face_of[2 * x], self.face_of[2 * x + 1])
    }
}

/// An S-child inlined as a path inside an expanded skeleton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpandedEdge {
    pub ends: (VertexIx, VertexIx),
    /// The Q-, P- or R-node the edge stands for (the parent for the parent edge).
    pub node: NodeIx,
    /// Skeleton edge of the expanded node that this edge lies on.
    pub via: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpandedSkeleton {
    pub vertices: Vec<VertexIx>,
    pub edges: Vec<ExpandedEdge>,
}

#[derive(Clone, Debug)]
pub struct SpqrTree {
    graph: Multigraph,
    nodes: Vec<SpqrNode>,
    root: NodeIx,
    parent_edge: Vec<Option<usize>>,
    preorder: Vec<NodeIx>,
}

/// Builds the SPQR-tree of a biconnected planar multigraph rooted at `root_edge`.
pub fn build_spqr(g: &Multigraph, root_edge: EdgeIx) -> Result<SpqrTree> {
    if g.m() < 2 {
        return Err(Error::TooSmall);
    }
    if root_edge >= g.m() {
        return Err(Error::InvalidParams(format!("root edge {root_edge} out of range")));
    }
    if !g.is_biconnected() {
        return Err(Error::NotBiconnected);
    }
    let comps = triconnected_components(g.edge_ends());
    let m = g.m();
    let mut nodes: Vec<SpqrNode> = (0..m)
        .map(|_| SpqrNode {
            kind: NodeKind::Q,
            vertices: Vec::new(),
            edges: Vec::new(),
            local_ends: Vec::new(),
            base_rotation: None,
        })
        .collect();
    // where each virtual id lives: (component, position)
    let mut owners: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
    for (ci, c) in comps.iter().enumerate() {
        for (pos, e) in c.edges.iter().enumerate() {
            if let Tag::Virt(x) = e.tag {
                owners.entry(x).or_default().push((ci, pos));
            }
        }
    }
    for (ci, c) in comps.iter().enumerate() {
        let me = m + ci;
        let mut edges = Vec::with_capacity(c.edges.len());
        for (pos, e) in c.edges.iter().enumerate() {
            let link = match e.tag {
                Tag::Real(r) => {
                    // Q-node skeleton: [real, virtual back to this node]
                    nodes[r].edges = vec![
                        SkelEdge { ends: g.ends(r), link: Link::Real(r) },
                        SkelEdge { ends: g.ends(r), link: Link::Virtual { node: me, twin: pos } },
                    ];
                    Link::Virtual { node: r, twin: 1 }
                }
                Tag::Virt(x) => {
                    let &(oc, opos) = owners[&x].iter().find(|&&(oc, _)| oc != ci).expect("virtual twin");
                    Link::Virtual { node: m + oc, twin: opos }
                }
            };
            edges.push(SkelEdge { ends: (e.u, e.v), link });
        }
        let kind = match c.kind {
            CompKind::Bond => NodeKind::P,
            CompKind::Polygon => NodeKind::S,
            CompKind::Rigid => NodeKind::R,
        };
        nodes.push(SpqrNode { kind, vertices: Vec::new(), edges, local_ends: Vec::new(), base_rotation: None });
    }
    for node in nodes.iter_mut() {
        let mut vs: Vec<VertexIx> = node.edges.iter().flat_map(|e| [e.ends.0, e.ends.1]).collect();
        vs.sort_unstable();
        vs.dedup();
        node.vertices = vs;
        node.local_ends = node
            .edges
            .iter()
            .map(|e| (node.local(e.ends.0).unwrap(), node.local(e.ends.1).unwrap()))
            .collect();
        if node.kind == NodeKind::R {
            let rot = planar_rotation(node.vertices.len(), &node.local_ends).ok_or(Error::NonPlanarSkeleton)?;
            node.base_rotation = Some(rot);
        }
    }
    let mut t = SpqrTree { graph: g.clone(), nodes, root: root_edge, parent_edge: Vec::new(), preorder: Vec::new() };
    t.orient();
    Ok(t)
}

impl SpqrTree {
    fn orient(&mut self) {
        let k = self.nodes.len();
        self.parent_edge = vec![None; k];
        self.preorder.clear();
        let mut seen = vec![false; k];
        seen[self.root] = true;
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            self.preorder.push(v);
            // push in reverse so children are visited in skeleton order
            for x in (0..self.nodes[v].edges.len()).rev() {
                if let Link::Virtual { node, twin } = self.nodes[v].edges[x].link {
                    if !seen[node] {
                        seen[node] = true;
                        self.parent_edge[node] = Some(twin);
                        stack.push(node);
                    }
                }
            }
        }
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn nodes(&self) -> &[SpqrNode] {
        &self.nodes
    }

    pub fn node(&self, i: NodeIx) -> &SpqrNode {
        &self.nodes[i]
    }

    pub fn kind(&self, i: NodeIx) -> NodeKind {
        self.nodes[i].kind
    }

    pub fn root(&self) -> NodeIx {
        self.root
    }

    /// The Q-node of real edge `e`.
    pub fn q_node(&self, e: EdgeIx) -> NodeIx {
        e
    }

    pub fn root_edge(&self) -> EdgeIx {
        self.root
    }

    /// Nodes with every parent before its children.
    pub fn preorder(&self) -> &[NodeIx] {
        &self.preorder
    }

    /// Nodes with every child before its parent.
    pub fn postorder(&self) -> Vec<NodeIx> {
        self.preorder.iter().rev().copied().collect()
    }

    /// Skeleton edge of `i` pointing to its parent (`None` for the root).
    pub fn parent_edge(&self, i: NodeIx) -> Option<usize> {
        self.parent_edge[i]
    }

    pub fn parent(&self, i: NodeIx) -> Option<NodeIx> {
        self.parent_edge[i].and_then(|x| self.nodes[i].neighbor(x))
    }

    /// Skeleton edges leading to children, with the child node.
    pub fn child_edges(&self, i: NodeIx) -> Vec<(usize, NodeIx)> {
        let pe = self.parent_edge[i];
        self.nodes[i]
            .edges
            .iter()
            .enumerate()
            .filter(|&(x, _)| Some(x) != pe)
            .filter_map(|(x, e)| match e.link {
                Link::Virtual { node, .. } => Some((x, node)),
                Link::Real(_) => None,
            })
            .collect()
    }

    pub fn children(&self, i: NodeIx) -> Vec<NodeIx> {
        self.child_edges(i).into_iter().map(|(_, c)| c).collect()
    }

    /// Poles of a node: the endpoints of its parent edge (the root edge for the root).
    pub fn poles(&self, i: NodeIx) -> (VertexIx, VertexIx) {
        match self.parent_edge[i] {
            Some(x) => self.nodes[i].edges[x].ends,
            None => self.nodes[i].edges[0].ends,
        }
    }

    /// Real edges of the pertinent graph of `i` (all edges for the root).
    pub fn pertinent_edges(&self, i: NodeIx) -> Vec<EdgeIx> {
        if i == self.root {
            return (0..self.graph.m()).collect();
        }
        let mut out = Vec::new();
        let mut stack = vec![i];
        while let Some(v) = stack.pop() {
            if self.nodes[v].kind == NodeKind::Q {
                out.push(v);
            } else {
                stack.extend(self.children(v));
            }
        }
        out.sort_unstable();
        out
    }

    /// The pertinent graph of `i` with its poles as vertex indices of that graph.
    pub fn pertinent_graph(&self, i: NodeIx) -> (Multigraph, (VertexIx, VertexIx)) {
        let sub = self.graph.edge_subgraph(&self.pertinent_edges(i));
        let (s, t) = self.poles(i);
        let ls = sub.vertex_index(self.graph.vertex_id(s)).unwrap();
        let lt = sub.vertex_index(self.graph.vertex_id(t)).unwrap();
        (sub, (ls, lt))
    }

    /// `(n_e, m_e)` of the expansion graph behind skeleton edge `x` of node `i`.
    /// For the parent edge this is the graph on the parent side.
    pub fn expansion_counts(&self, i: NodeIx, x: usize) -> (usize, usize) {
        let edges = match self.nodes[i].edges[x].link {
            Link::Real(e) => vec![e],
            Link::Virtual { node, .. } => {
                if Some(x) == self.parent_edge[i] {
                    let inside = self.pertinent_edges(i);
                    let mut mark = vec![false; self.graph.m()];
                    for e in inside {
                        mark[e] = true;
                    }
                    (0..self.graph.m()).filter(|&e| !mark[e]).collect()
                } else {
                    self.pertinent_edges(node)
                }
            }
        };
        let mut vs: Vec<VertexIx> = edges
            .iter()
            .flat_map(|&e| {
                let (a, b) = self.graph.ends(e);
                [a, b]
            })
            .collect();
        vs.sort_unstable();
        vs.dedup();
        (vs.len(), edges.len())
    }

    /// Skeleton edges of `i` in order along the S-node path from `from` to
    /// the other pole, excluding the parent edge.
    pub fn series_path(&self, i: NodeIx) -> Vec<usize> {
        let node = &self.nodes[i];
        debug_assert_eq!(node.kind, NodeKind::S);
        let pe = self.parent_edge[i].expect("S-node has a parent");
        let (s, t) = node.edges[pe].ends;
        let mut path = Vec::new();
        let mut at = s;
        let mut last = pe;
        while at != t || path.is_empty() {
            let x = (0..node.edges.len())
                .find(|&x| x != last && (node.edges[x].ends.0 == at || node.edges[x].ends.1 == at))
                .unwrap();
            path.push(x);
            let (a, b) = node.edges[x].ends;
            at = if a == at { b } else { a };
            last = x;
        }
        path
    }

    /// Skeleton of a P- or R-node with every S-child replaced by its path.
    pub fn expanded_skeleton(&self, i: NodeIx) -> ExpandedSkeleton {
        let node = &self.nodes[i];
        let pe = self.parent_edge[i];
        let mut edges = Vec::new();
        for (x, e) in node.edges.iter().enumerate() {
            let Link::Virtual { node: nb, .. } = e.link else {
                continue;
            };
            if Some(x) != pe && self.nodes[nb].kind == NodeKind::S {
                for y in self.series_path(nb) {
                    let se = &self.nodes[nb].edges[y];
                    edges.push(ExpandedEdge { ends: se.ends, node: self.nodes[nb].neighbor(y).unwrap(), via: x });
                }
            } else {
                edges.push(ExpandedEdge { ends: e.ends, node: nb, via: x });
            }
        }
        let mut vertices: Vec<VertexIx> = edges.iter().flat_map(|e| [e.ends.0, e.ends.1]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        ExpandedSkeleton { vertices, edges }
    }

    /// Rotation of the skeleton of `i` in local vertex indices.
    pub fn embed_skeleton(&self, i: NodeIx, choice: &SkeletonChoice) -> Result<Vec<Vec<usize>>> {
        let node = &self.nodes[i];
        let bad = |what: &str| Err(Error::InvalidParams(format!("{what} for {:?}-node {i}", node.kind)));
        match (node.kind, choice) {
            (NodeKind::S | NodeKind::Q, SkeletonChoice::Fixed) => {
                let mut rot = vec![Vec::new(); node.vertices.len()];
                for (x, &(a, b)) in node.local_ends.iter().enumerate() {
                    rot[a].push(x);
                    rot[b].push(x);
                }
                Ok(rot)
            }
            (NodeKind::P, SkeletonChoice::Order(order)) => {
                let mut sorted = order.clone();
                sorted.sort_unstable();
                if sorted != (0..node.edges.len()).collect::<Vec<_>>() {
                    return bad("order is not a permutation of the skeleton edges");
                }
                let back = std::iter::once(order[0]).chain(order[1..].iter().rev().copied()).collect();
                Ok(vec![order.clone(), back])
            }
            (NodeKind::R, SkeletonChoice::Flip(flip)) => {
                let base = node.base_rotation.clone().unwrap();
                Ok(if *flip { base.into_iter().map(|l| l.into_iter().rev().collect()).collect() } else { base })
            }
            _ => bad("choice does not match node kind"),
        }
    }

    /// A valid default embedding choice for node `i`.
    pub fn default_choice(&self, i: NodeIx) -> SkeletonChoice {
        match self.nodes[i].kind {
            NodeKind::P => SkeletonChoice::Order((0..self.nodes[i].edges.len()).collect()),
            NodeKind::R => SkeletonChoice::Flip(false),
            _ => SkeletonChoice::Fixed,
        }
    }

    /// Faces of a skeleton rotation.
    pub fn skeleton_faces(&self, i: NodeIx, rot: &[Vec<usize>]) -> SkelFaces {
        let faces = trace_faces(&self.nodes[i].local_ends, rot).expect("valid skeleton rotation");
        let mut face_of = vec![0; 2 * self.nodes[i].edges.len()];
        for (f, darts) in faces.iter().enumerate() {
            for &d in darts {
                face_of[d] = f;
            }
        }
        SkelFaces { faces, face_of }
    }

    /// The same tree rooted at the Q-node of `edge`.
    pub fn reroot(&self, edge: EdgeIx) -> SpqrTree {
        let mut t = self.clone();
        t.root = edge;
        t.orient();
        t
    }

    /// Glues all skeletons along their virtual edge pairs and returns the
    /// resulting real edges `(edge, end, end)`. Panics if a twin pair disagrees.
    pub fn reglue(&self) -> Vec<(EdgeIx, VertexIx, VertexIx)> {
        let mut out = Vec::new();
        for (i, node) in self.nodes.iter().enumerate() {
            for (x, e) in node.edges.iter().enumerate() {
                match e.link {
                    Link::Real(r) => out.push((r, e.ends.0, e.ends.1)),
                    Link::Virtual { node: nb, twin } => {
                        let back = &self.nodes[nb].edges[twin];
                        assert_eq!(back.link, Link::Virtual { node: i, twin: x }, "twin link mismatch");
                        let k = |p: (usize, usize)| (p.0.min(p.1), p.0.max(p.1));
                        assert_eq!(k(back.ends), k(e.ends), "twin ends mismatch");
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Checks the canonical-form invariants; returns a description of the first violation.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let tree_edges: usize = self.nodes.iter().map(|n| n.edges.iter().filter(|e| matches!(e.link, Link::Virtual { .. })).count()).sum();
        if tree_edges / 2 + 1 != self.nodes.len() || self.preorder.len() != self.nodes.len() {
            return Err("not a tree".into());
        }
        for (i, node) in self.nodes.iter().enumerate() {
            let neighbors: Vec<NodeKind> = node.edges.iter().filter_map(|e| match e.link {
                Link::Virtual { node, .. } => Some(self.nodes[node].kind),
                _ => None,
            }).collect();
            match node.kind {
                NodeKind::Q => {}
                NodeKind::S => {
                    let n = node.vertices.len();
                    let mut deg = vec![0; n];
                    for &(a, b) in &node.local_ends {
                        deg[a] += 1;
                        deg[b] += 1;
                    }
                    if node.edges.len() < 3 || node.edges.len() != n || deg.iter().any(|&d| d != 2) {
                        return Err(format!("S-node {i} is not a cycle"));
                    }
                    if neighbors.contains(&NodeKind::S) {
                        return Err(format!("S-node {i} has an S neighbor"));
                    }
                }
                NodeKind::P => {
                    let degenerate = self.graph.m() == 2;
                    if node.vertices.len() != 2 || (node.edges.len() < 3 && !degenerate) {
                        return Err(format!("P-node {i} is not a bond of >= 3 edges"));
                    }
                    if neighbors.contains(&NodeKind::P) {
                        return Err(format!("P-node {i} has a P neighbor"));
                    }
                }
                NodeKind::R => {
                    if !is_simple_triconnected(node.vertices.len(), &node.local_ends) {
                        return Err(format!("R-node {i} is not simple and 3-connected"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Exhaustive check: simple, at least 4 vertices, no separating pair.
pub(crate) fn is_simple_triconnected(n: usize, ends: &[(usize, usize)]) -> bool {
    if n < 4 {
        return false;
    }
    let mut pairs: Vec<(usize, usize)> = ends.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    pairs.sort_unstable();
    if pairs.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in ends {
        adj[a].push(b);
        adj[b].push(a);
    }
    let connected_without = |removed: &[usize]| {
        let start = (0..n).find(|v| !removed.contains(v)).unwrap();
        let mut seen = vec![false; n];
        for &r in removed {
            seen[r] = true;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = removed.len() + 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    };
    if !connected_without(&[]) {
        return false;
    }
    for a in 0..n {
        for b in a + 1..n {
            if !connected_without(&[a, b]) {
                return false;
            }
        }
    }
    true
}
