//! Helpers that turn per-node decisions into assembly plans.
//!
//! Convention shared by every bottom-up pass: a node's `first_face` is the
//! parent-edge face on which its boundary path is shorter, and a parent sets
//! `child_first[x]` to the face that should receive the child's shorter side.

use crate::spqr::{NodeIx, NodePlan, SkeletonChoice, SkelFaces, SpqrTree};

/// Ordered boundary lengths `(a, b)` with `a <= b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EmbeddingType {
    pub a: usize,
    pub b: usize,
}

impl EmbeddingType {
    pub fn new(x: usize, y: usize) -> Self {
        EmbeddingType { a: x.min(y), b: x.max(y) }
    }

    /// Component-wise order: `self` is at most `other` on both sides.
    pub fn precedes(&self, other: &EmbeddingType) -> bool {
        self.a <= other.a && self.b <= other.b
    }
}

impl std::fmt::Display for EmbeddingType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Skeleton edges on each face (one entry per dart).
pub fn face_edges(sf: &SkelFaces) -> Vec<Vec<usize>> {
    sf.faces.iter().map(|f| f.iter().map(|&d| d / 2).collect()).collect()
}

/// A child placed in a P-node with the boundary lengths it shows to its
/// left and right neighbours.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Placed {
    pub edge: usize,
    pub left: usize,
    pub right: usize,
}

/// Result of laying out a P-node.
#[derive(Clone, Debug)]
pub struct PLayout {
    pub plan: NodePlan,
    pub ty: EmbeddingType,
    /// Sizes of the faces between consecutive children.
    pub inner: Vec<usize>,
}

/// Lays out the children of P-node `i` in the given order between the two
/// parent faces.
pub fn p_layout(t: &SpqrTree, i: NodeIx, seq: &[Placed]) -> PLayout {
    let pe = t.parent_edge(i).expect("P-node has a parent");
    let order: Vec<usize> = std::iter::once(pe).chain(seq.iter().map(|p| p.edge)).collect();
    let rotation = t.embed_skeleton(i, &SkeletonChoice::Order(order)).expect("valid P order");
    let sf = t.skeleton_faces(i, &rotation);
    let mut plan = NodePlan::new(rotation, t.node(i).edges.len());
    let k = seq.len();
    if k == 1 {
        let p = seq[0];
        let (l, r) = sf.sides(p.edge);
        plan.child_first[p.edge] = Some(if p.left <= p.right { l } else { r });
        plan.first_face = Some(if p.left <= p.right { l } else { r });
        return PLayout { plan, ty: EmbeddingType::new(p.left, p.right), inner: Vec::new() };
    }
    let fe = face_edges(&sf);
    let shared = |x: usize, y: usize| -> usize {
        (0..fe.len()).find(|&f| fe[f].contains(&x) && fe[f].contains(&y)).expect("consecutive edges share a face")
    };
    let mut inner = Vec::new();
    for (n, p) in seq.iter().enumerate() {
        let left = shared(if n == 0 { pe } else { seq[n - 1].edge }, p.edge);
        let right = shared(p.edge, if n + 1 == k { pe } else { seq[n + 1].edge });
        plan.child_first[p.edge] = Some(if p.left <= p.right { left } else { right });
        if n + 1 < k {
            inner.push(p.right + seq[n + 1].left);
        }
    }
    let first = shared(pe, seq[0].edge);
    let last = shared(seq[k - 1].edge, pe);
    let (l, r) = (seq[0].left, seq[k - 1].right);
    plan.first_face = Some(if l <= r { first } else { last });
    PLayout { plan, ty: EmbeddingType::new(l, r), inner }
}

/// Reverses a block of placed children (mirror of a run inside a P-node).
pub fn reversed(block: &[Placed]) -> Vec<Placed> {
    block.iter().rev().map(|p| Placed { edge: p.edge, left: p.right, right: p.left }).collect()
}
