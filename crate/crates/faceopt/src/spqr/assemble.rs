//! Materializes a global rotation system from per-node skeleton embeddings.
//!
//! Each node carries a base rotation of its skeleton. Orientations are fixed
//! top-down: a parent may ask that a child's designated `first_face` merges
//! with one of the parent's faces at the shared virtual edge, and the child
//! (with its whole subtree) is mirrored when needed.

use super::{Link, NodeIx, NodeKind, SkelFaces, SpqrTree};
use crate::embedding::{dart_from, reverse, RotationSystem};
use crate::graph::{EdgeIx, VertexIx};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodePlan {
    /// Base rotation of the skeleton (local vertex indices).
    pub rotation: Vec<Vec<usize>>,
    /// Face of the base embedding that carries this node's first side.
    pub first_face: Option<usize>,
    /// Per skeleton edge: the face receiving that child's first side.
    pub child_first: Vec<Option<usize>>,
}

impl NodePlan {
    pub fn new(rotation: Vec<Vec<usize>>, edges: usize) -> Self {
        NodePlan { rotation, first_face: None, child_first: vec![None; edges] }
    }
}

/// Per-node plans; `None` entries use the node's default embedding.
#[derive(Clone, Debug, Default)]
pub struct Plan {
    pub nodes: Vec<Option<NodePlan>>,
}

impl Plan {
    pub fn empty(t: &SpqrTree) -> Self {
        Plan { nodes: vec![None; t.nodes().len()] }
    }
}

fn rotation_of(t: &SpqrTree, plan: &Plan, i: NodeIx) -> Vec<Vec<usize>> {
    match &plan.nodes[i] {
        Some(p) => p.rotation.clone(),
        None => t.embed_skeleton(i, &t.default_choice(i)).expect("default embedding"),
    }
}

/// Builds the rotation system of the whole graph described by `plan`.
pub fn assemble(t: &SpqrTree, plan: &Plan) -> RotationSystem {
    let k = t.nodes().len();
    let mut rot: Vec<Vec<Vec<usize>>> = vec![Vec::new(); k];
    let mut faces: Vec<Option<SkelFaces>> = vec![None; k];
    let mut mirrored = vec![false; k];
    for &i in t.preorder() {
        rot[i] = rotation_of(t, plan, i);
        if t.kind(i) == NodeKind::Q {
            continue;
        }
        let sf = t.skeleton_faces(i, &rot[i]);
        let parent = t.parent(i).unwrap();
        let x = t.parent_edge(i).unwrap();
        let Link::Virtual { twin: px, .. } = t.node(i).edges[x].link else { unreachable!() };
        let wanted = plan.nodes[parent].as_ref().and_then(|p| p.child_first[px]);
        let first = plan.nodes[i].as_ref().and_then(|p| p.first_face);
        if let (Some(pf), Some(first), false) = (wanted, first, t.kind(parent) == NodeKind::Q) {
            let pfaces = faces[parent].as_ref().unwrap();
            let pnode = t.node(parent);
            let base = if pfaces.face_of[2 * px] == pf {
                2 * px
            } else {
                assert_eq!(pfaces.face_of[2 * px + 1], pf, "face not incident to child edge");
                2 * px + 1
            };
            let abs = if mirrored[parent] { reverse(base) } else { base };
            // the child face merging with it runs the other way along the twin
            let from = pnode.edges[px].ends;
            let start = if abs % 2 == 0 { from.1 } else { from.0 };
            let ends: Vec<(VertexIx, VertexIx)> = t.node(i).edges.iter().map(|e| e.ends).collect();
            let d = dart_from(&ends, x, start);
            mirrored[i] = if sf.face_of[d] == first {
                false
            } else {
                assert_eq!(sf.face_of[reverse(d)], first, "first face not at the parent edge");
                true
            };
        }
        faces[i] = Some(sf);
        if mirrored[i] {
            for l in rot[i].iter_mut() {
                l.reverse();
            }
        }
    }

    let g = t.graph();
    let mut top: Vec<Option<NodeIx>> = vec![None; g.n()];
    for &i in t.preorder() {
        for &v in &t.node(i).vertices {
            if top[v].is_none() {
                top[v] = Some(i);
            }
        }
    }
    let mut order = vec![Vec::new(); g.n()];
    for v in 0..g.n() {
        let i = top[v].expect("vertex in some skeleton");
        let lv = t.node(i).local(v).unwrap();
        let mut out = Vec::new();
        for &x in &rot[i][lv] {
            expand_edge(t, &rot, i, x, v, &mut out);
        }
        order[v] = out;
    }
    RotationSystem::from_raw(order)
}

fn expand_edge(t: &SpqrTree, rot: &[Vec<Vec<usize>>], i: NodeIx, x: usize, v: VertexIx, out: &mut Vec<EdgeIx>) {
    match t.node(i).edges[x].link {
        Link::Real(e) => out.push(e),
        Link::Virtual { node, twin } => {
            let lv = t.node(node).local(v).unwrap();
            let cyc = &rot[node][lv];
            let p = cyc.iter().position(|&y| y == twin).unwrap();
            for s in 1..cyc.len() {
                expand_edge(t, rot, node, cyc[(p + s) % cyc.len()], v, out);
            }
        }
    }
}
