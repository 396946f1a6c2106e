//! Exhaustive enumeration of combinatorial embeddings through SPQR choices:
//! a cyclic order per P-node (relative to its parent edge) and a flip per
//! R-node. The global mirror image is skipped by restricting the first node
//! that has a choice.

use crate::embedding::{faces, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::spqr::{assemble, build_spqr, NodeIx, NodeKind, NodePlan, Plan, SkeletonChoice, SpqrTree};

pub const DEFAULT_LIMIT: u64 = 1_000_000;

/// One concrete choice per P- and R-node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingChoice {
    pub choices: Vec<(NodeIx, SkeletonChoice)>,
}

#[derive(Clone, Copy, Debug)]
enum Slot {
    P { node: NodeIx, parent_edge: usize, others: usize },
    R { node: NodeIx },
}

impl Slot {
    fn options(&self) -> u128 {
        match *self {
            Slot::P { others, .. } => (1..=others as u128).product(),
            Slot::R { .. } => 2,
        }
    }
}

/// Decodes `index` (in `0..k!`) into a permutation of `0..k`.
fn nth_permutation(k: usize, mut index: u128) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..k).collect();
    let mut out = Vec::with_capacity(k);
    for i in (0..k).rev() {
        let f: u128 = (1..=i as u128).product();
        let pick = (index / f) as usize;
        index %= f;
        out.push(pool.remove(pick));
    }
    out
}

/// Iterator over all embeddings of a graph, up to global reflection.
pub struct Embeddings {
    tree: SpqrTree,
    slots: Vec<Slot>,
    /// Index of the slot whose choices are halved to skip mirror images.
    halved: Option<usize>,
    digits: Vec<u128>,
    finished: bool,
}

/// Number of embeddings up to reflection.
pub fn count_embeddings(t: &SpqrTree) -> u128 {
    let slots = slots_of(t);
    let total: u128 = slots.iter().map(Slot::options).product();
    if slots.iter().any(|s| s.options() > 1) {
        total / 2
    } else {
        total
    }
}

fn slots_of(t: &SpqrTree) -> Vec<Slot> {
    let mut slots = Vec::new();
    for (i, node) in t.nodes().iter().enumerate() {
        match node.kind {
            NodeKind::P => {
                let pe = t.parent_edge(i).unwrap();
                slots.push(Slot::P { node: i, parent_edge: pe, others: node.edges.len() - 1 });
            }
            NodeKind::R => slots.push(Slot::R { node: i }),
            _ => {}
        }
    }
    slots
}

impl Embeddings {
    pub fn new(g: &Multigraph, limit: u64) -> Result<Self> {
        let tree = build_spqr(g, 0)?;
        Self::from_tree(tree, limit)
    }

    pub fn from_tree(tree: SpqrTree, limit: u64) -> Result<Self> {
        if count_embeddings(&tree) > limit as u128 {
            return Err(Error::SizeGuardExceeded { limit });
        }
        let slots = slots_of(&tree);
        let halved = slots.iter().position(|s| s.options() > 1);
        let digits = vec![0; slots.len()];
        Ok(Embeddings { tree, slots, halved, digits, finished: false })
    }

    pub fn tree(&self) -> &SpqrTree {
        &self.tree
    }

    fn choice_at(&self, slot: usize) -> SkeletonChoice {
        match self.slots[slot] {
            Slot::P { parent_edge, others, .. } => {
                let rest: Vec<usize> = (0..others + 1).filter(|&x| x != parent_edge).collect();
                let perm = nth_permutation(others, self.digits[slot]);
                SkeletonChoice::Order(std::iter::once(parent_edge).chain(perm.into_iter().map(|p| rest[p])).collect())
            }
            Slot::R { .. } => SkeletonChoice::Flip(self.digits[slot] == 1),
        }
    }

    /// The choice vector the iterator will produce next.
    fn current(&self) -> EmbeddingChoice {
        let choices = (0..self.slots.len())
            .map(|s| {
                let node = match self.slots[s] {
                    Slot::P { node, .. } | Slot::R { node } => node,
                };
                (node, self.choice_at(s))
            })
            .collect();
        EmbeddingChoice { choices }
    }

    fn acceptable(&self) -> bool {
        let Some(h) = self.halved else { return true };
        match self.slots[h] {
            Slot::R { .. } => self.digits[h] == 0,
            Slot::P { others, .. } => {
                let perm = nth_permutation(others, self.digits[h]);
                perm[0] < perm[others - 1]
            }
        }
    }

    fn advance(&mut self) {
        for s in 0..self.slots.len() {
            self.digits[s] += 1;
            if self.digits[s] < self.slots[s].options() {
                return;
            }
            self.digits[s] = 0;
        }
        self.finished = true;
    }

    /// Next embedding together with the choices that produced it.
    pub fn next_with_choice(&mut self) -> Option<(EmbeddingChoice, RotationSystem)> {
        while !self.finished && !self.acceptable() {
            self.advance();
        }
        if self.finished {
            return None;
        }
        let choice = self.current();
        let rot = realize(&self.tree, &choice);
        self.advance();
        Some((choice, rot))
    }
}

impl Iterator for Embeddings {
    type Item = RotationSystem;

    fn next(&mut self) -> Option<RotationSystem> {
        self.next_with_choice().map(|(_, r)| r)
    }
}

/// Rotation system of the embedding given by `choice` (unlisted nodes use defaults).
pub fn realize(t: &SpqrTree, choice: &EmbeddingChoice) -> RotationSystem {
    let mut plan = Plan::empty(t);
    for (node, c) in &choice.choices {
        let rot = t.embed_skeleton(*node, c).expect("choice matches node");
        plan.nodes[*node] = Some(NodePlan::new(rot, t.node(*node).edges.len()));
    }
    assemble(t, &plan)
}

/// Stream of every embedding of `g` up to reflection.
pub fn enumerate_embeddings(g: &Multigraph, limit: u64) -> Result<Embeddings> {
    Embeddings::new(g, limit)
}

/// Smallest achievable largest face, with a witness.
pub fn exact_min_max_face(g: &Multigraph, limit: u64) -> Result<(usize, RotationSystem)> {
    let f = g.face_count() as usize;
    let floor = (2 * g.m()).div_ceil(f);
    let mut best: Option<(usize, RotationSystem)> = None;
    for rot in enumerate_embeddings(g, limit)? {
        let k = faces(g, &rot)?.max_face();
        if best.as_ref().is_none_or(|(b, _)| k < *b) {
            best = Some((k, rot));
            if k <= floor {
                break;
            }
        }
    }
    Ok(best.expect("at least one embedding"))
}

/// An embedding whose faces all have size `k`, if any.
pub fn exact_uniform(g: &Multigraph, k: usize, limit: u64) -> Result<Option<RotationSystem>> {
    for rot in enumerate_embeddings(g, limit)? {
        let report = faces(g, &rot)?;
        if report.faces.iter().all(|f| f.size() == k) {
            return Ok(Some(rot));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn count(g: &Multigraph) -> usize {
        enumerate_embeddings(g, DEFAULT_LIMIT).unwrap().count()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(&samples::cycle(4)), 1);
        assert_eq!(count(&samples::k4()), 1);
        assert_eq!(count(&samples::bundle(4)), 3);
        assert_eq!(count(&samples::bundle(2)), 1);
        assert_eq!(count(&samples::bundle(5)), 12);
        // P-node with three S-children and an R child elsewhere
        assert_eq!(count(&samples::paths(&[2, 2, 2])), 1);
        assert_eq!(count(&samples::paths(&[1, 2, 2, 3])), 3);
    }

    #[test]
    fn distinct_and_planar() {
        let g = samples::paths(&[1, 2, 2, 3, 1]);
        let all: Vec<RotationSystem> = enumerate_embeddings(&g, DEFAULT_LIMIT).unwrap().collect();
        assert_eq!(all.len() as u128, count_embeddings(&build_spqr(&g, 0).unwrap()));
        for (i, a) in all.iter().enumerate() {
            faces(&g, a).unwrap();
            for b in &all[i + 1..] {
                assert_ne!(a, b);
                assert_ne!(&a.mirrored(), b);
            }
        }
    }

    #[test]
    fn guard() {
        let g = samples::bundle(9);
        assert_eq!(enumerate_embeddings(&g, 100).err(), Some(Error::SizeGuardExceeded { limit: 100 }));
    }

    #[test]
    fn optima() {
        assert_eq!(exact_min_max_face(&samples::k4(), DEFAULT_LIMIT).unwrap().0, 3);
        let g = Multigraph::from_edges(4, &[(0, 1), (0, 2), (2, 1), (0, 3), (3, 1)]);
        assert_eq!(exact_min_max_face(&g, DEFAULT_LIMIT).unwrap().0, 4);
        assert!(exact_uniform(&samples::cycle(6), 6, DEFAULT_LIMIT).unwrap().is_some());
        assert!(exact_uniform(&samples::k4(), 3, DEFAULT_LIMIT).unwrap().is_some());
        assert!(exact_uniform(&samples::cube(), 3, DEFAULT_LIMIT).unwrap().is_none());
    }
}
