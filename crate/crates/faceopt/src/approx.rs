//! Approximating the smallest possible largest face within a factor of 6.
//!
//! Every Q-, P- and R-node gets an embedding of its pertinent graph whose
//! boundary paths are as short as possible (`neat` embeddings). P-nodes put
//! the two children with the shortest boundary outside. R-nodes orient their
//! children from a linear program that balances the inner faces. S-nodes
//! are laid out by whichever node owns them.

use num_traits::Zero;

use crate::embedding::{faces, RotationSystem};
use crate::error::Result;
use crate::graph::Multigraph;
use crate::kernels::lp::{q, Q};
use crate::kernels::{solve_lp, Cmp, LpInstance};
use crate::layout::{p_layout, EmbeddingType, Placed};
use crate::spqr::{assemble, build_spqr, NodeIx, NodeKind, NodePlan, Plan, SpqrTree};

/// One orientable child edge of an expanded R-skeleton.
#[derive(Clone, Debug)]
pub struct LpEdge {
    /// The Q-, P- or R-node behind the edge.
    pub node: NodeIx,
    /// Skeleton edge of the R-node it lies on.
    pub via: usize,
    /// The two skeleton faces, smaller id first.
    pub faces: (usize, usize),
    pub a: usize,
    pub b: usize,
    /// Outer face that must receive the short side.
    pub pinned: Option<usize>,
    /// LP columns of `x_{e,faces.0}` and `x_{e,faces.1}`.
    pub vars: (usize, usize),
}

/// The balancing LP of one R-node. Column 0 is `M`.
#[derive(Clone, Debug)]
pub struct RNodeLp {
    pub instance: LpInstance,
    pub edges: Vec<LpEdge>,
    /// Skeleton faces not incident to the parent edge.
    pub inner_faces: Vec<usize>,
}

impl RNodeLp {
    fn build(t: &SpqrTree, i: NodeIx, types: &[Option<EmbeddingType>], rotation: &[Vec<usize>]) -> Self {
        let sf = t.skeleton_faces(i, rotation);
        let pe = t.parent_edge(i).unwrap();
        let (o1, o2) = sf.sides(pe);
        let mut edges = Vec::new();
        let mut vars = 1;
        for ex in t.expanded_skeleton(i).edges {
            if ex.via == pe {
                continue;
            }
            let (f, g) = sf.sides(ex.via);
            let ty = types[ex.node].expect("child computed");
            let pinned = [f, g].into_iter().find(|&h| h == o1 || h == o2);
            edges.push(LpEdge {
                node: ex.node,
                via: ex.via,
                faces: (f.min(g), f.max(g)),
                a: ty.a,
                b: ty.b,
                pinned,
                vars: (vars, vars + 1),
            });
            vars += 2;
        }
        let mut lp = LpInstance::new(vars);
        lp.objective[0] = q(1);
        for e in &edges {
            let (a, b) = (q(e.a as i64), q(e.b as i64));
            match e.pinned {
                Some(out) => {
                    let (short, long) = if out == e.faces.0 { (e.vars.0, e.vars.1) } else { (e.vars.1, e.vars.0) };
                    lp.bound(short, a.clone(), Some(a.clone()));
                    lp.bound(long, b.clone(), Some(b.clone()));
                }
                None => {
                    lp.bound(e.vars.0, a.clone(), Some(b.clone()));
                    lp.bound(e.vars.1, a.clone(), Some(b.clone()));
                }
            }
            lp.add_row(vec![(e.vars.0, q(1)), (e.vars.1, q(1))], Cmp::Eq, a + b);
        }
        let inner_faces: Vec<usize> = (0..sf.faces.len()).filter(|&f| f != o1 && f != o2).collect();
        for &f in &inner_faces {
            let mut row = vec![(0, q(-1))];
            for e in &edges {
                if e.faces.0 == f {
                    row.push((e.vars.0, q(1)));
                } else if e.faces.1 == f {
                    row.push((e.vars.1, q(1)));
                }
            }
            lp.add_row(row, Cmp::Le, Q::zero());
        }
        RNodeLp { instance: lp, edges, inner_faces }
    }

    /// Largest inner face when edge `n` puts its short side on `faces.0`
    /// exactly when `short_first[n]` (pinned edges ignore the flag).
    pub fn orientation_objective(&self, short_first: &[bool]) -> usize {
        self.face_sizes(short_first).into_iter().map(|(_, s)| s).max().unwrap_or(0)
    }

    /// Inner face sizes for an orientation.
    pub fn face_sizes(&self, short_first: &[bool]) -> Vec<(usize, usize)> {
        self.inner_faces
            .iter()
            .map(|&f| {
                let size = self
                    .edges
                    .iter()
                    .zip(short_first)
                    .map(|(e, &sf)| {
                        let first = match e.pinned {
                            Some(out) => out == e.faces.0,
                            None => sf,
                        };
                        let on_first = if first { e.a } else { e.b };
                        let on_second = if first { e.b } else { e.a };
                        if e.faces.0 == f {
                            on_first
                        } else if e.faces.1 == f {
                            on_second
                        } else {
                            0
                        }
                    })
                    .sum();
                (f, size)
            })
            .collect()
    }

    /// Indices of edges whose orientation is free.
    pub fn free_edges(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&n| self.edges[n].pinned.is_none()).collect()
    }
}

/// What happened at one R-node.
#[derive(Clone, Debug)]
pub struct RNodeReport {
    pub node: NodeIx,
    pub lp: RNodeLp,
    /// LP optimum `M`.
    pub optimum: Q,
    /// Chosen orientation (see [`RNodeLp::orientation_objective`]).
    pub short_first: Vec<bool>,
    /// Inner face sizes after rounding.
    pub shallow: Vec<(usize, usize)>,
}

/// Neat embeddings of every node of a tree.
#[derive(Clone, Debug)]
pub struct NeatTable {
    pub tree: SpqrTree,
    /// Boundary type per Q-, P- and R-node (S-nodes and the root are `None`).
    pub types: Vec<Option<EmbeddingType>>,
    pub plan: Plan,
    pub reports: Vec<RNodeReport>,
}

/// A child edge of a P- or R-node seen through an S-child: the path edges of
/// the S-node, or the edge itself.
fn chain(t: &SpqrTree, child: NodeIx) -> Vec<(usize, NodeIx)> {
    if t.kind(child) == NodeKind::S {
        t.series_path(child).into_iter().map(|y| (y, t.node(child).neighbor(y).unwrap())).collect()
    } else {
        vec![(usize::MAX, child)]
    }
}

impl NeatTable {
    pub fn new(t: SpqrTree) -> Self {
        let k = t.nodes().len();
        let mut table = NeatTable { types: vec![None; k], plan: Plan::empty(&t), reports: Vec::new(), tree: t };
        for i in table.tree.postorder() {
            match table.tree.kind(i) {
                _ if i == table.tree.root() => table.neat_root(),
                NodeKind::Q => table.types[i] = Some(EmbeddingType::new(1, 1)),
                NodeKind::S => {}
                NodeKind::P => table.neat_p_node(i),
                NodeKind::R => table.neat_r_node(i),
            }
        }
        table
    }

    /// Shortest boundary a child of a P-node can show: its own short side, or
    /// the sum of short sides along an S-chain.
    pub fn boundary_min_length(&self, node: NodeIx) -> usize {
        self.chain_sides(node).0
    }

    /// (short, long) sums along the chain of `node`.
    fn chain_sides(&self, node: NodeIx) -> (usize, usize) {
        chain(&self.tree, node).iter().fold((0, 0), |(s, l), &(_, c)| {
            let ty = self.types[c].expect("child computed");
            (s + ty.a, l + ty.b)
        })
    }

    /// Plans an S-node so that its face merging with the parent's
    /// `child_first` face carries the short sides of the children listed in
    /// `short_here` and the long sides of the rest.
    fn plan_series(&mut self, s: NodeIx, short_here: &dyn Fn(usize) -> bool) {
        let t = &self.tree;
        let rot = t.embed_skeleton(s, &t.default_choice(s)).unwrap();
        let sf = t.skeleton_faces(s, &rot);
        let (f0, f1) = sf.sides(t.parent_edge(s).unwrap());
        let mut plan = NodePlan::new(rot, t.node(s).edges.len());
        plan.first_face = Some(f0);
        for y in t.series_path(s) {
            plan.child_first[y] = Some(if short_here(y) { f0 } else { f1 });
        }
        self.plan.nodes[s] = Some(plan);
    }

    fn neat_p_node(&mut self, i: NodeIx) {
        let t = &self.tree;
        let mut items: Vec<(usize, usize, usize, NodeIx)> = t
            .child_edges(i)
            .into_iter()
            .map(|(x, c)| {
                let (s, l) = self.chain_sides(c);
                (s, x, l, c)
            })
            .collect();
        // two shortest by (length, child id) go outside
        let mut by_len: Vec<usize> = (0..items.len()).collect();
        by_len.sort_by_key(|&n| (items[n].0, items[n].3));
        let seq: Vec<Placed> = if items.len() == 1 {
            vec![Placed { edge: items[0].1, left: items[0].0, right: items[0].2 }]
        } else {
            let (alpha, beta) = (by_len[0], by_len[1]);
            let (ia, ib) = (items[alpha], items[beta]);
            items.retain(|it| it.3 != ia.3 && it.3 != ib.3);
            items.sort_by_key(|it| it.3);
            let mut seq = vec![Placed { edge: ia.1, left: ia.0, right: ia.2 }];
            seq.extend(items.iter().map(|it| Placed { edge: it.1, left: it.0, right: it.2 }));
            seq.push(Placed { edge: ib.1, left: ib.2, right: ib.0 });
            seq
        };
        let lay = p_layout(t, i, &seq);
        let series: Vec<NodeIx> = t.children(i).into_iter().filter(|&c| t.kind(c) == NodeKind::S).collect();
        self.types[i] = Some(lay.ty);
        self.plan.nodes[i] = Some(lay.plan);
        for c in series {
            self.plan_series(c, &|_| true);
        }
    }

    fn neat_r_node(&mut self, i: NodeIx) {
        let t = &self.tree;
        let rot = t.embed_skeleton(i, &t.default_choice(i)).unwrap();
        let sf = t.skeleton_faces(i, &rot);
        let lp = RNodeLp::build(t, i, &self.types, &rot);
        let sol = solve_lp(&lp.instance).expect("R-node LP is feasible and bounded");
        let short_first: Vec<bool> = lp
            .edges
            .iter()
            .map(|e| match e.pinned {
                Some(out) => out == e.faces.0,
                None => sol.x[e.vars.0] <= sol.x[e.vars.1],
            })
            .collect();
        let shallow = lp.face_sizes(&short_first);
        for &(_, s) in &shallow {
            assert!(q(s as i64) <= q(2) * &sol.value, "rounded face exceeds twice the LP optimum");
        }

        let mut plan = NodePlan::new(rot, t.node(i).edges.len());
        let short_face = |n: usize| {
            let e = &lp.edges[n];
            if short_first[n] {
                e.faces.0
            } else {
                e.faces.1
            }
        };
        let mut series: Vec<(NodeIx, Vec<(usize, bool)>)> = Vec::new();
        for (x, c) in t.child_edges(i) {
            let mine: Vec<usize> = (0..lp.edges.len()).filter(|&n| lp.edges[n].via == x).collect();
            if t.kind(c) == NodeKind::S {
                let anchor = sf.sides(x).0;
                plan.child_first[x] = Some(anchor);
                let ys = t.series_path(c);
                debug_assert_eq!(ys.len(), mine.len());
                series.push((c, ys.into_iter().zip(mine.iter().map(|&n| short_face(n) == anchor)).collect()));
            } else {
                plan.child_first[x] = Some(short_face(mine[0]));
            }
        }
        let pe = t.parent_edge(i).unwrap();
        let (o1, o2) = sf.sides(pe);
        let side = |o: usize| -> usize { lp.edges.iter().filter(|e| e.pinned == Some(o)).map(|e| e.a).sum() };
        let (s1, s2) = (side(o1), side(o2));
        plan.first_face = Some(if s1 <= s2 { o1 } else { o2 });
        self.types[i] = Some(EmbeddingType::new(s1, s2));
        self.plan.nodes[i] = Some(plan);
        for (s, marks) in series {
            self.plan_series(s, &|y| marks.iter().any(|&(z, m)| z == y && m));
        }
        self.reports.push(RNodeReport { node: i, lp, optimum: sol.value, short_first, shallow });
    }

    fn neat_root(&mut self) {
        let top = self.tree.children(self.tree.root())[0];
        if self.tree.kind(top) == NodeKind::S {
            self.plan_series(top, &|_| true);
        }
    }

    pub fn rotation(&self) -> RotationSystem {
        assemble(&self.tree, &self.plan)
    }
}

/// A neat-embedding table for `g` rooted at edge 0.
pub fn neat_embeddings(g: &Multigraph) -> Result<NeatTable> {
    Ok(NeatTable::new(build_spqr(g, 0)?))
}

/// An embedding whose largest face is at most six times the optimum, and
/// that largest face.
pub fn approx_min_max_face(g: &Multigraph) -> Result<(RotationSystem, usize)> {
    let table = neat_embeddings(g)?;
    let rot = table.rotation();
    let worst = faces(g, &rot)?.max_face();
    Ok((rot, worst))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn approx(g: &Multigraph) -> usize {
        approx_min_max_face(g).unwrap().1
    }

    #[test]
    fn small_values() {
        assert_eq!(approx(&samples::k4()), 3);
        assert_eq!(approx(&samples::cube()), 4);
        assert_eq!(approx(&samples::cycle(6)), 6);
        assert_eq!(approx(&samples::bundle(2)), 2);
    }

    fn p_node(g: &Multigraph) -> (NeatTable, NodeIx) {
        let table = neat_embeddings(g).unwrap();
        let p = (0..table.tree.nodes().len()).find(|&i| table.tree.kind(i) == NodeKind::P).unwrap();
        (table, p)
    }

    #[test]
    fn p_node_types() {
        // rooted at the first single edge, so the P-node sees the others
        let (table, p) = p_node(&samples::paths(&[1, 1, 3]));
        assert_eq!(table.types[p], Some(EmbeddingType::new(1, 3)));
        let (table, p) = p_node(&samples::paths(&[1, 1, 1, 3]));
        assert_eq!(table.types[p], Some(EmbeddingType::new(1, 1)));
        let (table, p) = p_node(&samples::paths(&[1, 1, 2]));
        assert_eq!(table.types[p], Some(EmbeddingType::new(1, 2)));
        let s = table.tree.children(p).into_iter().find(|&c| table.tree.kind(c) == NodeKind::S).unwrap();
        assert_eq!(table.boundary_min_length(s), 2);
        let (table, p) = p_node(&samples::paths(&[1, 2, 2, 2]));
        assert_eq!(table.types[p], Some(EmbeddingType::new(2, 2)));
    }

    #[test]
    fn lp_bounds_hold() {
        for g in [samples::subdivided(&samples::k4()), samples::wheel(5), samples::subdivided(&samples::cube())] {
            let table = neat_embeddings(&g).unwrap();
            assert!(!table.reports.is_empty());
            for r in &table.reports {
                for &(_, s) in &r.shallow {
                    assert!(q(s as i64) <= q(2) * &r.optimum);
                }
            }
            faces(&g, &table.rotation()).unwrap();
        }
    }
}
