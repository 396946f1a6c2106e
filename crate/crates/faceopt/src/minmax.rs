//! Deciding whether a graph has an embedding with every face of size at most
//! `k`. Polynomial dynamic programs over the SPQR-tree for `k = 3, 4`; other
//! values fall back to the approximation and then to enumeration.

use crate::approx::approx_min_max_face;
use crate::embedding::{faces, RotationSystem};
use crate::enumerate::exact_min_max_face;
use crate::error::Result;
use crate::graph::Multigraph;
use crate::kernels::{max_matching, BipartiteInstance};
use crate::layout::{face_edges, p_layout, reversed, EmbeddingType, Placed};
use crate::spqr::{build_spqr, NodeIx, NodeKind, NodePlan, Plan, SkeletonChoice, SpqrTree, assemble};

/// Best label of a node for the `k = 4` program: the smallest reachable type
/// on the chain (1,1) < (1,2) < (2,2) < (2,3) < (3,3), and whether a
/// (1,3)-embedding exists where (2,2) does not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Label4 {
    pub chain: Option<EmbeddingType>,
    pub flag13: bool,
}

/// Per-node outcome: the type that will be realized and the plan for it.
#[derive(Clone, Debug)]
struct Done {
    ty: EmbeddingType,
    plan: Option<NodePlan>,
    label: Label4,
}

impl Done {
    fn chain(ty: EmbeddingType, plan: Option<NodePlan>) -> Self {
        Done { ty, plan, label: Label4 { chain: Some(ty), flag13: false } }
    }
}

const ONE: EmbeddingType = EmbeddingType { a: 1, b: 1 };
const TWO: EmbeddingType = EmbeddingType { a: 2, b: 2 };

fn default_plan(t: &SpqrTree, i: NodeIx) -> NodePlan {
    let rot = t.embed_skeleton(i, &t.default_choice(i)).unwrap();
    NodePlan::new(rot, t.node(i).edges.len())
}

fn run(t: &SpqrTree, k: usize, step: fn(&SpqrTree, NodeIx, &[Option<Done>]) -> Option<Done>) -> Vec<Option<Done>> {
    let mut done: Vec<Option<Done>> = vec![None; t.nodes().len()];
    for i in t.postorder() {
        if i == t.root() {
            continue;
        }
        if t.children(i).iter().any(|&c| done[c].is_none()) {
            continue;
        }
        done[i] = step(t, i, &done);
        if let Some(d) = &done[i] {
            debug_assert!(d.ty.b < k);
        }
    }
    done
}

fn finish(t: &SpqrTree, k: usize, done: Vec<Option<Done>>) -> Option<RotationSystem> {
    let top = t.children(t.root())[0];
    let d = done[top].as_ref()?;
    if d.ty.b + 1 > k {
        return None;
    }
    let mut plan = Plan::empty(t);
    for (i, d) in done.into_iter().enumerate() {
        if let Some(Done { plan: Some(p), .. }) = d {
            plan.nodes[i] = Some(p);
        }
    }
    let rot = assemble(t, &plan);
    let report = faces(t.graph(), &rot).expect("assembled embedding is planar");
    assert!(report.max_face() <= k, "witness has a face of size {} > {k}", report.max_face());
    Some(rot)
}

fn step3(t: &SpqrTree, i: NodeIx, done: &[Option<Done>]) -> Option<Done> {
    let ty = |c: NodeIx| done[c].as_ref().unwrap().ty;
    match t.kind(i) {
        NodeKind::Q => Some(Done::chain(ONE, None)),
        NodeKind::S | NodeKind::R => {
            if t.children(i).into_iter().any(|c| ty(c) != ONE) {
                return None;
            }
            let plan = default_plan(t, i);
            let sf = t.skeleton_faces(i, &plan.rotation);
            if sf.faces.iter().any(|f| f.len() != 3) {
                return None;
            }
            Some(Done::chain(TWO, Some(plan)))
        }
        NodeKind::P => {
            let (mut ones, mut twos) = (Vec::new(), Vec::new());
            for (x, c) in t.child_edges(i) {
                match ty(c) {
                    ONE => ones.push(Placed { edge: x, left: 1, right: 1 }),
                    TWO => twos.push(Placed { edge: x, left: 2, right: 2 }),
                    _ => return None,
                }
            }
            if ones.len() + 1 < twos.len() {
                return None;
            }
            let seq = alternate(&ones, &twos.into_iter().map(|p| vec![p]).collect::<Vec<_>>(), None);
            let lay = p_layout(t, i, &seq);
            debug_assert!(lay.inner.iter().all(|&s| s <= 3));
            Some(Done::chain(lay.ty, Some(lay.plan)))
        }
    }
}

/// Interleaves single-edge separators with blocks so that no two blocks are
/// adjacent. Separators take both ends when there are enough of them; the
/// `special` block (already oriented with its short side last) goes last.
/// Requires `ones + 1 >= blocks`.
fn alternate(ones: &[Placed], blocks: &[Vec<Placed>], special: Option<Vec<Placed>>) -> Vec<Placed> {
    let mut all: Vec<Vec<Placed>> = blocks.to_vec();
    all.extend(special);
    let b = all.len();
    assert!(ones.len() + 1 >= b);
    let mut sep = ones.iter().copied();
    let mut seq = Vec::new();
    if ones.len() >= b {
        seq.extend(sep.next());
    }
    for (n, block) in all.iter().enumerate() {
        if n > 0 {
            seq.extend(sep.next());
        }
        seq.extend_from_slice(block);
    }
    if ones.len() > b {
        seq.extend(sep);
    }
    seq
}

fn step4(t: &SpqrTree, i: NodeIx, done: &[Option<Done>]) -> Option<Done> {
    let ty = |c: NodeIx| done[c].as_ref().unwrap().ty;
    match t.kind(i) {
        NodeKind::Q => Some(Done::chain(ONE, None)),
        NodeKind::S | NodeKind::R => series_or_rigid4(t, i, &ty),
        NodeKind::P => parallel4(t, i, &ty),
    }
}

fn series_or_rigid4(t: &SpqrTree, i: NodeIx, ty: &dyn Fn(NodeIx) -> EmbeddingType) -> Option<Done> {
    let children = t.child_edges(i);
    if children.iter().any(|&(_, c)| ty(c).b >= 3) {
        return None;
    }
    let mut plan = default_plan(t, i);
    let sf = t.skeleton_faces(i, &plan.rotation);
    let fe = face_edges(&sf);
    let kind_of = |x: usize| children.iter().find(|&&(y, _)| y == x).map(|&(_, c)| ty(c));
    let base: Vec<usize> = fe.iter().map(|es| es.len() + es.iter().filter(|&&x| kind_of(x) == Some(TWO)).count()).collect();
    if base.iter().any(|&s| s > 4) {
        return None;
    }
    let halves: Vec<usize> = children.iter().filter(|&&(_, c)| ty(c) == EmbeddingType::new(1, 2)).map(|&(x, _)| x).collect();
    let pe = t.parent_edge(i).unwrap();
    let (f1, f2) = sf.sides(pe);
    let mut best: Option<(EmbeddingType, Vec<Option<usize>>, usize)> = None;
    for (c1, c2) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        let cap = |f: usize| -> bool {
            let limit = if f == f1 { c1 } else if f == f2 { c2 } else { 1 };
            limit == 1 && base[f] == 3
        };
        let mut inst = BipartiteInstance::new(halves.len(), fe.len());
        for (l, &x) in halves.iter().enumerate() {
            let (g1, g2) = sf.sides(x);
            for f in [g1, g2] {
                if cap(f) {
                    inst.add_edge(l, f);
                }
            }
        }
        let mate = max_matching(&inst);
        if mate.iter().any(Option::is_none) {
            continue;
        }
        let got = |f: usize| mate.iter().filter(|&&m| m == Some(f)).count();
        let (s1, s2) = (base[f1] - 1 + got(f1), base[f2] - 1 + got(f2));
        let found = EmbeddingType::new(s1, s2);
        if best.as_ref().is_none_or(|(b, _, _)| found.a + found.b < b.a + b.b) {
            best = Some((found, mate, if s1 <= s2 { f1 } else { f2 }));
        }
    }
    let (found, mate, first) = best?;
    for (l, &x) in halves.iter().enumerate() {
        let (g1, g2) = sf.sides(x);
        let long = mate[l].unwrap();
        plan.child_first[x] = Some(if long == g1 { g2 } else { g1 });
    }
    plan.first_face = Some(first);
    Some(Done::chain(found, Some(plan)))
}

fn parallel4(t: &SpqrTree, i: NodeIx, ty: &dyn Fn(NodeIx) -> EmbeddingType) -> Option<Done> {
    let (mut ones, mut twos, mut threes, mut bigs) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for (x, c) in t.child_edges(i) {
        let p = |l, r| Placed { edge: x, left: l, right: r };
        match (ty(c).a, ty(c).b) {
            (1, 1) => ones.push(p(1, 1)),
            (2, 2) => twos.push(p(2, 2)),
            (2, 3) => threes.push(p(3, 2)),
            (3, 3) => bigs.push(vec![p(3, 3)]),
            _ => return None,
        }
    }
    // (2,3)-children paired 2-side to 2-side; (2,2)-children ride along
    let leftover = if threes.len() % 2 == 1 { threes.pop() } else { None };
    let mut pairs: Vec<Vec<Placed>> = threes.chunks(2).map(|c| vec![c[0], reversed(&c[1..])[0]]).collect();
    let special: Option<Vec<Placed>> = match leftover {
        // T then the (2,2)s: sides 3 | 2
        Some(t3) => Some(std::iter::once(t3).chain(twos.iter().copied()).collect()),
        None if !pairs.is_empty() => {
            let p = &mut pairs[0];
            let tail = p.pop().unwrap();
            p.extend(twos.iter().copied());
            p.push(tail);
            None
        }
        None if !twos.is_empty() => Some(twos.clone()),
        None => None,
    };
    bigs.extend(pairs);
    let (a, b) = (ones.len(), bigs.len() + special.is_some() as usize);
    if a + 1 < b {
        return None;
    }
    // orient the special with its short side last
    let special = special.map(|s| if s[0].left < s[s.len() - 1].right { reversed(&s) } else { s });
    let seq = alternate(&ones, &bigs, special);
    let lay = p_layout(t, i, &seq);
    debug_assert!(lay.inner.iter().all(|&s| s <= 4), "{:?}", lay.inner);
    let label = if lay.ty == EmbeddingType::new(1, 3) {
        Label4 { chain: (b >= 2).then_some(EmbeddingType::new(3, 3)), flag13: true }
    } else {
        Label4 { chain: Some(lay.ty), flag13: false }
    };
    Some(Done { ty: lay.ty, plan: Some(lay.plan), label })
}

/// An embedding with every face of size at most 3, if one exists.
pub fn decide_minmax3(g: &Multigraph) -> Result<Option<RotationSystem>> {
    let t = build_spqr(g, 0)?;
    let done = run(&t, 3, step3);
    Ok(finish(&t, 3, done))
}

/// An embedding with every face of size at most 4, if one exists.
pub fn decide_minmax4(g: &Multigraph) -> Result<Option<RotationSystem>> {
    let t = build_spqr(g, 0)?;
    let done = run(&t, 4, step4);
    Ok(finish(&t, 4, done))
}

/// Labels of every non-root node for the `k = 4` program (`None` when infeasible).
pub fn labels4(t: &SpqrTree) -> Vec<Option<Label4>> {
    run(t, 4, step4).into_iter().map(|d| d.map(|d| d.label)).collect()
}

/// Realized types of every non-root node for the `k = 3` program.
pub fn types3(t: &SpqrTree) -> Vec<Option<EmbeddingType>> {
    run(t, 3, step3).into_iter().map(|d| d.map(|d| d.ty)).collect()
}

/// An embedding with every face of size at most `k`, if one exists.
/// `limit` bounds the enumeration used for `k >= 5`.
pub fn decide_minmax(g: &Multigraph, k: usize, limit: u64) -> Result<Option<RotationSystem>> {
    match k {
        0 | 1 => {
            build_spqr(g, 0)?;
            Ok(None)
        }
        2 => {
            let t = build_spqr(g, 0)?;
            if g.n() != 2 {
                return Ok(None);
            }
            let p = t.children(t.root())[0];
            let mut plan = Plan::empty(&t);
            let order = SkeletonChoice::Order((0..t.node(p).edges.len()).collect());
            plan.nodes[p] = Some(NodePlan::new(t.embed_skeleton(p, &order)?, t.node(p).edges.len()));
            Ok(Some(assemble(&t, &plan)))
        }
        3 => decide_minmax3(g),
        4 => decide_minmax4(g),
        _ => {
            let (rot, worst) = approx_min_max_face(g)?;
            // a face of a biconnected plane graph is a cycle, so never longer than n
            if worst <= k || g.n() <= k {
                return Ok(Some(rot));
            }
            let (best, rot) = exact_min_max_face(g, limit)?;
            Ok((best <= k).then_some(rot))
        }
    }
}
