//! Recognition of k-uniform embeddings (every face has exactly `k` edges).
//!
//! `k = 3` and `k = 4` are read off the SPQR-tree; `k = 6` is a bottom-up
//! pass where the boundary type of every pertinent graph is forced by its
//! size and the colors of its poles. Other values go to enumeration.

use crate::embedding::{faces, RotationSystem};
use crate::enumerate::exact_uniform;
use crate::error::Result;
use crate::graph::{Bipartition, Multigraph};
use crate::kernels::{perfect_b_matching, BipartiteInstance};
use crate::layout::{p_layout, EmbeddingType, Placed};
use crate::spqr::{assemble, build_spqr, NodeIx, NodeKind, NodePlan, Plan, SkeletonChoice, SpqrTree};

/// Outer face length of a graph whose inner faces all have size `k`.
pub fn outer_face_length(n: usize, m: usize, k: usize) -> i64 {
    k as i64 * (n as i64 - m as i64 - 1) + 2 * m as i64
}

/// Type an almost 6-uniform pertinent graph must have.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlmostUniformType {
    pub outer: usize,
    pub ty: EmbeddingType,
}

/// The only boundary type possible for outer length `outer` when the poles
/// lie in the same color class (`same_class`) or not.
pub fn forced_type6(outer: i64, same_class: bool) -> Option<AlmostUniformType> {
    let (a, b) = match (outer, same_class) {
        (2, false) => (1, 1),
        (4, true) => (2, 2),
        (4, false) => (1, 3),
        (6, true) => (2, 4),
        (6, false) => (3, 3),
        (8, true) => (4, 4),
        (8, false) => (3, 5),
        (10, false) => (5, 5),
        _ => return None,
    };
    Some(AlmostUniformType { outer: outer as usize, ty: EmbeddingType::new(a, b) })
}

fn is_q(t: &SpqrTree, i: NodeIx, x: usize) -> bool {
    t.node(i).neighbor(x).is_none_or(|nb| t.kind(nb) == NodeKind::Q)
}

fn skeleton_face_sizes(t: &SpqrTree, i: NodeIx) -> Vec<usize> {
    let rot = t.embed_skeleton(i, &t.default_choice(i)).unwrap();
    t.skeleton_faces(i, &rot).faces.iter().map(Vec::len).collect()
}

/// Whether the tree meets the structural conditions for a 3-uniform embedding.
pub fn uniform3_conditions(t: &SpqrTree) -> bool {
    (0..t.nodes().len()).all(|i| {
        let deg = t.node(i).edges.len();
        match t.kind(i) {
            NodeKind::Q => true,
            NodeKind::S => {
                deg == 3 && (0..deg).all(|x| is_q(t, i, x) || t.kind(t.node(i).neighbor(x).unwrap()) == NodeKind::P)
            }
            NodeKind::R => {
                (0..deg).all(|x| is_q(t, i, x) || t.kind(t.node(i).neighbor(x).unwrap()) == NodeKind::P)
                    && skeleton_face_sizes(t, i).iter().all(|&s| s == 3)
            }
            NodeKind::P => deg % 2 == 0 && (0..deg).filter(|&x| is_q(t, i, x)).count() * 2 == deg,
        }
    })
}

/// P-node order with Q and non-Q neighbours alternating, parent edge first.
fn alternating_order(t: &SpqrTree, i: NodeIx) -> Vec<usize> {
    let pe = t.parent_edge(i).unwrap();
    let deg = t.node(i).edges.len();
    let (mut q, mut other): (Vec<usize>, Vec<usize>) = (0..deg).filter(|&x| x != pe).partition(|&x| is_q(t, i, x));
    let mut order = vec![pe];
    let mut want_q = !is_q(t, i, pe);
    while !q.is_empty() || !other.is_empty() {
        let next = if want_q { q.pop() } else { other.pop() };
        order.push(next.expect("balanced neighbours"));
        want_q = !want_q;
    }
    order
}

fn alternating_witness(t: &SpqrTree, k: usize, alternate: impl Fn(NodeIx) -> bool) -> RotationSystem {
    let mut plan = Plan::empty(t);
    for i in 0..t.nodes().len() {
        if t.kind(i) == NodeKind::P && alternate(i) {
            let rot = t.embed_skeleton(i, &SkeletonChoice::Order(alternating_order(t, i))).unwrap();
            plan.nodes[i] = Some(NodePlan::new(rot, t.node(i).edges.len()));
        }
    }
    let rot = assemble(t, &plan);
    let report = faces(t.graph(), &rot).expect("assembled embedding is planar");
    assert!(report.faces.iter().all(|f| f.size() == k), "witness is not {k}-uniform");
    rot
}

/// A 3-uniform embedding, if one exists.
pub fn recognize_uniform3(g: &Multigraph) -> Result<Option<RotationSystem>> {
    let t = build_spqr(g, 0)?;
    if !uniform3_conditions(&t) {
        return Ok(None);
    }
    Ok(Some(alternating_witness(&t, 3, |_| true)))
}

fn expansion_class(t: &SpqrTree, i: NodeIx, x: usize) -> i64 {
    let (n, m) = t.expansion_counts(i, x);
    m as i64 - 2 * n as i64
}

/// P-nodes whose neighbours are half Q-nodes and half expansion graphs with
/// `m = 2n - 5`; `None` if some P-node fits neither allowed pattern.
fn uniform4_p_nodes(t: &SpqrTree) -> Option<Vec<bool>> {
    let mut half = vec![false; t.nodes().len()];
    for i in 0..t.nodes().len() {
        if t.kind(i) != NodeKind::P {
            continue;
        }
        let deg = t.node(i).edges.len();
        let classes: Vec<i64> = (0..deg).map(|x| expansion_class(t, i, x)).collect();
        if classes.iter().all(|&c| c == -4) {
            continue;
        }
        let q = (0..deg).filter(|&x| is_q(t, i, x)).count();
        let five = (0..deg).filter(|&x| !is_q(t, i, x) && classes[x] == -5).count();
        if 2 * q == deg && 2 * five == deg {
            half[i] = true;
        } else {
            return None;
        }
    }
    Some(half)
}

/// Whether the tree meets the counting conditions for a 4-uniform embedding
/// (bipartiteness is checked separately).
pub fn uniform4_conditions(t: &SpqrTree) -> bool {
    if uniform4_p_nodes(t).is_none() {
        return false;
    }
    (0..t.nodes().len()).filter(|&i| matches!(t.kind(i), NodeKind::S | NodeKind::R)).all(|i| {
        let rot = t.embed_skeleton(i, &t.default_choice(i)).unwrap();
        let sf = t.skeleton_faces(i, &rot);
        let class: Vec<i64> = (0..t.node(i).edges.len()).map(|x| expansion_class(t, i, x)).collect();
        sf.faces.iter().all(|f| {
            let cs: Vec<i64> = f.iter().map(|&d| class[d / 2]).collect();
            match f.len() {
                4 => cs.iter().all(|&c| c == -3),
                3 => cs.iter().filter(|&&c| c == -4).count() == 1 && cs.iter().filter(|&&c| c == -3).count() == 2,
                _ => false,
            }
        })
    })
}

/// A 4-uniform embedding, if one exists.
pub fn recognize_uniform4(g: &Multigraph) -> Result<Option<RotationSystem>> {
    let t = build_spqr(g, 0)?;
    if g.n() == 2 || g.bipartition().is_none() || !uniform4_conditions(&t) {
        return Ok(None);
    }
    let half = uniform4_p_nodes(&t).unwrap();
    Ok(Some(alternating_witness(&t, 4, |i| half[i])))
}

fn pertinent_size(t: &SpqrTree, i: NodeIx) -> (usize, usize) {
    let edges = t.pertinent_edges(i);
    let mut vs: Vec<usize> = edges.iter().flat_map(|&e| <[usize; 2]>::from(t.graph().ends(e))).collect();
    vs.sort_unstable();
    vs.dedup();
    (vs.len(), edges.len())
}

/// Forced almost 6-uniform type of the pertinent graph of `i`.
pub fn node_type6(t: &SpqrTree, colors: &Bipartition, i: NodeIx) -> Option<AlmostUniformType> {
    let (n, m) = pertinent_size(t, i);
    let (s, u) = t.poles(i);
    forced_type6(outer_face_length(n, m, 6), colors.same_side(s, u))
}

fn series6(t: &SpqrTree, i: NodeIx, want: EmbeddingType, ty: &[Option<EmbeddingType>]) -> Option<NodePlan> {
    let rot = t.embed_skeleton(i, &SkeletonChoice::Fixed).unwrap();
    let sf = t.skeleton_faces(i, &rot);
    let (f0, f1) = sf.sides(t.parent_edge(i).unwrap());
    let path = t.series_path(i);
    let kids: Vec<EmbeddingType> = path.iter().map(|&y| ty[t.node(i).neighbor(y).unwrap()].unwrap()).collect();
    if kids.iter().map(|k| k.a + k.b).sum::<usize>() != want.a + want.b {
        return None;
    }
    let mask = (0u32..1 << kids.len()).find(|mask| {
        let near: usize = kids.iter().enumerate().map(|(n, k)| if mask >> n & 1 == 1 { k.a } else { k.b }).sum();
        near == want.a
    })?;
    let mut plan = NodePlan::new(rot, t.node(i).edges.len());
    plan.first_face = Some(f0);
    for (n, &y) in path.iter().enumerate() {
        plan.child_first[y] = Some(if mask >> n & 1 == 1 { f0 } else { f1 });
    }
    Some(plan)
}

/// Orders the children of a P-node so that every face between two of them
/// has size 6. A child shown as `(left, right)` moves the side length the
/// next child must show on its left from `left` to `6 - right`, so a valid
/// order is an Euler trail through these side lengths.
fn parallel6(t: &SpqrTree, i: NodeIx, want: EmbeddingType, ty: &[Option<EmbeddingType>]) -> Option<NodePlan> {
    let kids: Vec<(usize, EmbeddingType)> = t.child_edges(i).into_iter().map(|(x, c)| (x, ty[c].unwrap())).collect();
    if kids.iter().any(|(_, k)| k.b > 5) {
        return None;
    }
    let mut asym: Vec<EmbeddingType> = kids.iter().filter(|(_, k)| k.a != k.b).map(|&(_, k)| k).collect();
    asym.sort();
    asym.dedup();
    let totals: Vec<usize> = asym.iter().map(|a| kids.iter().filter(|(_, k)| k == a).count()).collect();
    let mut forward = vec![0usize; asym.len()];
    loop {
        let mut left_of: Vec<(usize, usize)> = Vec::new();
        let mut used = vec![0usize; asym.len()];
        for &(x, k) in &kids {
            let fwd = match asym.iter().position(|a| *a == k) {
                Some(n) => {
                    used[n] += 1;
                    used[n] <= forward[n]
                }
                None => true,
            };
            left_of.push(if fwd { (x, k.a) } else { (x, k.b) });
        }
        if let Some(seq) = euler_order(&kids, &left_of, want) {
            let lay = p_layout(t, i, &seq);
            if lay.inner.iter().all(|&s| s == 6) && lay.ty == want {
                return Some(lay.plan);
            }
        }
        let mut n = 0;
        loop {
            if n == forward.len() {
                return None;
            }
            forward[n] += 1;
            if forward[n] <= totals[n] {
                break;
            }
            forward[n] = 0;
            n += 1;
        }
    }
}

fn euler_order(kids: &[(usize, EmbeddingType)], left_of: &[(usize, usize)], want: EmbeddingType) -> Option<Vec<Placed>> {
    // arc n: from left side length to the next required left length
    let arcs: Vec<(usize, usize, Placed)> = kids
        .iter()
        .zip(left_of)
        .map(|(&(x, k), &(_, l))| {
            let r = k.a + k.b - l;
            (l, 6 - r, Placed { edge: x, left: l, right: r })
        })
        .collect();
    let mut out_deg = [0i64; 6];
    let mut in_deg = [0i64; 6];
    for &(u, v, _) in &arcs {
        out_deg[u] += 1;
        in_deg[v] += 1;
    }
    let starts: Vec<usize> = (1..6).filter(|&s| out_deg[s] > 0).collect();
    for s in starts {
        if let Some(trail) = trail_from(&arcs, s) {
            let first = trail[0].left;
            let last = trail[trail.len() - 1].right;
            if EmbeddingType::new(first, last) == want {
                return Some(trail);
            }
        }
    }
    None
}

/// Hierholzer's algorithm on the side-length multigraph.
fn trail_from(arcs: &[(usize, usize, Placed)], start: usize) -> Option<Vec<Placed>> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 6];
    for (n, &(u, _, _)) in arcs.iter().enumerate().rev() {
        adj[u].push(n);
    }
    let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
    let mut trail: Vec<usize> = Vec::new();
    while let Some(&(v, via)) = stack.last() {
        if let Some(n) = adj[v].pop() {
            stack.push((arcs[n].1, Some(n)));
        } else {
            stack.pop();
            trail.extend(via);
        }
    }
    if trail.len() != arcs.len() {
        return None;
    }
    trail.reverse();
    let ok = trail.windows(2).all(|w| arcs[w[0]].1 == arcs[w[1]].0) && arcs[trail[0]].0 == start;
    ok.then(|| trail.into_iter().map(|n| arcs[n].2).collect())
}

/// Flips the children of an R-node so that every inner face gets size 6.
/// Children with unequal sides differ by two; each gives those two extra
/// edges to one of its faces, which is a perfect b-matching.
fn rigid6(t: &SpqrTree, i: NodeIx, want: EmbeddingType, ty: &[Option<EmbeddingType>]) -> Option<NodePlan> {
    let rot = t.embed_skeleton(i, &SkeletonChoice::Flip(false)).unwrap();
    let sf = t.skeleton_faces(i, &rot);
    let pe = t.parent_edge(i).unwrap();
    let (g0, g1) = sf.sides(pe);
    let kids = t.child_edges(i);
    for (d0, d1) in [(want.a, want.b), (want.b, want.a)] {
        let mut demand = vec![6i64; sf.faces.len()];
        demand[g0] = d0 as i64;
        demand[g1] = d1 as i64;
        let mut movable = Vec::new();
        let mut fits = true;
        for &(x, c) in &kids {
            let k = ty[c].unwrap();
            let (l, r) = sf.sides(x);
            demand[l] -= k.a as i64;
            demand[r] -= k.a as i64;
            match k.b - k.a {
                0 => {}
                2 => movable.push((x, l, r)),
                _ => fits = false,
            }
        }
        if !fits || demand.iter().any(|&d| d < 0 || d % 2 == 1) {
            continue;
        }
        let mut inst = BipartiteInstance::new(movable.len(), sf.faces.len());
        for (n, &(_, l, r)) in movable.iter().enumerate() {
            inst.add_edge(n, l);
            inst.add_edge(n, r);
        }
        inst.capacity = Some(demand.iter().map(|&d| d as usize / 2).collect());
        let Some(to) = perfect_b_matching(&inst) else { continue };
        let mut plan = NodePlan::new(rot, t.node(i).edges.len());
        plan.first_face = Some(if d0 <= d1 { g0 } else { g1 });
        for (n, &(x, l, r)) in movable.iter().enumerate() {
            plan.child_first[x] = Some(if to[n] == l { r } else { l });
        }
        return Some(plan);
    }
    None
}

/// A 6-uniform embedding, if one exists.
pub fn recognize_uniform6(g: &Multigraph) -> Result<Option<RotationSystem>> {
    let t = build_spqr(g, 0)?;
    let Some(colors) = g.bipartition() else { return Ok(None) };
    if g.euler_uniform_k() != Some(6) {
        return Ok(None);
    }
    let mut ty: Vec<Option<EmbeddingType>> = vec![None; t.nodes().len()];
    let mut plan = Plan::empty(&t);
    for i in t.postorder() {
        if i == t.root() {
            continue;
        }
        let Some(want) = node_type6(&t, &colors, i) else { return Ok(None) };
        let want = want.ty;
        let node_plan = match t.kind(i) {
            NodeKind::Q => None,
            NodeKind::S => Some(series6(&t, i, want, &ty)),
            NodeKind::P => Some(parallel6(&t, i, want, &ty)),
            NodeKind::R => Some(rigid6(&t, i, want, &ty)),
        };
        match node_plan {
            Some(None) => return Ok(None),
            Some(p) => plan.nodes[i] = p,
            None => {}
        }
        ty[i] = Some(want);
    }
    let rot = assemble(&t, &plan);
    let report = faces(g, &rot).expect("assembled embedding is planar");
    assert!(report.faces.iter().all(|f| f.size() == 6), "witness is not 6-uniform");
    Ok(Some(rot))
}

/// Finds `k` from Euler's formula and a k-uniform embedding, if any.
/// Values of `k` other than 2, 3, 4, 6 are searched exhaustively up to
/// `limit` embeddings.
pub fn recognize_uniform(g: &Multigraph, limit: u64) -> Result<Option<(usize, RotationSystem)>> {
    let t = build_spqr(g, 0)?;
    let Some(k) = g.euler_uniform_k() else { return Ok(None) };
    let k = k as usize;
    if g.n() == 2 {
        return Ok(Some((2, assemble(&t, &Plan::empty(&t)))));
    }
    let found = match k {
        3 => recognize_uniform3(g)?,
        4 => recognize_uniform4(g)?,
        6 => recognize_uniform6(g)?,
        _ => exact_uniform(g, k, limit)?,
    };
    Ok(found.map(|r| (k, r)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::DEFAULT_LIMIT;
    use crate::samples::{bundle, cube, cycle, k4, paths, subdivided};

    fn all_faces(g: &Multigraph, rot: &RotationSystem) -> Vec<usize> {
        faces(g, rot).unwrap().size_multiset()
    }

    #[test]
    fn outer_lengths() {
        assert_eq!(outer_face_length(2, 1, 5), 2);
        assert_eq!(outer_face_length(6, 6, 6), 6);
    }

    #[test]
    fn three() {
        let rot = recognize_uniform3(&k4()).unwrap().unwrap();
        assert_eq!(all_faces(&k4(), &rot), vec![3; 4]);
        let g = Multigraph::from_edges(4, &[(0, 1), (0, 1), (0, 2), (2, 1), (0, 3), (3, 1)]);
        let rot = recognize_uniform3(&g).unwrap().unwrap();
        assert_eq!(all_faces(&g, &rot), vec![3; 4]);
        assert!(recognize_uniform3(&cycle(6)).unwrap().is_none());
        assert!(recognize_uniform3(&cycle(3)).unwrap().is_some());
    }

    #[test]
    fn four() {
        let rot = recognize_uniform4(&cube()).unwrap().unwrap();
        assert_eq!(all_faces(&cube(), &rot), vec![4; 6]);
        assert!(recognize_uniform4(&k4()).unwrap().is_none());
        assert!(recognize_uniform4(&cycle(4)).unwrap().is_some());
        assert!(recognize_uniform4(&paths(&[1, 3, 1, 3])).unwrap().is_some());
        assert!(recognize_uniform4(&paths(&[2, 2, 2, 2])).unwrap().is_some());
    }

    #[test]
    fn six() {
        let rot = recognize_uniform6(&cycle(6)).unwrap().unwrap();
        assert_eq!(all_faces(&cycle(6), &rot), vec![6, 6]);
        let g = subdivided(&k4());
        let rot = recognize_uniform6(&g).unwrap().unwrap();
        assert_eq!(all_faces(&g, &rot), vec![6; 4]);
        assert!(recognize_uniform6(&paths(&[1, 5, 1, 5])).unwrap().is_some());
        assert!(recognize_uniform6(&paths(&[3, 3, 3])).unwrap().is_some());
        assert!(recognize_uniform6(&paths(&[2, 4, 2, 4])).unwrap().is_some());
        assert!(recognize_uniform6(&paths(&[3, 3, 1, 5])).unwrap().is_none());
    }

    #[test]
    fn dispatch() {
        assert_eq!(recognize_uniform(&k4(), DEFAULT_LIMIT).unwrap().unwrap().0, 3);
        assert_eq!(recognize_uniform(&cube(), DEFAULT_LIMIT).unwrap().unwrap().0, 4);
        assert_eq!(recognize_uniform(&bundle(3), DEFAULT_LIMIT).unwrap().unwrap().0, 2);
        let chord = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        assert!(recognize_uniform(&chord, DEFAULT_LIMIT).unwrap().is_none());
        let (k, rot) = recognize_uniform(&cycle(5), DEFAULT_LIMIT).unwrap().unwrap();
        assert_eq!((k, all_faces(&cycle(5), &rot)), (5, vec![5, 5]));
    }
}
