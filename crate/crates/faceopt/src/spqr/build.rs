//! Split-pair decomposition into bonds, polygons and rigid components,
//! followed by merging of adjacent bonds and adjacent polygons.

use std::collections::HashMap;

use crate::graph::{EdgeIx, VertexIx};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Tag {
    Real(EdgeIx),
    Virt(usize),
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct CEdge {
    pub u: VertexIx,
    pub v: VertexIx,
    pub tag: Tag,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum CompKind {
    Bond,
    Polygon,
    Rigid,
}

#[derive(Clone, Debug)]
pub(crate) struct Component {
    pub kind: CompKind,
    pub edges: Vec<CEdge>,
}

fn key(u: VertexIx, v: VertexIx) -> (VertexIx, VertexIx) {
    (u.min(v), u.max(v))
}

struct Splitter {
    next_virtual: usize,
    done: Vec<Component>,
}

impl Splitter {
    fn fresh(&mut self) -> usize {
        self.next_virtual += 1;
        self.next_virtual - 1
    }

    fn process(&mut self, edges: Vec<CEdge>) {
        let mut pending = vec![edges];
        while let Some(edges) = pending.pop() {
            let mut verts: Vec<VertexIx> = edges.iter().flat_map(|e| [e.u, e.v]).collect();
            verts.sort_unstable();
            verts.dedup();
            if verts.len() == 2 {
                self.done.push(Component { kind: CompKind::Bond, edges });
                continue;
            }
            // split off bundles of parallel edges
            let mut groups: HashMap<(VertexIx, VertexIx), Vec<usize>> = HashMap::new();
            for (i, e) in edges.iter().enumerate() {
                groups.entry(key(e.u, e.v)).or_default().push(i);
            }
            let mut bundles: Vec<_> = groups.into_iter().filter(|(_, g)| g.len() > 1).collect();
            if !bundles.is_empty() {
                bundles.sort();
                let mut taken = vec![false; edges.len()];
                let mut rest = Vec::new();
                for ((u, v), idx) in bundles {
                    let x = self.fresh();
                    let mut bond: Vec<CEdge> = idx.iter().map(|&i| edges[i]).collect();
                    for &i in &idx {
                        taken[i] = true;
                    }
                    bond.push(CEdge { u, v, tag: Tag::Virt(x) });
                    self.done.push(Component { kind: CompKind::Bond, edges: bond });
                    rest.push(CEdge { u, v, tag: Tag::Virt(x) });
                }
                for (i, e) in edges.iter().enumerate() {
                    if !taken[i] {
                        rest.push(*e);
                    }
                }
                pending.push(rest);
                continue;
            }
            let local: HashMap<VertexIx, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            let k = verts.len();
            let mut adj = vec![Vec::new(); k];
            for e in &edges {
                adj[local[&e.u]].push(local[&e.v]);
                adj[local[&e.v]].push(local[&e.u]);
            }
            if edges.len() == k && adj.iter().all(|a| a.len() == 2) {
                self.done.push(Component { kind: CompKind::Polygon, edges });
                continue;
            }
            match find_split(&adj) {
                None => self.done.push(Component { kind: CompKind::Rigid, edges }),
                Some((a, b, side)) => {
                    let x = self.fresh();
                    let (ga, gb) = (verts[a], verts[b]);
                    let mut one = Vec::new();
                    let mut two = Vec::new();
                    for e in edges {
                        if side[local[&e.u]] || side[local[&e.v]] {
                            one.push(e);
                        } else {
                            two.push(e);
                        }
                    }
                    one.push(CEdge { u: ga, v: gb, tag: Tag::Virt(x) });
                    two.push(CEdge { u: ga, v: gb, tag: Tag::Virt(x) });
                    pending.push(two);
                    pending.push(one);
                }
            }
        }
    }
}

/// A pair `{a, b}` whose removal disconnects the (simple) graph, with the
/// vertex set of one resulting component marked.
fn find_split(adj: &[Vec<usize>]) -> Option<(usize, usize, Vec<bool>)> {
    let k = adj.len();
    for a in 0..k {
        for b in a + 1..k {
            let start = (0..k).find(|&v| v != a && v != b)?;
            let mut seen = vec![false; k];
            seen[a] = true;
            seen[b] = true;
            seen[start] = true;
            let mut stack = vec![start];
            let mut count = 1;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
            if count < k - 2 {
                let mut side = seen;
                side[a] = false;
                side[b] = false;
                return Some((a, b, side));
            }
        }
    }
    None
}

fn merge_same_kind(mut comps: Vec<Option<Component>>) -> Vec<Component> {
    loop {
        let mut owners: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, c) in comps.iter().enumerate() {
            if let Some(c) = c {
                for e in &c.edges {
                    if let Tag::Virt(x) = e.tag {
                        owners.entry(x).or_default().push(i);
                    }
                }
            }
        }
        let mut keys: Vec<usize> = owners.keys().copied().collect();
        keys.sort_unstable();
        let found = keys.into_iter().find_map(|x| {
            let o = &owners[&x];
            debug_assert_eq!(o.len(), 2);
            let (i, j) = (o[0], o[1]);
            let ki = comps[i].as_ref().unwrap().kind;
            let kj = comps[j].as_ref().unwrap().kind;
            (ki == kj && ki != CompKind::Rigid).then_some((x, i, j))
        });
        let Some((x, i, j)) = found else { break };
        let cj = comps[j].take().unwrap();
        let ci = comps[i].as_mut().unwrap();
        ci.edges.retain(|e| e.tag != Tag::Virt(x));
        ci.edges.extend(cj.edges.into_iter().filter(|e| e.tag != Tag::Virt(x)));
    }
    comps.into_iter().flatten().collect()
}

/// Triconnected components of a biconnected multigraph given by its edge ends.
pub(crate) fn triconnected_components(ends: &[(VertexIx, VertexIx)]) -> Vec<Component> {
    let mut s = Splitter { next_virtual: 0, done: Vec::new() };
    let edges = ends
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| CEdge { u, v, tag: Tag::Real(e) })
        .collect();
    s.process(edges);
    merge_same_kind(s.done.into_iter().map(Some).collect())
}
