//! Graphs whose largest face can be kept at 5 exactly when a formula is
//! satisfiable.
//!
//! Every variable becomes two triangles sharing a (1,3)-edge; each side holds
//! the (1,2)-edges of the positive resp. negative occurrences. Every clause
//! is a cycle of its (1,2)-edges (padded to four edges for two literals).
//! A literal edge is shared by its variable triangle and its clause cycle.
//! The polygons are glued into a disk, the remaining holes are coned off
//! from a new vertex, and the skeleton must come out 3-connected so that the
//! only freedom left is flipping the gadget edges.

use std::collections::HashMap;

use super::sat::CnfFormula;
use super::{EdgeRole, GadgetGraph};
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::spqr::is_simple_triconnected;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Label {
    Var(usize),
    /// Occurrence `(clause, position)`.
    Lit(usize, usize),
    Plain(usize),
}

#[derive(Clone, Debug)]
struct Polygon {
    labels: Vec<Label>,
    role: EdgeRole,
}

const SEARCH_CAP: u64 = 5_000_000;

fn find(uf: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while uf[r] != r {
        r = uf[r];
    }
    let mut y = x;
    while uf[y] != r {
        let nx = uf[y];
        uf[y] = r;
        y = nx;
    }
    r
}

fn union(uf: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(uf, a), find(uf, b));
    if ra != rb {
        uf[ra.max(rb)] = ra.min(rb);
    }
}

/// Distinct cyclic arrangements of a polygon's labels, plain edges treated as
/// interchangeable. The first label stays in front.
fn arrangements(labels: &[Label]) -> Vec<Vec<Label>> {
    let key = |l: &Label| match l {
        Label::Plain(_) => Label::Plain(usize::MAX),
        other => *other,
    };
    let mut out: Vec<Vec<Label>> = Vec::new();
    let mut seen: Vec<Vec<Label>> = Vec::new();
    let mut rest: Vec<Label> = labels[1..].to_vec();
    rest.sort();
    permutations(&mut rest, 0, &mut |perm| {
        let shape: Vec<Label> = perm.iter().map(key).collect();
        if !seen.contains(&shape) {
            seen.push(shape);
            out.push(std::iter::once(labels[0]).chain(perm.iter().copied()).collect());
        }
    });
    out
}

fn permutations(items: &mut Vec<Label>, k: usize, f: &mut dyn FnMut(&[Label])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, f);
        items.swap(k, i);
    }
}

/// A triangulated sphere: polygon edges carry their label, cone edges none.
struct Glued {
    n: usize,
    edges: Vec<((usize, usize), Option<Label>)>,
    /// Triangles `[hub, a, b]` added to close the holes.
    cones: Vec<[usize; 3]>,
}

/// Glues one arrangement; `None` unless the result is a 3-connected sphere
/// with the polygons as faces.
fn glue(polys: &[Vec<Label>]) -> Option<Glued> {
    let base: Vec<usize> = polys
        .iter()
        .scan(0, |acc, p| {
            let b = *acc;
            *acc += p.len();
            Some(b)
        })
        .collect();
    let slots: usize = polys.iter().map(Vec::len).sum();
    let slot = |p: usize, i: usize| base[p] + i % polys[p].len();
    let mut uses: HashMap<Label, Vec<(usize, usize)>> = HashMap::new();
    for (p, poly) in polys.iter().enumerate() {
        for (i, l) in poly.iter().enumerate() {
            uses.entry(*l).or_default().push((p, i));
        }
    }
    let mut uf: Vec<usize> = (0..slots).collect();
    for occ in uses.values() {
        if let [(p, i), (q, j)] = occ[..] {
            union(&mut uf, slot(p, i), slot(q, j + 1));
            union(&mut uf, slot(p, i + 1), slot(q, j));
        }
    }
    let mut vid = vec![usize::MAX; slots];
    let mut n = 0;
    for s in 0..slots {
        let r = find(&mut uf, s);
        if vid[r] == usize::MAX {
            vid[r] = n;
            n += 1;
        }
        vid[s] = vid[r];
    }
    let mut labels: Vec<Label> = uses.keys().copied().collect();
    labels.sort();
    let mut edges: Vec<((usize, usize), Option<Label>)> = Vec::new();
    for l in labels {
        let (p, i) = uses[&l][0];
        let (a, b) = (vid[slot(p, i)], vid[slot(p, i + 1)]);
        if a == b {
            return None;
        }
        edges.push(((a, b), Some(l)));
    }
    // corners at a vertex form a path or a cycle; boundary edges run around holes
    let mut out_of = vec![None; n];
    for (p, poly) in polys.iter().enumerate() {
        for (i, l) in poly.iter().enumerate() {
            if uses[l].len() == 1 {
                let (a, b) = (vid[slot(p, i)], vid[slot(p, i + 1)]);
                if out_of[a].is_some() {
                    return None;
                }
                out_of[a] = Some(b);
            }
        }
    }
    let mut visited = vec![false; n];
    let mut faces = polys.len();
    let mut total = n;
    let mut cones = Vec::new();
    for start in 0..n {
        if out_of[start].is_none() || visited[start] {
            continue;
        }
        let hub = total;
        total += 1;
        let mut at = start;
        loop {
            visited[at] = true;
            edges.push(((hub, at), None));
            faces += 1;
            let next = out_of[at]?;
            cones.push([hub, at, next]);
            at = next;
            if at == start {
                break;
            }
            if visited[at] {
                return None;
            }
        }
    }
    let ends: Vec<(usize, usize)> = edges.iter().map(|e| e.0).collect();
    if total as i64 - ends.len() as i64 + faces as i64 != 2 || !is_simple_triconnected(total, &ends) {
        return None;
    }
    Some(Glued { n: total, edges, cones })
}

/// Tries every arrangement of the polygons until one glues.
fn search(polys: &[Vec<Label>]) -> Result<Glued> {
    let options: Vec<Vec<Vec<Label>>> = polys.iter().map(|p| arrangements(p)).collect();
    let combos: u64 = options.iter().map(|o| o.len() as u64).product();
    if combos > SEARCH_CAP {
        return Err(Error::RegimeViolation(format!("layout search too large ({combos} arrangements)")));
    }
    let mut digits = vec![0; polys.len()];
    loop {
        let pick: Vec<Vec<Label>> = digits.iter().enumerate().map(|(p, &d)| options[p][d].clone()).collect();
        if let Some(g) = glue(&pick) {
            return Ok(g);
        }
        let mut p = 0;
        loop {
            if p == digits.len() {
                return Err(Error::RegimeViolation("no planar layout of the gadgets".into()));
            }
            digits[p] += 1;
            if digits[p] < options[p].len() {
                break;
            }
            digits[p] = 0;
            p += 1;
        }
    }
}

/// Glues `other` into `acc` by identifying one cone triangle of each. The
/// result is again a triangulated sphere, still 3-connected.
fn connect(acc: &mut Glued, other: Glued) {
    let target = acc.cones.pop().expect("a cone triangle");
    let source = other.cones[0];
    let mut map = vec![usize::MAX; other.n];
    for (s, t) in source.iter().zip(target) {
        map[*s] = t;
    }
    for v in 0..other.n {
        if map[v] == usize::MAX {
            map[v] = acc.n;
            acc.n += 1;
        }
    }
    let in_source = |(a, b): (usize, usize)| source.contains(&a) && source.contains(&b);
    for ((a, b), l) in other.edges {
        if !in_source((a, b)) {
            acc.edges.push(((map[a], map[b]), l));
        }
    }
    acc.cones.extend(other.cones[1..].iter().map(|c| c.map(|v| map[v])));
}

/// Builds the instance for `phi`. Each clause needs two or three literals on
/// distinct variables; a variable may occur at most three times, and then
/// twice positively.
pub fn gen_minmax5_instance(phi: &CnfFormula) -> Result<GadgetGraph> {
    if phi.vars == 0 {
        return Err(Error::RegimeViolation("no variables".into()));
    }
    for (c, clause) in phi.clauses.iter().enumerate() {
        if !(2..=3).contains(&clause.len()) {
            return Err(Error::RegimeViolation(format!("clause {c} has {} literals", clause.len())));
        }
        let mut vs: Vec<usize> = clause.iter().map(|l| l.var).collect();
        vs.sort_unstable();
        vs.dedup();
        if vs.len() != clause.len() {
            return Err(Error::RegimeViolation(format!("clause {c} repeats a variable")));
        }
        if clause.iter().any(|l| l.var >= phi.vars) {
            return Err(Error::RegimeViolation(format!("clause {c} uses an undeclared variable")));
        }
    }
    for (v, &(p, q)) in phi.occurrences().iter().enumerate() {
        if p + q > 3 || (p + q == 3 && p != 2) || p > 2 || q > 2 {
            return Err(Error::RegimeViolation(format!(
                "variable {} occurs {p} times positively and {q} times negatively",
                v + 1
            )));
        }
    }

    let mut polys: Vec<Polygon> = Vec::new();
    let mut plain = 0;
    let pad = |labels: &mut Vec<Label>, len: usize, plain: &mut usize| {
        while labels.len() < len {
            labels.push(Label::Plain(*plain));
            *plain += 1;
        }
    };
    for v in 0..phi.vars {
        for positive in [true, false] {
            let mut labels = vec![Label::Var(v)];
            for (c, clause) in phi.clauses.iter().enumerate() {
                for (i, l) in clause.iter().enumerate() {
                    if l.var == v && l.positive == positive {
                        labels.push(Label::Lit(c, i));
                    }
                }
            }
            pad(&mut labels, 3, &mut plain);
            polys.push(Polygon { labels, role: EdgeRole::VariableCycle { var: v } });
        }
    }
    for (c, clause) in phi.clauses.iter().enumerate() {
        let mut labels: Vec<Label> = (0..clause.len()).map(|i| Label::Lit(c, i)).collect();
        pad(&mut labels, if clause.len() == 2 { 4 } else { 3 }, &mut plain);
        polys.push(Polygon { labels, role: EdgeRole::ClauseCycle { clause: c } });
    }

    // polygons sharing a label belong to one sphere
    let mut uf: Vec<usize> = (0..polys.len()).collect();
    let mut owner: HashMap<Label, usize> = HashMap::new();
    for (p, poly) in polys.iter().enumerate() {
        for l in &poly.labels {
            if let Some(&q) = owner.get(l) {
                union(&mut uf, p, q);
            }
            owner.insert(*l, p);
        }
    }
    let mut spheres: Vec<Glued> = Vec::new();
    for root in 0..polys.len() {
        if find(&mut uf, root) != root {
            continue;
        }
        let members: Vec<Vec<Label>> =
            (0..polys.len()).filter(|&p| find(&mut uf, p) == root).map(|p| polys[p].labels.clone()).collect();
        spheres.push(search(&members)?);
    }
    let mut rest = spheres.into_iter();
    let mut glued = rest.next().expect("at least one variable");
    for other in rest {
        connect(&mut glued, other);
    }
    let skeleton: Vec<(usize, usize)> = glued.edges.iter().map(|e| e.0).collect();
    assert!(is_simple_triconnected(glued.n, &skeleton));

    let role_of = |l: Label| -> EdgeRole {
        match l {
            Label::Var(v) => EdgeRole::Variable { var: v },
            Label::Lit(c, i) => {
                let lit = phi.clauses[c][i];
                EdgeRole::Literal { var: lit.var, positive: lit.positive, clause: c }
            }
            Label::Plain(_) => polys.iter().find(|p| p.labels.contains(&l)).unwrap().role,
        }
    };
    let mut n = glued.n;
    let mut ends = Vec::new();
    let mut roles = Vec::new();
    for ((a, b), l) in glued.edges {
        let Some(l) = l else {
            ends.push((a, b));
            roles.push(EdgeRole::Filler);
            continue;
        };
        let role = role_of(l);
        ends.push((a, b));
        roles.push(role);
        let path = match l {
            Label::Var(_) => 3,
            Label::Lit(..) => 2,
            Label::Plain(_) => 0,
        };
        if path > 0 {
            let mut at = a;
            for _ in 1..path {
                ends.push((at, n));
                roles.push(role);
                at = n;
                n += 1;
            }
            ends.push((at, b));
            roles.push(role);
        }
    }
    Ok(GadgetGraph { graph: Multigraph::from_edges(n, &ends), roles, poles: None })
}
