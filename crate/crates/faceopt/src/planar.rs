//! Planar embedding of biconnected graphs by incremental path addition
//! (Demoucron, Malgrange and Pertuiset).

use std::collections::VecDeque;

use crate::embedding::{dart_from, head, reverse, rotation_from_faces, Dart};
use crate::graph::{EdgeIx, VertexIx};

struct Fragment {
    edges: Vec<EdgeIx>,
    attachments: Vec<VertexIx>,
}

fn initial_cycle(n: usize, ends: &[(VertexIx, VertexIx)], adj: &[Vec<EdgeIx>]) -> Option<Vec<Dart>> {
    // edge 0 plus a shortest path back that avoids it
    let (a, b) = ends[0];
    let mut via = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[b] = true;
    let mut queue = VecDeque::from([b]);
    while let Some(v) = queue.pop_front() {
        if v == a {
            break;
        }
        for &e in &adj[v] {
            if e == 0 {
                continue;
            }
            let w = if ends[e].0 == v { ends[e].1 } else { ends[e].0 };
            if !seen[w] {
                seen[w] = true;
                via[w] = e;
                queue.push_back(w);
            }
        }
    }
    if !seen[a] {
        return None;
    }
    // walk back from a to b, collecting darts a <- ... <- b, then reverse
    let mut back = Vec::new();
    let mut v = a;
    while v != b {
        let e = via[v];
        let prev = if ends[e].0 == v { ends[e].1 } else { ends[e].0 };
        back.push(dart_from(ends, e, prev));
        v = prev;
    }
    back.reverse();
    let mut cycle = vec![dart_from(ends, 0, a)];
    cycle.extend(back);
    Some(cycle)
}

/// Faces of a planar embedding of the biconnected graph on `0..n` with the
/// given edge ends, or `None` if the graph is not planar.
pub(crate) fn planar_faces(n: usize, ends: &[(VertexIx, VertexIx)]) -> Option<Vec<Vec<Dart>>> {
    let m = ends.len();
    if m < 2 {
        return None;
    }
    let mut adj = vec![Vec::new(); n];
    for (e, &(u, v)) in ends.iter().enumerate() {
        adj[u].push(e);
        adj[v].push(e);
    }
    let cycle = initial_cycle(n, ends, &adj)?;
    let mut vin = vec![false; n];
    let mut ein = vec![false; m];
    let mut placed = 0;
    for &d in &cycle {
        vin[head(ends, d)] = true;
        ein[d / 2] = true;
        placed += 1;
    }
    let back: Vec<Dart> = cycle.iter().rev().map(|&d| reverse(d)).collect();
    let mut faces = vec![cycle, back];
    let other = |e: EdgeIx, v: VertexIx| if ends[e].0 == v { ends[e].1 } else { ends[e].0 };

    while placed < m {
        let fragments = collect_fragments(n, ends, &adj, &vin, &ein);
        let face_sets: Vec<Vec<bool>> = faces
            .iter()
            .map(|f| {
                let mut s = vec![false; n];
                for &d in f {
                    s[head(ends, d)] = true;
                }
                s
            })
            .collect();
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&i| frag.attachments.iter().all(|&v| face_sets[i][v]))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_ix) = choice?;
        let frag = &fragments[fi];
        // path through the fragment between two attachments
        let path = if frag.edges.len() == 1 && vin[ends[frag.edges[0]].0] && vin[ends[frag.edges[0]].1] {
            let e = frag.edges[0];
            vec![dart_from(ends, e, ends[e].0)]
        } else {
            let start = frag.attachments[0];
            let in_frag: std::collections::HashSet<EdgeIx> = frag.edges.iter().copied().collect();
            let mut via = vec![usize::MAX; n];
            let mut seen = vec![false; n];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut end = None;
            'bfs: while let Some(v) = queue.pop_front() {
                for &e in &adj[v] {
                    if !in_frag.contains(&e) {
                        continue;
                    }
                    let w = other(e, v);
                    if seen[w] {
                        continue;
                    }
                    seen[w] = true;
                    via[w] = e;
                    if vin[w] {
                        end = Some(w);
                        break 'bfs;
                    }
                    queue.push_back(w);
                }
            }
            let mut v = end?;
            let mut darts = Vec::new();
            while v != start {
                let e = via[v];
                let p = other(e, v);
                darts.push(dart_from(ends, e, p));
                v = p;
            }
            darts.reverse();
            darts
        };
        let a = crate::embedding::tail(ends, path[0]);
        let b = head(ends, *path.last().unwrap());
        let face = faces.swap_remove(face_ix);
        let k = face.len();
        let i = (0..k).find(|&i| head(ends, face[i]) == a)?;
        let j = (0..k).find(|&j| head(ends, face[j]) == b)?;
        // a -> b along the face, then back along the path
        let mut f1 = Vec::new();
        let mut t = (i + 1) % k;
        loop {
            f1.push(face[t]);
            if t == j {
                break;
            }
            t = (t + 1) % k;
        }
        f1.extend(path.iter().rev().map(|&d| reverse(d)));
        let mut f2 = Vec::new();
        let mut t = (j + 1) % k;
        loop {
            f2.push(face[t]);
            if t == i {
                break;
            }
            t = (t + 1) % k;
        }
        f2.extend(path.iter().copied());
        faces.push(f1);
        faces.push(f2);
        for &d in &path {
            ein[d / 2] = true;
            vin[head(ends, d)] = true;
            placed += 1;
        }
    }
    Some(faces)
}

fn collect_fragments(
    n: usize,
    ends: &[(VertexIx, VertexIx)],
    adj: &[Vec<EdgeIx>],
    vin: &[bool],
    ein: &[bool],
) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (e, &(u, v)) in ends.iter().enumerate() {
        if !ein[e] && vin[u] && vin[v] {
            out.push(Fragment { edges: vec![e], attachments: vec![u, v] });
        }
    }
    let mut comp = vec![usize::MAX; n];
    for s in 0..n {
        if vin[s] || comp[s] != usize::MAX {
            continue;
        }
        let id = s;
        comp[s] = id;
        let mut stack = vec![s];
        let mut edges = Vec::new();
        let mut attachments = Vec::new();
        while let Some(v) = stack.pop() {
            for &e in &adj[v] {
                let w = if ends[e].0 == v { ends[e].1 } else { ends[e].0 };
                if vin[w] {
                    edges.push(e);
                    attachments.push(w);
                } else {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                    if v < w {
                        edges.push(e);
                    }
                }
            }
        }
        // parallel interior edges between the same pair are pushed once each
        edges.sort_unstable();
        edges.dedup();
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment { edges, attachments });
    }
    out
}

/// Rotation (edge lists per vertex) of a planar embedding, if one exists.
pub(crate) fn planar_rotation(n: usize, ends: &[(VertexIx, VertexIx)]) -> Option<Vec<Vec<EdgeIx>>> {
    let faces = planar_faces(n, ends)?;
    rotation_from_faces(n, ends, &faces).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::trace_faces;

    fn check(n: usize, ends: &[(usize, usize)]) -> Option<usize> {
        let rot = planar_rotation(n, ends)?;
        let f = trace_faces(ends, &rot).unwrap().len();
        assert_eq!(n as i64 - ends.len() as i64 + f as i64, 2);
        Some(f)
    }

    #[test]
    fn embeds_small_planar_graphs() {
        let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        assert_eq!(check(4, &k4), Some(4));
        assert_eq!(check(2, &[(0, 1), (0, 1), (1, 0)]), Some(3));
        let cube = [
            (0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7),
        ];
        assert_eq!(check(8, &cube), Some(6));
    }

    #[test]
    fn rejects_k5_and_k33() {
        let mut k5 = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                k5.push((i, j));
            }
        }
        assert!(planar_rotation(5, &k5).is_none());
        let mut k33 = Vec::new();
        for i in 0..3 {
            for j in 3..6 {
                k33.push((i, j));
            }
        }
        assert!(planar_rotation(6, &k33).is_none());
    }
}
