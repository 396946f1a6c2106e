//! Rotation systems and face traversal.
//!
//! A dart is a directed edge-side: `2*e` runs from the first to the second
//! stored endpoint of `e`, `2*e + 1` runs back. Faces are traced by taking,
//! at the head of the current dart, the successor of its edge in the head's
//! cyclic order.

use crate::error::{Error, Result};
use crate::graph::{EdgeIx, Multigraph, VertexIx};

pub type Dart = usize;

pub fn dart(e: EdgeIx, reversed: bool) -> Dart {
    2 * e + reversed as usize
}

pub fn dart_edge(d: Dart) -> EdgeIx {
    d / 2
}

pub fn reverse(d: Dart) -> Dart {
    d ^ 1
}

pub fn tail(ends: &[(VertexIx, VertexIx)], d: Dart) -> VertexIx {
    let (a, b) = ends[d / 2];
    if d % 2 == 0 {
        a
    } else {
        b
    }
}

pub fn head(ends: &[(VertexIx, VertexIx)], d: Dart) -> VertexIx {
    tail(ends, reverse(d))
}

/// The dart along `e` leaving `v`.
pub fn dart_from(ends: &[(VertexIx, VertexIx)], e: EdgeIx, v: VertexIx) -> Dart {
    if ends[e].0 == v {
        2 * e
    } else {
        2 * e + 1
    }
}

/// Successor permutation on darts for a rotation over `ends`.
///
/// Fails if some vertex's list is not a permutation of its incident edges.
pub(crate) fn successor_table(
    ends: &[(VertexIx, VertexIx)],
    rot: &[Vec<EdgeIx>],
) -> Result<Vec<Dart>> {
    let m = ends.len();
    // next edge after e at each of its two endpoints
    let mut succ_at = vec![[usize::MAX; 2]; m];
    for (v, order) in rot.iter().enumerate() {
        let k = order.len();
        for (i, &e) in order.iter().enumerate() {
            if e >= m {
                return Err(Error::InvalidRotation(format!("edge index {e} out of range")));
            }
            let side = if ends[e].0 == v {
                0
            } else if ends[e].1 == v {
                1
            } else {
                return Err(Error::InvalidRotation(format!("edge {e} not incident to vertex {v}")));
            };
            if succ_at[e][side] != usize::MAX {
                return Err(Error::InvalidRotation(format!("edge {e} repeated at vertex {v}")));
            }
            succ_at[e][side] = order[(i + 1) % k];
        }
    }
    let mut next = vec![0; 2 * m];
    for d in 0..2 * m {
        let e = dart_edge(d);
        let head_side = if d % 2 == 0 { 1 } else { 0 };
        let f = succ_at[e][head_side];
        if f == usize::MAX {
            return Err(Error::InvalidRotation(format!("edge {e} missing from a rotation")));
        }
        next[d] = dart_from(ends, f, head(ends, d));
    }
    Ok(next)
}

/// Traces all faces; each face is its cyclic dart sequence.
pub(crate) fn trace_faces(ends: &[(VertexIx, VertexIx)], rot: &[Vec<EdgeIx>]) -> Result<Vec<Vec<Dart>>> {
    let next = successor_table(ends, rot)?;
    let mut seen = vec![false; next.len()];
    let mut faces = Vec::new();
    for start in 0..next.len() {
        if seen[start] {
            continue;
        }
        let mut face = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            face.push(d);
            d = next[d];
        }
        faces.push(face);
    }
    Ok(faces)
}

/// Recovers a rotation from a set of faces given as closed dart walks.
pub(crate) fn rotation_from_faces(
    n: usize,
    ends: &[(VertexIx, VertexIx)],
    faces: &[Vec<Dart>],
) -> Result<Vec<Vec<EdgeIx>>> {
    let m = ends.len();
    let mut succ_at = vec![[usize::MAX; 2]; m];
    for face in faces {
        for (i, &d) in face.iter().enumerate() {
            let nd = face[(i + 1) % face.len()];
            let v = head(ends, d);
            if tail(ends, nd) != v {
                return Err(Error::InvalidRotation("face walk is not closed".into()));
            }
            let side = if d % 2 == 0 { 1 } else { 0 };
            succ_at[dart_edge(d)][side] = dart_edge(nd);
        }
    }
    let mut incident = vec![Vec::new(); n];
    for (e, &(a, b)) in ends.iter().enumerate() {
        incident[a].push(e);
        incident[b].push(e);
    }
    let mut rot = vec![Vec::new(); n];
    for v in 0..n {
        let Some(&first) = incident[v].iter().min() else { continue };
        let mut e = first;
        loop {
            rot[v].push(e);
            let side = if ends[e].0 == v { 0 } else { 1 };
            e = succ_at[e][side];
            if e == usize::MAX {
                return Err(Error::InvalidRotation("faces do not cover every dart".into()));
            }
            if e == first {
                break;
            }
            if rot[v].len() > incident[v].len() {
                return Err(Error::InvalidRotation("faces do not close around a vertex".into()));
            }
        }
        if rot[v].len() != incident[v].len() {
            return Err(Error::InvalidRotation(format!("vertex {v} is pinched")));
        }
    }
    Ok(rot)
}

/// Cyclic order of incident edges at every vertex of a [`Multigraph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    order: Vec<Vec<EdgeIx>>,
}

impl RotationSystem {
    /// Validates that each list is a permutation of the vertex's incident edges.
    pub fn new(g: &Multigraph, order: Vec<Vec<EdgeIx>>) -> Result<Self> {
        if order.len() != g.n() {
            return Err(Error::InvalidRotation(format!(
                "expected {} vertex lists, got {}",
                g.n(),
                order.len()
            )));
        }
        successor_table(g.edge_ends(), &order)?;
        for v in 0..g.n() {
            if order[v].len() != g.degree(v) {
                return Err(Error::InvalidRotation(format!(
                    "vertex {} lists {} edges, degree is {}",
                    g.vertex_id(v),
                    order[v].len(),
                    g.degree(v)
                )));
            }
        }
        Ok(RotationSystem { order })
    }

    pub(crate) fn from_raw(order: Vec<Vec<EdgeIx>>) -> Self {
        RotationSystem { order }
    }

    pub fn at(&self, v: VertexIx) -> &[EdgeIx] {
        &self.order[v]
    }

    pub fn lists(&self) -> &[Vec<EdgeIx>] {
        &self.order
    }

    pub fn mirrored(&self) -> Self {
        RotationSystem {
            order: self.order.iter().map(|o| o.iter().rev().copied().collect()).collect(),
        }
    }

    /// Rotation obtained from a planar face set (closed dart walks).
    pub fn from_faces(g: &Multigraph, faces: &[Vec<Dart>]) -> Result<Self> {
        let order = rotation_from_faces(g.n(), g.edge_ends(), faces)?;
        RotationSystem::new(g, order)
    }

    /// Rotation of the subgraph spanned by `edges` (a restriction of this one).
    pub fn restricted(&self, g: &Multigraph, sub: &Multigraph) -> Self {
        let order = (0..sub.n())
            .map(|v| {
                let gv = g.vertex_index(sub.vertex_id(v)).expect("subgraph vertex");
                self.order[gv]
                    .iter()
                    .filter_map(|&e| sub.edge_index(g.edge_id(e)))
                    .collect()
            })
            .collect();
        RotationSystem { order }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn size(&self) -> usize {
        self.darts.len()
    }
}

/// All faces of one embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceReport {
    pub faces: Vec<Face>,
    /// `face_of[d]` is the face containing dart `d`.
    pub face_of: Vec<usize>,
}

impl FaceReport {
    pub fn max_face(&self) -> usize {
        self.faces.iter().map(Face::size).max().unwrap_or(0)
    }

    /// Face sizes in ascending order.
    pub fn size_multiset(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.faces.iter().map(Face::size).collect();
        s.sort_unstable();
        s
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

/// Traces the faces of `rot` and checks Euler's formula (`g` connected).
pub fn faces(g: &Multigraph, rot: &RotationSystem) -> Result<FaceReport> {
    if rot.order.len() != g.n() {
        return Err(Error::InvalidRotation("vertex count mismatch".into()));
    }
    let traced = trace_faces(g.edge_ends(), &rot.order)?;
    let euler = g.n() as i64 - g.m() as i64 + traced.len() as i64;
    if euler != 2 {
        return Err(Error::NonPlanarRotation { euler });
    }
    let mut face_of = vec![0; 2 * g.m()];
    for (i, f) in traced.iter().enumerate() {
        for &d in f {
            face_of[d] = i;
        }
    }
    let report = FaceReport { faces: traced.into_iter().map(|darts| Face { darts }).collect(), face_of };
    debug_assert_eq!(report.faces.iter().map(Face::size).sum::<usize>(), 2 * g.m());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_planar() -> (Multigraph, RotationSystem) {
        let g = Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        // vertex 0 in the middle of triangle 1,2,3
        let order = vec![vec![0, 1, 2], vec![0, 4, 3], vec![1, 3, 5], vec![2, 5, 4]];
        let rot = RotationSystem::new(&g, order).unwrap();
        (g, rot)
    }

    #[test]
    fn k4_faces() {
        let (g, rot) = k4_planar();
        let r = faces(&g, &rot).unwrap();
        assert_eq!(r.size_multiset(), vec![3, 3, 3, 3]);
        assert_eq!(faces(&g, &rot.mirrored()).unwrap().size_multiset(), vec![3, 3, 3, 3]);
    }

    #[test]
    fn k4_nonplanar_rotation() {
        let g = Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let order = vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 3, 5], vec![2, 5, 4]];
        let rot = RotationSystem::new(&g, order).unwrap();
        assert!(matches!(faces(&g, &rot), Err(Error::NonPlanarRotation { .. })));
    }

    #[test]
    fn cycle_and_pair() {
        let c4 = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let rot = RotationSystem::new(&c4, vec![vec![0, 3], vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(faces(&c4, &rot).unwrap().size_multiset(), vec![4, 4]);
        let pair = Multigraph::from_edges(2, &[(0, 1), (0, 1)]);
        let rot = RotationSystem::new(&pair, vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(faces(&pair, &rot).unwrap().size_multiset(), vec![2, 2]);
    }

    #[test]
    fn faces_round_trip() {
        let (g, rot) = k4_planar();
        let r = faces(&g, &rot).unwrap();
        let darts: Vec<Vec<Dart>> = r.faces.iter().map(|f| f.darts.clone()).collect();
        assert_eq!(RotationSystem::from_faces(&g, &darts).unwrap(), rot);
    }

    #[test]
    fn rejects_bad_lists() {
        let g = Multigraph::from_edges(2, &[(0, 1), (0, 1)]);
        assert!(RotationSystem::new(&g, vec![vec![0], vec![0, 1]]).is_err());
        assert!(RotationSystem::new(&g, vec![vec![0, 0], vec![0, 1]]).is_err());
    }
}
