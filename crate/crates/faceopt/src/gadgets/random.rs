use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embedding::{head, tail, trace_faces, Dart};
use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// A plane multigraph grown by subdividing edges and adding edges inside faces.
struct Plane {
    ends: Vec<(usize, usize)>,
    rot: Vec<Vec<usize>>,
}

impl Plane {
    fn digon() -> Self {
        Plane { ends: vec![(0, 1), (0, 1)], rot: vec![vec![0, 1], vec![1, 0]] }
    }

    fn subdivide(&mut self, e: usize) {
        let (u, v) = self.ends[e];
        let w = self.rot.len();
        let f = self.ends.len();
        self.ends[e] = (u, w);
        self.ends.push((w, v));
        let at = self.rot[v].iter().position(|&x| x == e).unwrap();
        self.rot[v][at] = f;
        self.rot.push(vec![e, f]);
    }

    /// Adds an edge between the corners entered by darts `p1` and `p2` of one face.
    fn chord(&mut self, p1: Dart, p2: Dart) {
        let u = head(&self.ends, p1);
        let w = head(&self.ends, p2);
        assert_ne!(u, w);
        let e = self.ends.len();
        self.ends.push((u, w));
        for (v, p) in [(u, p1), (w, p2)] {
            let at = self.rot[v].iter().position(|&x| x == p / 2).unwrap();
            self.rot[v].insert(at + 1, e);
        }
    }

    fn random_chord(&mut self, rng: &mut ChaCha8Rng) {
        let faces = trace_faces(&self.ends, &self.rot).unwrap();
        let face = &faces[rng.gen_range(0..faces.len())];
        let k = face.len();
        // corner i sits between face[i-1] and face[i]
        loop {
            let i = rng.gen_range(0..k);
            let j = rng.gen_range(0..k);
            let (p1, p2) = (face[(i + k - 1) % k], face[(j + k - 1) % k]);
            if tail(&self.ends, face[i]) != tail(&self.ends, face[j]) {
                self.chord(p1, p2);
                return;
            }
        }
    }

    fn into_graph(self) -> Multigraph {
        Multigraph::from_edges(self.rot.len(), &self.ends)
    }
}

/// A random biconnected planar multigraph with `n` vertices and `m` edges,
/// grown from a digon. Deterministic in `seed`.
pub fn gen_random_biconnected(n: usize, m: usize, seed: u64) -> Result<Multigraph> {
    if n < 2 || m < n || (n == 2 && m < 2) {
        return Err(Error::InvalidParams(format!("need 2 <= n <= m, got n={n}, m={m}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut plane = Plane::digon();
    let (mut subdivisions, mut chords) = (n - 2, m - n);
    while subdivisions + chords > 0 {
        if rng.gen_range(0..subdivisions + chords) < subdivisions {
            let e = rng.gen_range(0..plane.ends.len());
            plane.subdivide(e);
            subdivisions -= 1;
        } else {
            plane.random_chord(&mut rng);
            chords -= 1;
        }
    }
    Ok(plane.into_graph())
}

/// A random bipartite biconnected planar multigraph with `n` vertices and
/// `3n/2 - 3` edges, so that six-uniform embeddings are not excluded by
/// counting. Rejection sampling over [`gen_random_biconnected`].
pub fn gen_random_bipartite(n: usize, seed: u64) -> Result<Multigraph> {
    if n < 6 || n % 2 == 1 {
        return Err(Error::InvalidParams(format!("need even n >= 6, got {n}")));
    }
    let m = 3 * n / 2 - 3;
    for attempt in 0..100_000u64 {
        let g = gen_random_biconnected(n, m, seed.wrapping_mul(100_003).wrapping_add(attempt))?;
        if g.bipartition().is_some() {
            return Ok(g);
        }
    }
    Err(Error::InvalidParams(format!("no bipartite sample found for n={n}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spqr::build_spqr;

    #[test]
    fn valid_and_deterministic() {
        for seed in 0..50 {
            let g = gen_random_biconnected(6, 9, seed).unwrap();
            assert_eq!((g.n(), g.m()), (6, 9));
            assert!(g.is_biconnected());
            build_spqr(&g, 0).unwrap().validate().unwrap();
            assert_eq!(g, gen_random_biconnected(6, 9, seed).unwrap());
        }
        let g = gen_random_bipartite(10, 3).unwrap();
        assert_eq!((g.n(), g.m(), g.euler_uniform_k()), (10, 12, Some(6)));
        assert!(g.bipartition().is_some());
    }
}
