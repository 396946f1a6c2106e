//! Shared corpus and brute-force helpers for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use faceopt::enumerate::{count_embeddings, enumerate_embeddings, DEFAULT_LIMIT};
use faceopt::gadgets::{gen_random_biconnected, small_corpus};
use faceopt::layout::EmbeddingType;
use faceopt::{build_spqr, faces, Multigraph, NodeIx, SpqrTree};

/// Random graph number `idx`: 2 to 12 edges, 2 to m vertices. Resampled
/// until the exhaustive search can list its embeddings, adding a vertex
/// every fourth attempt (twelve parallel edges never fit).
pub fn random_graph(idx: u64) -> Multigraph {
    let m = 2 + (idx % 11) as usize;
    let n = 2 + ((idx / 11) as usize) % (m - 1);
    (0..)
        .map(|attempt: u64| {
            let n = m.min(n + attempt as usize / 4);
            gen_random_biconnected(n, m, idx + 1000 * attempt).unwrap()
        })
        .find(|g| count_embeddings(&build_spqr(g, 0).unwrap()) <= DEFAULT_LIMIT as u128)
        .unwrap()
}

pub fn random_graphs(count: u64) -> Vec<Multigraph> {
    (0..count).map(random_graph).collect()
}

/// Every biconnected multigraph with at most 8 edges, then 500 random ones
/// with at most 12.
pub fn corpus() -> Vec<Multigraph> {
    let mut all = small_corpus(8);
    all.extend(random_graphs(500));
    all
}

/// The pertinent graph of `i` closed by an edge between its poles; the new
/// edge is the last one.
pub fn closed_pertinent(t: &SpqrTree, i: NodeIx) -> Multigraph {
    let (sub, (s, u)) = t.pertinent_graph(i);
    let mut ends = sub.edge_ends().to_vec();
    ends.push((s, u));
    Multigraph::from_edges(sub.n(), &ends)
}

/// Boundary lengths of every embedding of the pertinent graph of `i`, read
/// off the two faces beside the closing edge. Also returns, per embedding,
/// the sizes of all other faces.
pub fn pertinent_embeddings(t: &SpqrTree, i: NodeIx) -> Vec<(EmbeddingType, Vec<usize>)> {
    let closed = closed_pertinent(t, i);
    let pole = closed.m() - 1;
    let mut out = Vec::new();
    for rot in enumerate_embeddings(&closed, DEFAULT_LIMIT).unwrap() {
        let report = faces(&closed, &rot).unwrap();
        let (f, g) = (report.face_of[2 * pole], report.face_of[2 * pole + 1]);
        let ty = EmbeddingType::new(report.faces[f].size() - 1, report.faces[g].size() - 1);
        let inner = (0..report.len()).filter(|&h| h != f && h != g).map(|h| report.faces[h].size()).collect();
        out.push((ty, inner));
    }
    out
}

pub fn pertinent_types(t: &SpqrTree, i: NodeIx) -> BTreeSet<EmbeddingType> {
    pertinent_embeddings(t, i).into_iter().map(|(ty, _)| ty).collect()
}

/// Face-size sum and Euler's formula.
pub fn check_embedding(g: &Multigraph, rot: &faceopt::RotationSystem) -> Result<(), String> {
    let report = faces(g, rot).map_err(|e| e.to_string())?;
    let total: usize = report.faces.iter().map(|f| f.size()).sum();
    if total != 2 * g.m() {
        return Err(format!("face sizes sum to {total}, expected {}", 2 * g.m()));
    }
    if g.n() as i64 - g.m() as i64 + report.len() as i64 != 2 {
        return Err("Euler's formula fails".into());
    }
    Ok(())
}
