//! Random biconnected planar multigraphs and the small-graph corpus.

use faceopt::gadgets::{gen_random_biconnected, gen_random_bipartite, small_corpus};
use faceopt::{build_spqr, NodeKind};

fn main() -> faceopt::Result<()> {
    for seed in 0..5 {
        let g = gen_random_biconnected(7, 11, seed)?;
        let t = build_spqr(&g, 0)?;
        let kinds: Vec<NodeKind> = t.nodes().iter().map(|n| n.kind).filter(|&k| k != NodeKind::Q).collect();
        println!("seed {seed}: {:?}", kinds);
    }
    let g = gen_random_bipartite(10, 0)?;
    println!("bipartite sample: n={} m={} Euler k={:?}", g.n(), g.m(), g.euler_uniform_k());
    for m in 2..=6 {
        println!("graphs with {m} edges: {}", small_corpus(m).iter().filter(|g| g.m() == m).count());
    }
    Ok(())
}
