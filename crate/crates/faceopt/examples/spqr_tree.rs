//! Decomposes a graph into its SPQR-tree and prints every node.

use faceopt::samples::{k4, paths};
use faceopt::{build_spqr, NodeKind};

fn main() -> faceopt::Result<()> {
    // an edge plus paths of lengths 2, 2 and 3 between the same two poles
    let g = paths(&[1, 2, 2, 3]);
    for (name, g) in [("edge with three paths", g), ("K4", k4())] {
        let t = build_spqr(&g, 0)?;
        println!("{name}: {} vertices, {} edges, root Q-node {}", g.n(), g.m(), t.root());
        for &i in t.preorder() {
            if t.kind(i) == NodeKind::Q {
                continue;
            }
            let (s, u) = t.poles(i);
            println!(
                "  {:?}-node {i}: {} skeleton edges, poles {}-{}, children {:?}",
                t.kind(i),
                t.node(i).edges.len(),
                g.vertex_id(s),
                g.vertex_id(u),
                t.children(i)
            );
        }
        let mut back: Vec<_> = t.reglue().into_iter().map(|(e, _, _)| e).collect();
        back.sort_unstable();
        assert_eq!(back, (0..g.m()).collect::<Vec<_>>());
    }
    Ok(())
}
