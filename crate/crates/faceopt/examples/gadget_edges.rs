//! The flippable two-pole gadgets: an edge beside a path, and subdivided wheels.

use faceopt::faces;
use faceopt::enumerate::{enumerate_embeddings, DEFAULT_LIMIT};
use faceopt::gadgets::{gen_parallel_edge, gen_wheel_edge};

fn main() -> faceopt::Result<()> {
    for d in [2, 3] {
        let gg = gen_parallel_edge(d)?;
        let rot = enumerate_embeddings(&gg.graph, DEFAULT_LIMIT)?.next().unwrap();
        println!("(1,{d})-edge: n={} m={} faces {:?}", gg.graph.n(), gg.graph.m(), faces(&gg.graph, &rot)?.size_multiset());
    }
    for d in [3, 4, 5] {
        let gg = gen_wheel_edge(d, 7)?;
        let rot = enumerate_embeddings(&gg.graph, DEFAULT_LIMIT)?.next().unwrap();
        println!("wheel d={d} k=7: n={} m={} faces {:?}", gg.graph.n(), gg.graph.m(), faces(&gg.graph, &rot)?.size_multiset());
    }
    Ok(())
}
