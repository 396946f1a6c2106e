use super::{EdgeRole, GadgetGraph};
use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Poles 0 and 1 joined by a single edge and a path of length `d`.
pub fn gen_parallel_edge(d: usize) -> Result<GadgetGraph> {
    if !(2..=3).contains(&d) {
        return Err(Error::InvalidParams(format!("path length must be 2 or 3, got {d}")));
    }
    let g = crate::samples::paths(&[1, d]);
    let m = g.m();
    Ok(GadgetGraph { graph: g, roles: vec![EdgeRole::Gadget; m], poles: Some((0, 1)) })
}

/// A wheel with a rim of `d` vertices whose spokes are subdivided so that
/// every inner face has `k` edges. The poles are the rim vertices 0 and 1.
pub fn gen_wheel_edge(d: usize, k: u32) -> Result<GadgetGraph> {
    if k % 2 == 0 {
        return Err(Error::InvalidParity(k));
    }
    if k < 7 || !(3..=5).contains(&d) {
        return Err(Error::InvalidParams(format!("need d in 3..=5 and odd k >= 7, got d={d}, k={k}")));
    }
    // inner face: rim edge plus two spokes of length (k-1)/2
    let spoke = (k as usize - 1) / 2;
    let hub = d;
    let mut n = d + 1;
    let mut edges: Vec<(usize, usize)> = (0..d).map(|i| (i, (i + 1) % d)).collect();
    for i in 0..d {
        let mut at = i;
        for _ in 1..spoke {
            edges.push((at, n));
            at = n;
            n += 1;
        }
        edges.push((at, hub));
    }
    let g = Multigraph::from_edges(n, &edges);
    let m = g.m();
    Ok(GadgetGraph { graph: g, roles: vec![EdgeRole::Gadget; m], poles: Some((0, 1)) })
}
