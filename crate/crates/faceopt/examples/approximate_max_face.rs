//! Runs the 6-approximation for the largest face and compares it with the optimum.

use faceopt::approx::{approx_min_max_face, neat_embeddings};
use faceopt::enumerate::{exact_min_max_face, DEFAULT_LIMIT};
use faceopt::gadgets::gen_random_biconnected;
use faceopt::samples::{cube, subdivided, wheel};

fn main() -> faceopt::Result<()> {
    let mut graphs = vec![("cube".to_string(), cube()), ("subdivided wheel(5)".to_string(), subdivided(&wheel(5)))];
    for seed in 0..4 {
        graphs.push((format!("random seed {seed}"), gen_random_biconnected(8, 12, seed)?));
    }
    for (name, g) in graphs {
        let (_, value) = approx_min_max_face(&g)?;
        let (best, _) = exact_min_max_face(&g, DEFAULT_LIMIT)?;
        println!("{name}: approximation {value}, optimum {best}, ratio {:.2}", value as f64 / best as f64);
        for r in neat_embeddings(&g)?.reports {
            println!("  rigid node {}: LP optimum {}, rounded faces {:?}", r.node, r.optimum, r.shallow);
        }
    }
    Ok(())
}
