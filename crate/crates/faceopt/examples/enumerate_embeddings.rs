//! Lists every embedding of a small graph (up to mirror image) with its face sizes.

use faceopt::enumerate::{count_embeddings, enumerate_embeddings, exact_min_max_face, DEFAULT_LIMIT};
use faceopt::samples::paths;
use faceopt::{build_spqr, faces};

fn main() -> faceopt::Result<()> {
    let g = paths(&[1, 2, 2, 3]);
    let t = build_spqr(&g, 0)?;
    println!("{} embeddings", count_embeddings(&t));
    for (n, rot) in enumerate_embeddings(&g, DEFAULT_LIMIT)?.enumerate() {
        println!("  #{n}: face sizes {:?}", faces(&g, &rot)?.size_multiset());
    }
    let (best, _) = exact_min_max_face(&g, DEFAULT_LIMIT)?;
    println!("smallest possible largest face: {best}");
    Ok(())
}
