//! Looks for embeddings in which all faces have the same size.

use faceopt::enumerate::DEFAULT_LIMIT;
use faceopt::samples::{bundle, cube, cycle, k4, paths, subdivided};
use faceopt::uniform::{outer_face_length, recognize_uniform};
use faceopt::{faces, Multigraph};

fn main() -> faceopt::Result<()> {
    let graphs: Vec<(&str, Multigraph)> = vec![
        ("K4", k4()),
        ("cube", cube()),
        ("4-cycle", cycle(4)),
        ("hexagon", cycle(6)),
        ("subdivided K4", subdivided(&k4())),
        ("paths 1,5,1,5", paths(&[1, 5, 1, 5])),
        ("paths 3,3,1,5", paths(&[3, 3, 1, 5])),
        ("bundle of 3", bundle(3)),
        ("4-cycle with chord", Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])),
    ];
    for (name, g) in graphs {
        match recognize_uniform(&g, DEFAULT_LIMIT)? {
            Some((k, rot)) => println!("{name}: {k}-uniform {:?}", faces(&g, &rot)?.size_multiset()),
            None => println!("{name}: none (Euler k = {:?})", g.euler_uniform_k()),
        }
    }
    // a path of two edges with its inner faces of size 6 has outer length 4
    println!("outer length of a 2-path: {}", outer_face_length(3, 2, 6));
    Ok(())
}
