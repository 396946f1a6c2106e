//! Decides whether every face can be kept at size 3 or 4.

use faceopt::minmax::{decide_minmax3, decide_minmax4};
use faceopt::samples::{cube, k4, paths, wheel};
use faceopt::{faces, Multigraph};

fn show(name: &str, g: &Multigraph) -> faceopt::Result<()> {
    for (k, found) in [(3, decide_minmax3(g)?), (4, decide_minmax4(g)?)] {
        match found {
            Some(rot) => println!("{name}: k={k} yes, face sizes {:?}", faces(g, &rot)?.size_multiset()),
            None => println!("{name}: k={k} no"),
        }
    }
    Ok(())
}

fn main() -> faceopt::Result<()> {
    show("K4", &k4())?;
    show("cube", &cube())?;
    show("wheel(6)", &wheel(6))?;
    show("edge with paths 2,2,3", &paths(&[1, 2, 2, 3]))?;
    show("double path", &paths(&[2, 3]))?;
    Ok(())
}
