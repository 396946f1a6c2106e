//! Builds the graph for a small formula and checks that its largest face can
//! be kept at 5 exactly when the formula is satisfiable.

use faceopt::enumerate::exact_min_max_face;
use faceopt::gadgets::{gen_minmax5_instance, sat_oracle, CnfFormula, EdgeRole, SatMode};

fn main() -> faceopt::Result<()> {
    for text in ["1 2", "1 2; -1 3", "1 2; 1 -2; -1 -3; 3 4; 3 -4"] {
        let phi = CnfFormula::parse(text)?;
        let gg = gen_minmax5_instance(&phi)?;
        let fillers = gg.edges_with(|r| *r == EdgeRole::Filler).len();
        let (best, _) = exact_min_max_face(&gg.graph, 1 << 22)?;
        println!(
            "{phi}: n={} m={} filler edges={fillers}, satisfiable={}, smallest largest face={best}",
            gg.graph.n(),
            gg.graph.m(),
            sat_oracle(&phi, SatMode::ThreeSat)?
        );
    }
    Ok(())
}
