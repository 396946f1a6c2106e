//! Instance generators: small two-pole gadgets, the satisfiability reduction
//! for `k = 5`, random biconnected planar multigraphs, the exhaustive small
//! corpus, and a brute-force satisfiability check.

mod corpus;
mod edges;
mod hardness;
mod random;
mod sat;

pub use corpus::{canonical_form, small_corpus};
pub use edges::{gen_parallel_edge, gen_wheel_edge};
pub use hardness::gen_minmax5_instance;
pub use random::{gen_random_biconnected, gen_random_bipartite};
pub use sat::{sat_oracle, CnfFormula, Lit, SatMode};

use crate::graph::{EdgeIx, Multigraph, VertexIx};

/// What an edge of a generated instance is for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeRole {
    /// Part of a two-pole gadget that stands for one edge.
    Gadget,
    /// Part of the flippable edge deciding variable `var`.
    Variable { var: usize },
    /// Part of the flippable edge carrying an occurrence of a literal.
    Literal { var: usize, positive: bool, clause: usize },
    /// Plain edge on the boundary of a variable triangle.
    VariableCycle { var: usize },
    /// Plain edge on a clause cycle.
    ClauseCycle { clause: usize },
    /// Triangulation edge.
    Filler,
}

#[derive(Clone, Debug)]
pub struct GadgetGraph {
    pub graph: Multigraph,
    pub roles: Vec<EdgeRole>,
    /// The attachment vertices of a two-pole gadget.
    pub poles: Option<(VertexIx, VertexIx)>,
}

impl GadgetGraph {
    pub fn edges_with(&self, pred: impl Fn(&EdgeRole) -> bool) -> Vec<EdgeIx> {
        (0..self.roles.len()).filter(|&e| pred(&self.roles[e])).collect()
    }
}
