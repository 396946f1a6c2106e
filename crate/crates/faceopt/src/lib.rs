//! Face sizes of planar embeddings of biconnected planar multigraphs.
//!
//! Given a graph, the crate looks for a combinatorial embedding (a rotation
//! system) whose faces are small or all equal:
//!
//! * [`minmax`]: is there an embedding with every face of size at most `k`?
//!   Exact dynamic programs for `k = 3, 4`, exhaustive search above.
//! * [`approx`]: an embedding whose largest face is within a factor 6 of
//!   the best possible.
//! * [`uniform`]: an embedding with all faces of size exactly `k`, in
//!   polynomial time for `k = 3, 4, 6`.
//! * [`enumerate`]: every embedding up to mirror image, used as the oracle.
//! * [`spqr`]: the SPQR-tree every algorithm above works on.
//! * [`gadgets`]: instance generators and a brute-force SAT solver.
//! * [`kernels`]: exact LP, bipartite matching and max-flow.
//! * [`io`] and [`cli`]: JSON formats and the `faceopt` binary.
//!
//! Examples, one per capability:
//!
//! ```text
//! cargo run --example spqr_tree
//! cargo run --example enumerate_embeddings
//! cargo run --example decide_small_faces
//! cargo run --example approximate_max_face
//! cargo run --example uniform_embeddings
//! cargo run --example hardness_instance
//! cargo run --example gadget_edges
//! cargo run --example random_graphs
//! cargo run --example kernels
//! cargo run --example json_io
//! ```
//!
//! ```
//! use faceopt::minmax::decide_minmax;
//! use faceopt::samples::cube;
//!
//! let g = cube();
//! let rot = decide_minmax(&g, 4, 1_000_000).unwrap().unwrap();
//! assert_eq!(faceopt::faces(&g, &rot).unwrap().max_face(), 4);
//! assert!(decide_minmax(&g, 3, 1_000_000).unwrap().is_none());
//! ```

pub mod approx;
pub mod cli;
pub mod embedding;
pub mod enumerate;
pub mod error;
pub mod gadgets;
pub mod io;
pub mod graph;
pub mod kernels;
pub mod layout;
pub mod minmax;
mod planar;
pub mod samples;
pub mod spqr;
pub mod uniform;

pub use embedding::{faces, FaceReport, RotationSystem};
pub use error::{Error, Result};
pub use graph::{Bipartition, EdgeIx, Multigraph, VertexIx};
pub use spqr::{build_spqr, NodeIx, NodeKind, SpqrTree};
