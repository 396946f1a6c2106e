//! Matching, flow and linear-programming solvers used by the decision and
//! approximation code.

pub mod flow;
pub mod lp;
pub mod matching;

pub use flow::{perfect_b_matching, Dinic};
pub use lp::{q, solve_lp, Cmp, LpInstance, LpSolution, Q};
pub use matching::{max_matching, BipartiteInstance};
