//! The exact LP solver, bipartite matching and max-flow on toy inputs.

use faceopt::kernels::{max_matching, perfect_b_matching, q, solve_lp, BipartiteInstance, Cmp, Dinic, LpInstance};

fn main() -> faceopt::Result<()> {
    // minimize M subject to 2 + x <= M, 3 + y <= M, x + y = 4, 0 <= x, y <= 3
    let mut lp = LpInstance::new(3);
    lp.objective[0] = q(1);
    lp.bound(1, q(0), Some(q(3)));
    lp.bound(2, q(0), Some(q(3)));
    lp.add_row(vec![(1, q(1)), (0, q(-1))], Cmp::Le, q(-2));
    lp.add_row(vec![(2, q(1)), (0, q(-1))], Cmp::Le, q(-3));
    lp.add_row(vec![(1, q(1)), (2, q(1))], Cmp::Eq, q(4));
    let sol = solve_lp(&lp)?;
    println!("LP optimum {} at x={} y={}", sol.value, sol.x[1], sol.x[2]);

    let mut bip = BipartiteInstance::new(3, 3);
    for (l, r) in [(0, 0), (0, 1), (1, 0), (2, 1), (2, 2)] {
        bip.add_edge(l, r);
    }
    println!("maximum matching {:?}", max_matching(&bip));
    bip.capacity = Some(vec![1, 1, 1]);
    println!("perfect 1-matching {:?}", perfect_b_matching(&bip));

    let mut net = Dinic::new(4);
    for (u, v, c) in [(0, 1, 3), (0, 2, 2), (1, 2, 1), (1, 3, 2), (2, 3, 3)] {
        net.add_arc(u, v, c);
    }
    println!("max flow {}", net.max_flow(0, 3));
    Ok(())
}
