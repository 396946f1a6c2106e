//! Polynomial deciders and the approximation against exhaustive search.

use faceopt::approx::approx_min_max_face;
use faceopt::enumerate::{exact_min_max_face, DEFAULT_LIMIT};
use faceopt::gadgets::gen_random_biconnected;
use faceopt::minmax::{decide_minmax3, decide_minmax4};
use faceopt::{faces, Multigraph};

fn corpus() -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 2..=9 {
        for m in n..=12 {
            for seed in 0..6 {
                out.push(gen_random_biconnected(n, m, seed * 31 + m as u64).unwrap());
            }
        }
    }
    out
}

#[test]
fn deciders_agree_with_enumeration() {
    for g in corpus() {
        let Ok((best, _)) = exact_min_max_face(&g, DEFAULT_LIMIT) else { continue };
        for (k, found) in [(3, decide_minmax3(&g).unwrap()), (4, decide_minmax4(&g).unwrap())] {
            assert_eq!(found.is_some(), best <= k, "k={k} best={best} {:?}", g.edge_ends());
            if let Some(rot) = found {
                assert!(faces(&g, &rot).unwrap().max_face() <= k);
            }
        }
    }
}

#[test]
fn approximation_within_factor() {
    for g in corpus() {
        let Ok((best, _)) = exact_min_max_face(&g, DEFAULT_LIMIT) else { continue };
        let (rot, value) = approx_min_max_face(&g).unwrap();
        assert_eq!(faces(&g, &rot).unwrap().max_face(), value);
        assert!(value >= best);
        assert!(value <= 6 * best, "{value} vs {best} {:?}", g.edge_ends());
    }
}
