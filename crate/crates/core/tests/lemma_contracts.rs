mod common;

use common::Contract;
use num_rational::Ratio;
use proptest::prelude::*;
use ramsey_core::lemmas::{empty_bipartite_split, regularize};
use ramsey_core::oracle::instances::gnp;
use ramsey_core::{Error, Graph, VertexSet};

/// Graph on `X ∪ Y` (`X = 0..a`, `Y = a..a+b`) whose cross edges are the
/// set bits of `mask`.
fn cross_graph(a: usize, b: usize, mask: u64) -> Graph {
    let mut g = Graph::new(a + b);
    for i in 0..a * b {
        if mask >> i & 1 == 1 {
            g.add_edge(i / b, a + i % b);
        }
    }
    g
}

#[test]
fn split_contract_exhaustive_small() {
    for a in 1..=3 {
        for b in 1..=3 {
            let x: VertexSet = (0..a).collect();
            let y: VertexSet = (a..a + b).collect();
            for mask in 0..1u64 << (a * b) {
                let g = cross_graph(a, b, mask);
                for r in 1..=3usize {
                    let e = mask.count_ones() as usize;
                    match empty_bipartite_split(&x, &y, &g, Ratio::from_integer(r as i64)) {
                        Ok((xp, yp)) => {
                            assert!(e <= r * b);
                            common::check_split(&g, &x, &y, r, &xp, &yp).unwrap();
                        }
                        Err(Error::Precondition(_)) => assert!(e > r * b),
                        Err(other) => panic!("{a}x{b} mask {mask:b} r {r}: {other}"),
                    }
                }
            }
        }
    }
}

#[test]
fn split_rejects_nonpositive_ratio() {
    let g = Graph::new(4);
    let x: VertexSet = [0, 1].into_iter().collect();
    let y: VertexSet = [2, 3].into_iter().collect();
    assert!(empty_bipartite_split(&x, &y, &g, Ratio::from_integer(0)).is_err());
}

#[test]
fn regularize_conclusions() {
    for seed in 0..60u64 {
        let n = 12 + (seed * 7 % 120) as usize;
        let g = gnp(n, 0.05 + (seed % 9) as f64 * 0.1, seed);
        let reg = regularize(&g).unwrap();
        common::check_regularized(&g, &reg).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
    }
    assert!(regularize(&Graph::new(11)).is_err());
}

fn tally(case: fn(u64) -> Contract, seeds: std::ops::Range<u64>) -> usize {
    let mut held = 0;
    for seed in seeds {
        match case(seed) {
            Contract::Held => held += 1,
            Contract::Skipped => {}
            Contract::Violated(why) => panic!("seed {seed}: {why}"),
        }
    }
    held
}

#[test]
fn greedy_completion_never_fails() {
    assert!(tally(common::greedy_case, 0..400) > 100);
}

#[test]
fn bipartite_completion_never_fails() {
    assert!(tally(common::bipartite_case, 0..400) > 100);
}

#[test]
fn degeneracy_embedding_never_fails() {
    assert!(tally(common::degeneracy_case, 0..400) > 100);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn split_contract_random(a in 1usize..7, b in 1usize..7, mask in any::<u64>(), r in 1usize..4) {
        let g = cross_graph(a, b, mask & ((1u64 << (a * b)) - 1));
        let x: VertexSet = (0..a).collect();
        let y: VertexSet = (a..a + b).collect();
        if let Ok((xp, yp)) = empty_bipartite_split(&x, &y, &g, Ratio::from_integer(r as i64)) {
            prop_assert!(common::check_split(&g, &x, &y, r, &xp, &yp).is_ok());
        } else {
            prop_assert!(g.edge_count() > r * b);
        }
    }

    #[test]
    fn regularize_random(n in 12usize..120, p in 0.0f64..1.0, seed in 0u64..10_000) {
        let g = gnp(n, p, seed);
        let reg = regularize(&g).unwrap();
        prop_assert!(common::check_regularized(&g, &reg).is_ok());
    }
}
