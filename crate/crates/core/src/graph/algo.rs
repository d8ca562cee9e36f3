use num_rational::Ratio;

use super::{Graph, VertexSet};
use crate::bitset::{self, Bitset};
use crate::error::{Error, GraphError};

/// Repeatedly takes a minimum-degree vertex (lowest id on ties) of the
/// remaining graph and deletes its closed neighbourhood. The result has size
/// at least `n / (d + 1)` where `d` is the average degree.
pub fn greedy_independent_set(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut alive = Bitset::full(n);
    let mut deg: Vec<usize> = g.degrees();
    let mut out = Vec::new();
    loop {
        let mut best: Option<usize> = None;
        for v in alive.iter() {
            if best.is_none_or(|b| deg[v] < deg[b]) {
                best = Some(v);
                if deg[v] == 0 {
                    break;
                }
            }
        }
        let Some(v) = best else { break };
        out.push(v);
        let mut removed = Bitset::from_words(n, g.row(v));
        removed.intersect_with(alive.words());
        removed.insert(v);
        alive.difference_with(removed.words());
        for u in removed.iter() {
            for w in g.neighbors(u) {
                if alive.contains(w) {
                    deg[w] -= 1;
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Calls `visit` on every `r`-clique (ascending ids, each exactly once).
/// Stops early when `visit` returns `false`.
pub fn for_each_clique<F: FnMut(&[usize]) -> bool>(g: &Graph, r: usize, mut visit: F) {
    if r == 0 {
        visit(&[]);
        return;
    }
    let mut stack = Vec::with_capacity(r);
    let cand = Bitset::full(g.n());
    clique_rec(g, r, &cand, &mut stack, &mut visit);
}

fn clique_rec<F: FnMut(&[usize]) -> bool>(
    g: &Graph,
    r: usize,
    cand: &Bitset,
    stack: &mut Vec<usize>,
    visit: &mut F,
) -> bool {
    for v in cand.iter() {
        stack.push(v);
        if stack.len() == r {
            if !visit(stack) {
                return false;
            }
        } else {
            let mut next = cand.clone();
            next.intersect_with(g.row(v));
            // only higher ids, so each clique appears once
            next.clear_upto(v);
            if next.count() + stack.len() >= r && !clique_rec(g, r, &next, stack, visit) {
                return false;
            }
        }
        stack.pop();
    }
    true
}

/// All `r`-cliques as sorted vertex lists, in lexicographic order.
pub fn cliques(g: &Graph, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_clique(g, r, |c| {
        out.push(c.to_vec());
        true
    });
    out
}

/// Exact number of `r`-cliques.
pub fn count_cliques(g: &Graph, r: usize) -> u64 {
    if r == 0 {
        return 1;
    }
    let cand = Bitset::full(g.n());
    count_rec(g, r, &cand)
}

fn count_rec(g: &Graph, r: usize, cand: &Bitset) -> u64 {
    if r == 1 {
        return cand.count() as u64;
    }
    let mut total = 0;
    for v in cand.iter() {
        let mut next = cand.clone();
        next.intersect_with(g.row(v));
        next.clear_upto(v);
        if next.count() + 1 >= r {
            total += count_rec(g, r - 1, &next);
        }
    }
    total
}

/// `|N(u) ∩ N(v)|` for an edge `uv`.
pub fn triangles_through_edge(g: &Graph, u: usize, v: usize) -> Result<usize, GraphError> {
    if u >= g.n() || v >= g.n() {
        return Err(GraphError::VertexOutOfRange {
            vertex: u.max(v),
            n: g.n(),
        });
    }
    if !g.has_edge(u, v) {
        return Err(GraphError::NotAnEdge(u, v));
    }
    Ok(g.common_neighbor_count(u, v))
}

pub fn triangle_count(g: &Graph) -> u64 {
    let mut t = 0u64;
    for (u, v) in g.edges() {
        t += g.common_neighbor_count(u, v) as u64;
    }
    t / 3
}

/// Largest vertex count accepted by [`two_density`].
pub const TWO_DENSITY_MAX_VERTICES: usize = 20;

/// `m₂(H)`: the maximum of `(e(H') - 1) / (v(H') - 2)` over subgraphs with at
/// least three vertices. Deleting edges never raises the ratio for a fixed
/// vertex set, so induced subgraphs suffice.
pub fn two_density(h: &Graph) -> Result<Ratio<i64>, Error> {
    let n = h.n();
    if n < 3 {
        return Err(Error::Precondition(format!(
            "2-density needs at least 3 vertices, got {n}"
        )));
    }
    if n > TWO_DENSITY_MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "2-density enumerates vertex subsets; {n} > {TWO_DENSITY_MAX_VERTICES}"
        )));
    }
    let rows: Vec<u64> = (0..n).map(|v| h.row(v)[0]).collect();
    let mut best: Option<Ratio<i64>> = None;
    for mask in 0u64..(1u64 << n) {
        let k = mask.count_ones() as i64;
        if k < 3 {
            continue;
        }
        let e: i64 = bitset::iter(&[mask])
            .map(|v| (rows[v] & mask).count_ones() as i64)
            .sum::<i64>()
            / 2;
        let r = Ratio::new(e - 1, k - 2);
        if best.is_none_or(|b| r > b) {
            best = Some(r);
        }
    }
    Ok(best.expect("n >= 3 gives at least one subset"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns;
    use proptest::prelude::*;

    fn alpha_brute(g: &Graph) -> usize {
        let n = g.n();
        (0u32..(1 << n))
            .filter(|&m| {
                let s: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
                g.is_independent(&s)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn greedy_is_examples() {
        assert_eq!(greedy_independent_set(&Graph::new(7)).len(), 7);
        assert_eq!(greedy_independent_set(&Graph::complete(5)).len(), 1);
        let c7 = patterns::cycle(7);
        assert_eq!(alpha_brute(&c7), 3);
        let s = greedy_independent_set(&c7);
        assert!(s.len() >= 3);
        assert!(c7.is_independent(s.as_slice()));
    }

    #[test]
    fn clique_counts() {
        assert_eq!(count_cliques(&Graph::complete(4), 3), 4);
        assert_eq!(count_cliques(&patterns::petersen(), 3), 0);
        assert_eq!(cliques(&Graph::complete(5), 4).len(), 5);
        assert_eq!(count_cliques(&Graph::complete(70), 2), 70 * 69 / 2);
        assert_eq!(count_cliques(&Graph::complete(6), 7), 0);
    }

    #[test]
    fn triangles_through_edges() {
        let k4 = Graph::complete(4);
        assert_eq!(triangles_through_edge(&k4, 0, 1), Ok(2));
        let c5 = patterns::cycle(5);
        assert_eq!(triangles_through_edge(&c5, 0, 1), Ok(0));
        assert_eq!(triangles_through_edge(&c5, 0, 2), Err(GraphError::NotAnEdge(0, 2)));
        // K5 minus edge 0-1: vertex 0 has degree 3; edge 0-2 has common
        // neighbours {3, 4}.
        let mut g = Graph::complete(5);
        g.remove_edge(0, 1);
        let brute = (0..5).filter(|&w| g.has_edge(0, w) && g.has_edge(2, w)).count();
        assert_eq!(brute, 2);
        assert_eq!(triangles_through_edge(&g, 0, 2), Ok(2));
    }

    #[test]
    fn two_density_examples() {
        assert_eq!(two_density(&Graph::complete(4)).unwrap(), Ratio::new(5, 2));
        assert_eq!(two_density(&Graph::complete(3)).unwrap(), Ratio::new(2, 1));
        assert_eq!(two_density(&patterns::cycle(5)).unwrap(), Ratio::new(4, 3));
        assert!(two_density(&Graph::complete(2)).is_err());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::new(n);
                let mut k = 0;
                for u in 0..n {
                    for v in (u + 1)..n {
                        if bits[k] {
                            g.add_edge(u, v);
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn greedy_is_meets_turan_bound(g in arb_graph(40)) {
            let s = greedy_independent_set(&g);
            prop_assert!(g.is_independent(s.as_slice()));
            // |S| >= n/(d+1)  <=>  |S| (2e + n) >= n^2
            let n = g.n();
            prop_assert!(s.len() * (2 * g.edge_count() + n) >= n * n);
        }

        #[test]
        fn clique_count_matches_subsets(g in arb_graph(12), r in 1usize..=5) {
            let n = g.n();
            let naive = (0u32..(1 << n))
                .filter(|m| m.count_ones() as usize == r)
                .filter(|&m| {
                    let s: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
                    g.is_clique(&s)
                })
                .count() as u64;
            prop_assert_eq!(count_cliques(&g, r), naive);
            prop_assert_eq!(cliques(&g, r).len() as u64, naive);
            prop_assert_eq!(count_cliques(&g, 2), g.edge_count() as u64);
        }

        #[test]
        fn complement_is_involution(g in arb_graph(64)) {
            prop_assert_eq!(g.complement().complement(), g);
        }
    }
}
