//! Clique counts against independence, and the clique pruning process.

use std::collections::HashMap;

use crate::graph::{cliques, count_cliques, Graph, VertexSet};
use crate::oracle::alpha::independent_set_of_size;
use crate::oracle::search::SearchOutcome;

/// `C_1 = 4`, `C_r = 8(r+1) C_{r-1}`.
pub fn clique_ratio_constant(r: usize) -> u128 {
    (2..=r as u128).fold(4, |c, k| 8 * (k + 1) * c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueRatioReport {
    pub r: usize,
    pub n: usize,
    pub constant: u128,
    pub r_cliques: u64,
    pub larger_cliques: u64,
    /// `N >= C_r n^r` and no independent set of size `n`.
    pub precondition: bool,
    /// `#K_{r+1} · C_r n^r >= N · #K_r`.
    pub holds: bool,
    /// An independent set of size `n`, found when the inequality fails.
    pub independent_set: Option<VertexSet>,
}

/// Evaluates `#K_{r+1}(G) >= N/(C_r n^r) · #K_r(G)` together with its
/// precondition; independence is decided exactly within `budget` nodes.
pub fn clique_ratio_witness(g: &Graph, r: usize, n: usize, budget: u64) -> CliqueRatioReport {
    let big_n = g.n() as u128;
    let constant = clique_ratio_constant(r.max(1));
    let scale = constant.saturating_mul((n as u128).saturating_pow(r as u32));
    let kr = if r == 1 { g.n() as u64 } else { count_cliques(g, r) };
    let kr1 = count_cliques(g, r + 1);
    let holds = (kr1 as u128).saturating_mul(scale) >= big_n * kr as u128;
    let is = independent_set_of_size(g, n, budget);
    let independent = matches!(is, SearchOutcome::Found(_));
    let precondition = big_n >= scale && matches!(is, SearchOutcome::Absent);
    CliqueRatioReport {
        r,
        n,
        constant,
        r_cliques: kr,
        larger_cliques: kr1,
        precondition,
        holds,
        independent_set: if holds || !independent { None } else { is.found() },
    }
}

/// Terminal state of the pruning process.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueFamilyPair {
    pub r: usize,
    pub support: usize,
    /// Surviving `(r+1)`-cliques, sorted.
    pub upper: Vec<Vec<usize>>,
    /// Surviving `r`-cliques, sorted.
    pub lower: Vec<Vec<usize>>,
}

impl CliqueFamilyPair {
    /// For each surviving `r`-clique, the extra vertices of the surviving
    /// `(r+1)`-cliques containing it.
    pub fn extensions(&self) -> HashMap<Vec<usize>, Vec<usize>> {
        let mut map: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for y in &self.upper {
            for skip in 0..y.len() {
                let x: Vec<usize> = y
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                map.entry(x).or_default().push(y[skip]);
            }
        }
        for ext in map.values_mut() {
            ext.sort_unstable();
        }
        map
    }

    /// Every `r`-subset of a surviving `(r+1)`-clique lies in more than
    /// `support` surviving `(r+1)`-cliques.
    pub fn is_terminal(&self) -> bool {
        let ext = self.extensions();
        ext.values().all(|e| e.len() > self.support)
    }
}

fn subsets_dropping_one(y: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0..y.len()).map(move |skip| {
        y.iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &v)| v)
            .collect()
    })
}

/// Starts from all `(r+1)`- and `r`-cliques and repeatedly deletes an
/// `r`-clique lying in at most `support` surviving `(r+1)`-cliques,
/// together with those `(r+1)`-cliques.
pub fn clique_process(g: &Graph, r: usize, support: usize) -> CliqueFamilyPair {
    assert!(r >= 1, "clique_process needs r >= 1");
    let lower_all = cliques(g, r);
    let upper_all = cliques(g, r + 1);
    let id: HashMap<&[usize], usize> = lower_all.iter().enumerate().map(|(i, x)| (x.as_slice(), i)).collect();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); lower_all.len()];
    let mut count = vec![0usize; lower_all.len()];
    let parts: Vec<Vec<usize>> = upper_all
        .iter()
        .enumerate()
        .map(|(yi, y)| {
            subsets_dropping_one(y)
                .map(|x| {
                    let xi = id[x.as_slice()];
                    members[xi].push(yi);
                    count[xi] += 1;
                    xi
                })
                .collect()
        })
        .collect();
    let mut lower_alive = vec![true; lower_all.len()];
    let mut upper_alive = vec![true; upper_all.len()];
    let mut work: Vec<usize> = (0..lower_all.len()).filter(|&x| count[x] <= support).collect();
    work.reverse();
    while let Some(x) = work.pop() {
        if !lower_alive[x] {
            continue;
        }
        lower_alive[x] = false;
        for &y in &members[x] {
            if !upper_alive[y] {
                continue;
            }
            upper_alive[y] = false;
            for &other in &parts[y] {
                count[other] -= 1;
                if lower_alive[other] && count[other] <= support {
                    work.push(other);
                }
            }
        }
    }
    CliqueFamilyPair {
        r,
        support,
        upper: upper_all
            .into_iter()
            .zip(upper_alive)
            .filter_map(|(y, a)| a.then_some(y))
            .collect(),
        lower: lower_all
            .into_iter()
            .zip(lower_alive)
            .filter_map(|(x, a)| a.then_some(x))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants() {
        assert_eq!(clique_ratio_constant(1), 4);
        assert_eq!(clique_ratio_constant(2), 96);
        assert_eq!(clique_ratio_constant(3), 3072);
    }

    #[test]
    fn complete_graph_base_case() {
        for big_n in 8..20 {
            let rep = clique_ratio_witness(&Graph::complete(big_n), 1, 2, 10_000);
            assert!(rep.precondition);
            assert!(rep.holds);
        }
    }

    #[test]
    fn empty_graph_exposes_independent_set() {
        let rep = clique_ratio_witness(&Graph::new(10), 1, 3, 10_000);
        assert!(!rep.holds);
        assert!(!rep.precondition);
        assert_eq!(rep.independent_set.unwrap().len(), 3);
    }

    #[test]
    fn process_examples() {
        let all = clique_process(&Graph::complete(5), 3, 0);
        assert_eq!(all.upper.len(), 5);
        assert!(all.is_terminal());
        let lone = Graph::complete(3).disjoint_union(&Graph::new(4));
        let none = clique_process(&lone, 2, 1);
        assert!(none.upper.is_empty());
        assert!(none.lower.is_empty());
    }
}
