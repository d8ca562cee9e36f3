//! Exact independent sets by branch and bound.

use crate::bitset::Bitset;
use crate::graph::{Graph, VertexSet};
use crate::oracle::search::SearchOutcome;

/// A maximum independent set.
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let mut s = Solver::new(g, usize::MAX, u64::MAX);
    s.run();
    s.best.into_iter().collect()
}

pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

/// Searches for an independent set of size `k` within `budget` nodes.
pub fn independent_set_of_size(g: &Graph, k: usize, budget: u64) -> SearchOutcome<VertexSet> {
    if k == 0 {
        return SearchOutcome::Found(VertexSet::new());
    }
    let mut s = Solver::new(g, k, budget);
    s.run();
    if s.best.len() >= k {
        let mut best = s.best;
        best.sort_unstable();
        best.truncate(k);
        SearchOutcome::Found(best.into_iter().collect())
    } else if s.out_of_budget {
        SearchOutcome::Exhausted
    } else {
        SearchOutcome::Absent
    }
}

struct Solver<'a> {
    g: &'a Graph,
    target: usize,
    budget: u64,
    nodes: u64,
    out_of_budget: bool,
    best: Vec<usize>,
}

impl<'a> Solver<'a> {
    fn new(g: &'a Graph, target: usize, budget: u64) -> Self {
        Self {
            g,
            target,
            budget,
            nodes: 0,
            out_of_budget: false,
            best: Vec::new(),
        }
    }

    fn run(&mut self) {
        let mut cur = Vec::new();
        self.branch(Bitset::full(self.g.n()), &mut cur);
    }

    fn done(&self) -> bool {
        self.best.len() >= self.target || self.out_of_budget
    }

    fn branch(&mut self, mut cand: Bitset, cur: &mut Vec<usize>) {
        if self.done() {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.out_of_budget = true;
            return;
        }
        let base = cur.len();
        // take vertices of candidate-degree <= 1: some maximum set contains them
        loop {
            let mut forced = None;
            for v in cand.iter() {
                if cand.intersection_count(self.g.row(v)) <= 1 {
                    forced = Some(v);
                    break;
                }
            }
            let Some(v) = forced else { break };
            cur.push(v);
            cand.remove(v);
            cand.difference_with(self.g.row(v));
        }
        if cand.is_empty() {
            if cur.len() > self.best.len() {
                self.best = cur.clone();
            }
            cur.truncate(base);
            return;
        }
        if cur.len() + colour_bound(self.g, &cand) <= self.best.len() {
            cur.truncate(base);
            return;
        }
        let v = cand
            .iter()
            .max_by_key(|&v| (cand.intersection_count(self.g.row(v)), std::cmp::Reverse(v)))
            .unwrap();
        let mut with = cand.clone();
        with.remove(v);
        with.difference_with(self.g.row(v));
        cur.push(v);
        self.branch(with, cur);
        cur.pop();
        let mut without = cand;
        without.remove(v);
        self.branch(without, cur);
        cur.truncate(base);
    }
}

/// Upper bound on alpha(G[cand]) from a greedy clique cover.
fn colour_bound(g: &Graph, cand: &Bitset) -> usize {
    let mut left = cand.clone();
    let mut cliques = 0;
    while let Some(v) = left.first() {
        left.remove(v);
        let mut common = left.clone();
        common.intersect_with(g.row(v));
        while let Some(w) = common.first() {
            left.remove(w);
            common.remove(w);
            common.intersect_with(g.row(w));
        }
        cliques += 1;
    }
    cliques
}
