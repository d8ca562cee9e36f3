//! Exact backtracking subgraph search.

use crate::bitset::Bitset;
use crate::embedding::{Embedding, Mode};
use crate::graph::Graph;

/// Result of a search that may run out of budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    Absent,
    Exhausted,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }
}

/// Options for [`find_embedding`].
#[derive(Clone, Debug, Default)]
pub struct SearchSpec<'a> {
    /// Pattern vertices with prescribed images.
    pub pinned: &'a [(usize, usize)],
    /// Restricts images of unpinned vertices to this host subset.
    pub allowed: Option<&'a Bitset>,
    /// Maximum number of search nodes; `None` means unbounded.
    pub budget: Option<u64>,
}

/// Exact search for a copy of `h` in `g` (`Host`) or in its complement
/// (`Complement`). Absence is exact unless the budget runs out.
pub fn find_embedding(h: &Graph, g: &Graph, mode: Mode, spec: &SearchSpec<'_>) -> SearchOutcome<Embedding> {
    let comp;
    let host = match mode {
        Mode::Host => g,
        Mode::Complement => {
            comp = g.complement();
            &comp
        }
    };
    let k = h.n();
    if k > host.n() {
        return SearchOutcome::Absent;
    }
    let mut map = vec![usize::MAX; k];
    let mut used = Bitset::new(host.n());
    for &(x, v) in spec.pinned {
        if x >= k || v >= host.n() || used.contains(v) || map[x] != usize::MAX {
            return SearchOutcome::Absent;
        }
        map[x] = v;
        used.insert(v);
    }
    for &(x, _) in spec.pinned {
        for y in h.neighbors(x) {
            if map[y] != usize::MAX && !host.has_edge(map[x], map[y]) {
                return SearchOutcome::Absent;
            }
        }
    }
    let order = search_order(h, &map);
    let host_deg = host.degrees();
    let mut st = State {
        h,
        host,
        host_deg: &host_deg,
        order: &order,
        map,
        used,
        allowed: spec.allowed,
        nodes: 0,
        budget: spec.budget.unwrap_or(u64::MAX),
    };
    match st.extend(0) {
        Some(true) => SearchOutcome::Found(Embedding::new(st.map, mode)),
        Some(false) => SearchOutcome::Absent,
        None => SearchOutcome::Exhausted,
    }
}

/// Unbounded exact host-mode search.
pub fn subgraph_find(g: &Graph, h: &Graph) -> Option<Embedding> {
    find_embedding(h, g, Mode::Host, &SearchSpec::default()).found()
}

/// Budgeted host-mode search.
pub fn subgraph_find_budget(g: &Graph, h: &Graph, budget: u64) -> SearchOutcome<Embedding> {
    find_embedding(
        h,
        g,
        Mode::Host,
        &SearchSpec {
            budget: Some(budget),
            ..SearchSpec::default()
        },
    )
}

/// Unpinned pattern vertices ordered greedily: next is the one with most
/// already-ordered (or pinned) neighbours, then highest degree, then id.
fn search_order(h: &Graph, map: &[usize]) -> Vec<usize> {
    let k = h.n();
    let mut placed: Vec<bool> = map.iter().map(|&v| v != usize::MAX).collect();
    let mut order = Vec::with_capacity(k);
    loop {
        let next = (0..k).filter(|&x| !placed[x]).max_by_key(|&x| {
            let back = h.neighbors(x).filter(|&y| placed[y]).count();
            (back, h.degree(x), std::cmp::Reverse(x))
        });
        let Some(x) = next else { break };
        placed[x] = true;
        order.push(x);
    }
    order
}

struct State<'a> {
    h: &'a Graph,
    host: &'a Graph,
    host_deg: &'a [usize],
    order: &'a [usize],
    map: Vec<usize>,
    used: Bitset,
    allowed: Option<&'a Bitset>,
    nodes: u64,
    budget: u64,
}

impl State<'_> {
    /// `Some(true)` found, `Some(false)` exhausted subtree, `None` budget.
    fn extend(&mut self, depth: usize) -> Option<bool> {
        if depth == self.order.len() {
            return Some(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let x = self.order[depth];
        let mut cand = match self.allowed {
            Some(a) => a.clone(),
            None => Bitset::full(self.host.n()),
        };
        cand.difference_with(self.used.words());
        for y in self.h.neighbors(x) {
            if self.map[y] != usize::MAX {
                cand.intersect_with(self.host.row(self.map[y]));
            }
        }
        let need = self.h.degree(x);
        for v in cand.iter() {
            if self.host_deg[v] < need {
                continue;
            }
            self.map[x] = v;
            self.used.insert(v);
            let r = self.extend(depth + 1);
            if r != Some(false) {
                return r;
            }
            self.used.remove(v);
            self.map[x] = usize::MAX;
        }
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::canon::permutations;
    use crate::patterns;
    use proptest::prelude::*;

    /// All injective maps by brute force.
    fn naive(h: &Graph, g: &Graph) -> bool {
        let k = h.n();
        let n = g.n();
        if k > n {
            return false;
        }
        let mut chosen = vec![0usize; k];
        fn rec(i: usize, chosen: &mut Vec<usize>, h: &Graph, g: &Graph) -> bool {
            if i == chosen.len() {
                return h.edges().iter().all(|&(a, b)| g.has_edge(chosen[a], chosen[b]));
            }
            for v in 0..g.n() {
                if chosen[..i].contains(&v) {
                    continue;
                }
                chosen[i] = v;
                if rec(i + 1, chosen, h, g) {
                    return true;
                }
            }
            false
        }
        rec(0, &mut chosen, h, g)
    }

    #[test]
    fn triangle_not_in_petersen() {
        assert!(subgraph_find(&patterns::petersen(), &Graph::complete(3)).is_none());
    }

    #[test]
    fn k4star_in_wheel() {
        let w = patterns::wheel(4);
        let e = subgraph_find(&w, &patterns::k4_star()).unwrap();
        assert!(e.is_valid(&patterns::k4_star(), &w));
        // cross-check with the 5-subset scan over all 5! maps
        let k = patterns::k4_star();
        let any = permutations(5).any(|p| k.edges().iter().all(|&(a, b)| w.has_edge(p[a], p[b])));
        assert!(any);
    }

    #[test]
    fn complete_host_contains_everything() {
        let g = Graph::complete(7);
        for h in [
            patterns::h1(),
            patterns::petersen().induced_unchecked(&[0, 1, 2, 3, 4, 5, 6]).graph,
        ] {
            assert!(subgraph_find(&g, &h).is_some());
        }
    }

    #[test]
    fn pinned_and_complement() {
        let c5 = patterns::cycle(5);
        let p3 = patterns::path(3);
        let spec = SearchSpec {
            pinned: &[(1, 0)],
            ..SearchSpec::default()
        };
        let e = find_embedding(&p3, &c5, Mode::Host, &spec).found().unwrap();
        assert_eq!(e.map[1], 0);
        let e = find_embedding(&p3, &c5, Mode::Complement, &SearchSpec::default())
            .found()
            .unwrap();
        assert!(e.is_valid(&p3, &c5));
        assert_eq!(
            subgraph_find_budget(&Graph::complete(12), &Graph::complete(13), 10),
            SearchOutcome::Absent
        );
    }

    proptest! {
        #[test]
        fn agrees_with_naive(hbits in proptest::collection::vec(any::<bool>(), 10),
                             k in 2usize..=5, seed in any::<u64>(), n in 3usize..=8) {
            let mut h = Graph::new(k);
            let mut i = 0;
            for u in 0..k {
                for v in (u + 1)..k {
                    if hbits[i] { h.add_edge(u, v); }
                    i += 1;
                }
            }
            let g = crate::oracle::instances::gnp(n, 0.5, seed);
            let found = subgraph_find(&g, &h);
            prop_assert_eq!(found.is_some(), naive(&h, &g));
            if let Some(e) = found {
                prop_assert!(e.is_valid(&h, &g));
            }
        }
    }
}
