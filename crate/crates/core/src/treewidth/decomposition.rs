//! Exact treewidth and smooth tree decompositions of small patterns.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest pattern accepted by [`treewidth_exact`].
pub const MAX_TREEWIDTH_VERTICES: usize = 16;

fn masks(h: &Graph) -> Result<Vec<u32>> {
    if h.n() > MAX_TREEWIDTH_VERTICES {
        return Err(Error::TooLarge(format!(
            "exact treewidth needs at most {MAX_TREEWIDTH_VERTICES} vertices, got {}",
            h.n()
        )));
    }
    Ok((0..h.n())
        .map(|v| h.row(v).first().copied().unwrap_or(0) as u32)
        .collect())
}

/// Number of vertices outside `s ∪ {v}` reachable from `v` through `s`:
/// the degree of `v` when it is eliminated right after `s`.
fn elimination_degree(adj: &[u32], s: u32, v: usize) -> u32 {
    let mut seen = 1u32 << v;
    let mut out = 0u32;
    let mut stack = vec![v];
    while let Some(u) = stack.pop() {
        let mut nb = adj[u];
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let bit = 1u32 << w;
            if seen & bit != 0 {
                continue;
            }
            seen |= bit;
            if s & bit != 0 {
                stack.push(w);
            } else {
                out |= bit;
            }
        }
    }
    out.count_ones()
}

/// Treewidth and an elimination order attaining it, by dynamic
/// programming over the set of already eliminated vertices.
pub fn optimal_elimination_order(h: &Graph) -> Result<(usize, Vec<usize>)> {
    let adj = masks(h)?;
    let n = h.n();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let size = 1usize << n;
    let mut best = vec![u8::MAX; size];
    let mut last = vec![0u8; size];
    best[0] = 0;
    for s in 1..size as u32 {
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            let w = (best[prev as usize] as u32).max(elimination_degree(&adj, prev, v));
            if (w as u8) < best[s as usize] {
                best[s as usize] = w as u8;
                last[s as usize] = v as u8;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = last[s as usize] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    Ok((best[full as usize] as usize, order))
}

pub fn treewidth_exact(h: &Graph) -> Result<usize> {
    Ok(optimal_elimination_order(h)?.0)
}

/// Bags over the vertices of a pattern, joined by tree edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    /// Sorted bags.
    pub bags: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(1).saturating_sub(1)
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Checks coverage of vertices and edges, that the bag graph is a
    /// tree, and that each vertex's bags form a subtree.
    pub fn validate(&self, h: &Graph) -> std::result::Result<(), String> {
        let m = self.bags.len();
        if m == 0 {
            return if h.n() == 0 { Ok(()) } else { Err("no bags".into()) };
        }
        if self.edges.len() != m - 1 {
            return Err(format!("{} tree edges for {m} bags", self.edges.len()));
        }
        if self.edges.iter().any(|&(a, b)| a >= m || b >= m || a == b) {
            return Err("tree edge out of range".into());
        }
        let adj = self.adjacency();
        let reach = |keep: &dyn Fn(usize) -> bool, start: usize| -> usize {
            let mut seen = vec![false; m];
            seen[start] = true;
            let mut q = VecDeque::from([start]);
            let mut count = 1;
            while let Some(t) = q.pop_front() {
                for &u in &adj[t] {
                    if !seen[u] && keep(u) {
                        seen[u] = true;
                        count += 1;
                        q.push_back(u);
                    }
                }
            }
            count
        };
        if reach(&|_| true, 0) != m {
            return Err("bag graph is disconnected".into());
        }
        for b in &self.bags {
            if b.iter().any(|&v| v >= h.n()) {
                return Err("bag vertex out of range".into());
            }
        }
        for v in 0..h.n() {
            let holding: Vec<usize> = (0..m).filter(|&t| self.bags[t].contains(&v)).collect();
            let Some(&first) = holding.first() else {
                return Err(format!("vertex {v} is in no bag"));
            };
            if reach(&|t| self.bags[t].contains(&v), first) != holding.len() {
                return Err(format!("bags of vertex {v} are not connected"));
            }
        }
        for (u, v) in h.edges() {
            if !self.bags.iter().any(|b| b.contains(&u) && b.contains(&v)) {
                return Err(format!("edge ({u}, {v}) is in no bag"));
            }
        }
        Ok(())
    }

    /// All bags have `r + 1` vertices and adjacent bags share `r`.
    pub fn is_smooth(&self, r: usize) -> bool {
        self.bags.iter().all(|b| b.len() == r + 1)
            && self
                .edges
                .iter()
                .all(|&(a, b)| self.bags[a].iter().filter(|v| self.bags[b].contains(v)).count() == r)
    }

    /// Breadth-first order from bag 0 with each bag's parent.
    pub fn bfs_order(&self) -> Vec<(usize, Option<usize>)> {
        let adj = self.adjacency();
        let m = self.bags.len();
        if m == 0 {
            return Vec::new();
        }
        let mut seen = vec![false; m];
        seen[0] = true;
        let mut out = vec![(0, None)];
        let mut q = VecDeque::from([0]);
        while let Some(t) = q.pop_front() {
            let mut next = adj[t].clone();
            next.sort_unstable();
            for u in next {
                if !seen[u] {
                    seen[u] = true;
                    out.push((u, Some(t)));
                    q.push_back(u);
                }
            }
        }
        out
    }
}

/// Decomposition of width `tw(H)` whose bags all have `tw(H) + 1`
/// vertices, adjacent bags sharing `tw(H)` of them.
///
/// Walks an optimal elimination order backwards: the last `r + 1`
/// vertices form the first bag; each earlier vertex joins its later
/// neighbours in the filled graph, padded to `r` vertices from a bag that
/// contains them.
pub fn smooth_tree_decomposition(h: &Graph) -> Result<TreeDecomposition> {
    let (r, order) = optimal_elimination_order(h)?;
    let n = h.n();
    if n == 0 {
        return Ok(TreeDecomposition {
            bags: Vec::new(),
            edges: Vec::new(),
        });
    }
    if n <= r + 1 {
        return Ok(TreeDecomposition {
            bags: vec![(0..n).collect()],
            edges: Vec::new(),
        });
    }
    // filled graph: eliminating v joins its remaining neighbours
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut filled = h.clone();
    for &v in &order {
        let later: Vec<usize> = filled.neighbors(v).filter(|&u| pos[u] > pos[v]).collect();
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                if !filled.has_edge(a, b) {
                    filled.add_edge(a, b);
                }
            }
        }
    }
    let mut first: Vec<usize> = order[n - r - 1..].to_vec();
    first.sort_unstable();
    let mut bags = vec![first];
    let mut edges = Vec::new();
    for i in (0..n - r - 1).rev() {
        let v = order[i];
        let later: Vec<usize> = filled.neighbors(v).filter(|&u| pos[u] > i).collect();
        let host = bags
            .iter()
            .position(|b| later.iter().all(|u| b.contains(u)))
            .ok_or_else(|| Error::Invariant(format!("no bag holds the later neighbours of {v}")))?;
        let mut shared = later.clone();
        for &u in &bags[host] {
            if shared.len() == r {
                break;
            }
            if !shared.contains(&u) {
                shared.push(u);
            }
        }
        shared.push(v);
        shared.sort_unstable();
        edges.push((host, bags.len()));
        bags.push(shared);
    }
    Ok(TreeDecomposition { bags, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns;

    #[test]
    fn small_values() {
        assert_eq!(treewidth_exact(&patterns::path(6)).unwrap(), 1);
        assert_eq!(treewidth_exact(&patterns::star(5)).unwrap(), 1);
        assert_eq!(treewidth_exact(&patterns::cycle(7)).unwrap(), 2);
        assert_eq!(treewidth_exact(&Graph::complete(4)).unwrap(), 3);
        assert_eq!(treewidth_exact(&patterns::k5_minus_edge()).unwrap(), 3);
        assert_eq!(treewidth_exact(&patterns::petersen()).unwrap(), 4);
        assert_eq!(treewidth_exact(&Graph::new(3)).unwrap(), 0);
        assert!(treewidth_exact(&Graph::new(17)).is_err());
    }

    #[test]
    fn path_decomposition() {
        let h = patterns::path(4);
        let td = smooth_tree_decomposition(&h).unwrap();
        assert_eq!(td.bags.len(), 3);
        assert!(td.bags.iter().all(|b| b.len() == 2));
        assert!(td.validate(&h).is_ok());
        assert!(td.is_smooth(1));
    }

    #[test]
    fn clique_is_one_bag() {
        let td = smooth_tree_decomposition(&Graph::complete(4)).unwrap();
        assert_eq!(td.bags, vec![vec![0, 1, 2, 3]]);
        assert!(td.edges.is_empty());
    }

    #[test]
    fn validator_catches_missing_edge() {
        let h = patterns::cycle(4);
        let td = TreeDecomposition {
            bags: vec![vec![0, 1, 2], vec![0, 2, 3]],
            edges: vec![(0, 1)],
        };
        assert!(td.validate(&h).is_ok());
        let bad = TreeDecomposition {
            bags: vec![vec![0, 1], vec![2, 3]],
            edges: vec![(0, 1)],
        };
        assert!(bad.validate(&h).is_err());
    }
}
