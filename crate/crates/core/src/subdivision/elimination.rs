//! The triangle elimination process splitting `E(G)` into `G+` and `G-`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{triangle_count, Graph};

/// Triangle count above which the process refuses to run.
pub const MAX_TRIANGLES: u64 = 5_000_000;

/// One elimination: the edge and the third vertices of the triangles it
/// took with it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationStep {
    pub edge: (usize, usize),
    pub removed: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationTrace {
    pub c0: usize,
    pub order: Vec<EliminationStep>,
    /// Triangles left at the end, as sorted triples.
    pub surviving: Vec<[usize; 3]>,
    pub plus: Graph,
    /// Eliminated edges followed by edges whose triangles all died
    /// (including triangle-free edges), each group in order.
    pub minus: Vec<(usize, usize)>,
}

impl EliminationTrace {
    pub fn is_plus(&self, u: usize, v: usize) -> bool {
        self.plus.has_edge(u, v)
    }

    pub fn plus_edges(&self) -> Vec<(usize, usize)> {
        self.plus.edges()
    }

    /// Step at which `(u, v)` was eliminated, if it was.
    pub fn step_of(&self, u: usize, v: usize) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        self.order.iter().position(|s| s.edge == e)
    }
}

/// Edge ids in lexicographic order with a lookup by endpoints.
struct EdgeIndex {
    edges: Vec<(usize, usize)>,
    start: Vec<usize>,
}

impl EdgeIndex {
    fn new(g: &Graph) -> Self {
        let edges = g.edges();
        let mut start = vec![0; g.n() + 1];
        for &(u, _) in &edges {
            start[u + 1] += 1;
        }
        for i in 0..g.n() {
            start[i + 1] += start[i];
        }
        Self { edges, start }
    }

    fn id(&self, u: usize, v: usize) -> usize {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        let slice = &self.edges[self.start[u]..self.start[u + 1]];
        self.start[u] + slice.binary_search(&(u, v)).expect("edge present")
    }
}

/// Runs the process: while some edge lies in between 1 and `c0` live
/// triangles, eliminate the lowest such edge (lexicographic order) and
/// kill its live triangles.
pub fn eliminate_triangles(g: &Graph, c0: usize) -> Result<EliminationTrace> {
    if c0 < 1 {
        return Err(Error::Precondition("C0 must be at least 1".into()));
    }
    let t = triangle_count(g);
    if t > MAX_TRIANGLES {
        return Err(Error::TooLarge(format!(
            "{t} triangles exceed the limit of {MAX_TRIANGLES}"
        )));
    }
    let ix = EdgeIndex::new(g);
    let m = ix.edges.len();
    let mut live: Vec<usize> = ix.edges.iter().map(|&(u, v)| g.common_neighbor_count(u, v)).collect();
    let mut dead = vec![false; m];
    let mut cand: BTreeSet<usize> = (0..m).filter(|&i| (1..=c0).contains(&live[i])).collect();
    let mut order = Vec::new();
    while let Some(id) = cand.pop_first() {
        let (u, v) = ix.edges[id];
        let mut removed = Vec::new();
        for w in g.common_neighbors(u, v).iter() {
            let (a, b) = (ix.id(u, w), ix.id(v, w));
            if dead[a] || dead[b] {
                continue;
            }
            removed.push(w);
            for e in [a, b] {
                live[e] -= 1;
                if (1..=c0).contains(&live[e]) {
                    cand.insert(e);
                } else {
                    cand.remove(&e);
                }
            }
        }
        live[id] = 0;
        dead[id] = true;
        order.push(EliminationStep { edge: (u, v), removed });
    }
    let (plus, minus) = partition(g, &ix, &dead);
    let mut surviving = Vec::new();
    for (u, v) in plus.edges() {
        for w in plus.common_neighbors(u, v).iter().filter(|&w| w > v) {
            surviving.push([u, v, w]);
        }
    }
    Ok(EliminationTrace {
        c0,
        order,
        surviving,
        plus,
        minus,
    })
}

/// `G+` is the set of edges on a triangle none of whose edges is dead.
fn partition(g: &Graph, ix: &EdgeIndex, dead: &[bool]) -> (Graph, Vec<(usize, usize)>) {
    let mut plus = Graph::new(g.n());
    let mut dropped = Vec::new();
    for (id, &(u, v)) in ix.edges.iter().enumerate() {
        if dead[id] {
            continue;
        }
        let alive = g
            .common_neighbors(u, v)
            .iter()
            .any(|w| !dead[ix.id(u, w)] && !dead[ix.id(v, w)]);
        if alive {
            plus.add_edge(u, v);
        } else {
            dropped.push((u, v));
        }
    }
    let mut minus: Vec<(usize, usize)> = ix
        .edges
        .iter()
        .enumerate()
        .filter(|&(id, _)| dead[id])
        .map(|(_, &e)| e)
        .collect();
    minus.extend(dropped);
    (plus, minus)
}

/// Re-applies an elimination order to `g` and returns the resulting
/// partition, ignoring the selection rule.
pub fn replay(g: &Graph, order: &[(usize, usize)]) -> (Graph, Vec<(usize, usize)>) {
    let ix = EdgeIndex::new(g);
    let mut dead = vec![false; ix.edges.len()];
    for &(u, v) in order {
        dead[ix.id(u, v)] = true;
    }
    partition(g, &ix, &dead)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns;

    #[test]
    fn triangle_free_is_all_minus() {
        let g = patterns::cycle(7);
        let t = eliminate_triangles(&g, 2).unwrap();
        assert_eq!(t.plus.edge_count(), 0);
        assert_eq!(t.minus.len(), 7);
        assert!(t.surviving.is_empty());
        assert!(t.order.is_empty());
    }

    #[test]
    fn k5_keeps_everything() {
        let g = Graph::complete(5);
        let t = eliminate_triangles(&g, 2).unwrap();
        assert_eq!(t.plus, g);
        assert!(t.minus.is_empty());
        assert_eq!(t.surviving.len(), 10);
    }

    #[test]
    fn lone_triangle_is_eliminated() {
        let g = Graph::complete(3);
        let t = eliminate_triangles(&g, 1).unwrap();
        assert_eq!(t.order.len(), 1);
        assert_eq!(t.order[0].edge, (0, 1));
        assert_eq!(t.order[0].removed, vec![2]);
        assert_eq!(t.minus.len(), 3);
        assert_eq!(t.step_of(1, 0), Some(0));
    }

    #[test]
    fn replay_matches() {
        let g = crate::oracle::instances::gnp(30, 0.4, 3);
        let t = eliminate_triangles(&g, 3).unwrap();
        let order: Vec<(usize, usize)> = t.order.iter().map(|s| s.edge).collect();
        let (plus, minus) = replay(&g, &order);
        assert_eq!(plus, t.plus);
        assert_eq!(minus, t.minus);
    }
}
