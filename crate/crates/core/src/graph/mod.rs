//! Undirected simple graphs on dense ids `0..n` with bitset adjacency rows.

mod algo;
mod blocks;
pub mod io;

pub use algo::{cliques, count_cliques, greedy_independent_set, triangle_count, triangles_through_edge, two_density};
pub use blocks::{biconnected_components, components, is_connected, two_core};

use std::fmt;

use crate::bitset::{self, Bitset};
use crate::error::GraphError;

/// Default cap on the number of vertices accepted by the parsers.
pub const DEFAULT_VERTEX_LIMIT: usize = 4096;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = bitset::words_for(n);
        Self {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range ids.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Inserts the edge `uv`. Idempotent; panics in debug builds on loops.
    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        bitset::set(self.row_mut(u), v);
        bitset::set(self.row_mut(v), u);
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        bitset::clear(self.row_mut(u), v);
        bitset::clear(self.row_mut(v), u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bitset::test(self.row(u), v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        bitset::count(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> bitset::Ones<'_> {
        bitset::iter(self.row(v))
    }

    pub fn neighbor_set(&self, v: usize) -> Bitset {
        Bitset::from_words(self.n, self.row(v))
    }

    #[inline]
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        bitset::intersection_count(self.row(u), self.row(v))
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> Bitset {
        let mut s = self.neighbor_set(u);
        s.intersect_with(self.row(v));
        s
    }

    pub fn edge_count(&self) -> usize {
        bitset::count(&self.rows) / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Average degree `2e/n` (zero for the null graph).
    pub fn average_degree(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            2.0 * self.edge_count() as f64 / self.n as f64
        }
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Induced subgraph on `set`, with an index map back to this graph.
    pub fn induced(&self, set: &VertexSet) -> Result<InducedSubgraph, GraphError> {
        for &v in set.iter() {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        Ok(self.induced_unchecked(set.as_slice()))
    }

    /// Induced subgraph on an ordered list of distinct in-range vertices.
    /// Local vertex `i` corresponds to `parent[i]`.
    pub fn induced_unchecked(&self, parent: &[usize]) -> InducedSubgraph {
        let mut g = Graph::new(parent.len());
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in parent.iter().enumerate() {
            local[v] = i;
        }
        for (i, &v) in parent.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = local[w];
                if j != usize::MAX && j > i {
                    g.add_edge(i, j);
                }
            }
        }
        InducedSubgraph {
            graph: g,
            parent: parent.to_vec(),
        }
    }

    /// Graph with vertex `v` deleted; the remaining vertices keep their
    /// relative order.
    pub fn remove_vertex(&self, v: usize) -> InducedSubgraph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_unchecked(&keep)
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// Number of edges with one endpoint in `xs` and the other in `ys`.
    pub fn edges_between(&self, xs: &[usize], ys: &[usize]) -> usize {
        let ybits = Bitset::from_iter(self.n, ys.iter().copied());
        xs.iter().map(|&x| ybits.intersection_count(self.row(x))).sum()
    }

    /// Vertex ids sorted by (degree descending, id ascending).
    pub fn by_degree_desc(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        order
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Sorted, duplicate-free list of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn range(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn truncate(&mut self, len: usize) {
        self.0.truncate(len);
    }

    pub fn to_bitset(&self, n: usize) -> Bitset {
        Bitset::from_iter(n, self.0.iter().copied())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl From<&Bitset> for VertexSet {
    fn from(b: &Bitset) -> Self {
        Self(b.to_vec())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// An induced subgraph together with the map from its local ids to the
/// parent graph's ids.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub parent: Vec<usize>,
}

impl InducedSubgraph {
    #[inline]
    pub fn lift(&self, v: usize) -> usize {
        self.parent[v]
    }

    pub fn lift_all(&self, vs: &[usize]) -> Vec<usize> {
        vs.iter().map(|&v| self.parent[v]).collect()
    }

    pub fn lift_set(&self, vs: &VertexSet) -> VertexSet {
        vs.iter().map(|&v| self.parent[v]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns;

    #[test]
    fn complement_of_triangle_is_empty() {
        let c = Graph::complete(3).complement();
        assert_eq!(c.edge_count(), 0);
        assert_eq!(c.n(), 3);
    }

    #[test]
    fn complement_of_c5_is_c5() {
        let c5 = patterns::cycle(5);
        let comp = c5.complement();
        // isomorphism by trying all 5! relabelings
        let found = crate::oracle::canon::permutations(5).any(|p| c5.permute(&p) == comp);
        assert!(found);
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = Graph::complete(4);
        let s = k4.induced(&VertexSet::from(vec![0, 2, 3])).unwrap();
        assert_eq!(s.graph, Graph::complete(3));
        assert_eq!(s.parent, vec![0, 2, 3]);

        let c6 = patterns::cycle(6);
        let p = c6.induced(&VertexSet::from(vec![0, 1, 2])).unwrap();
        assert_eq!(p.graph, patterns::path(3));

        let pet = patterns::petersen();
        let nb: VertexSet = pet.neighbors(0).collect();
        let sub = pet.induced(&nb).unwrap();
        assert_eq!(sub.graph.n(), 3);
        assert_eq!(sub.graph.edge_count(), 0);
    }

    #[test]
    fn induced_rejects_out_of_range() {
        let g = Graph::new(3);
        assert!(matches!(
            g.induced(&VertexSet::from(vec![0, 5])),
            Err(GraphError::VertexOutOfRange { vertex: 5, n: 3 })
        ));
    }

    #[test]
    fn from_edges_rejects_loops_and_duplicates() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        let g = patterns::petersen();
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }
}
