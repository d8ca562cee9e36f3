//! Greedy completion of partial embeddings into the complement.

use crate::bitset::Bitset;
use crate::embedding::{check_partial, Embedding, Mode};
use crate::error::{Error, Result};
use crate::graph::{greedy_independent_set, Graph, VertexSet};

/// Partial map from pattern vertices to host vertices.
pub type PartialMap = Vec<Option<usize>>;

/// Vertices of `f` sorted by (degree descending, id ascending).
pub fn degree_order(f: &Graph) -> Vec<usize> {
    f.by_degree_desc()
}

/// The `k` highest-degree vertices of `f` among `within` (ties by id).
pub fn top_k(f: &Graph, within: &[usize], k: usize) -> Vec<usize> {
    let mut vs = within.to_vec();
    vs.sort_by_key(|&v| (std::cmp::Reverse(f.degree(v)), v));
    vs.truncate(k);
    vs
}

/// Whether `chosen ⊆ within` consists of highest-degree vertices: no vertex
/// outside it has larger degree than a vertex inside.
fn is_top_set(f: &Graph, within: &[usize], chosen: &[usize]) -> bool {
    let min_in = chosen.iter().map(|&v| f.degree(v)).min();
    let max_out = within
        .iter()
        .filter(|v| !chosen.contains(v))
        .map(|&v| f.degree(v))
        .max();
    match (min_in, max_out) {
        (Some(a), Some(b)) => a >= b,
        _ => true,
    }
}

/// `W = {v : d_G(v) <= 2 d(G)}` as a bitset (`d·N <= 4e` in integers).
pub fn low_degree_set(g: &Graph) -> Bitset {
    let n = g.n() as u128;
    let e = g.edge_count() as u128;
    Bitset::from_iter(g.n(), (0..g.n()).filter(|&v| g.degree(v) as u128 * n <= 2 * e))
}

/// Integer form of the greedy-embedding condition
/// `N >= 4m/(k+1) · max(maxAnchor, 2d) + 2v(F)` with `d = 2e/N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GreedyCondition {
    pub host_order: u64,
    pub host_edges: u64,
    pub pattern_order: u64,
    pub pattern_edges: u64,
    pub k: u64,
    /// Largest host degree among anchor images (0 when there are none).
    pub max_anchor_degree: u64,
}

impl GreedyCondition {
    pub fn holds(&self) -> bool {
        let n = self.host_order as u128;
        let k1 = self.k as u128 + 1;
        let big = (self.max_anchor_degree as u128 * n).max(4 * self.host_edges as u128);
        n * k1 * n >= 4 * self.pattern_edges as u128 * big + 2 * self.pattern_order as u128 * k1 * n
    }
}

/// Anchor vertices of a partial map, in pattern id order.
fn anchors(partial: &[Option<usize>]) -> Vec<usize> {
    (0..partial.len()).filter(|&x| partial[x].is_some()).collect()
}

fn max_image_degree(g: &Graph, partial: &[Option<usize>], xs: &[usize]) -> u64 {
    xs.iter()
        .filter_map(|&x| partial[x])
        .map(|v| g.degree(v) as u64)
        .max()
        .unwrap_or(0)
}

/// Extends `partial` (an embedding of `F[A]` into the complement of `G`,
/// `A` a set of highest-degree vertices) to all of `F`, when the greedy
/// condition holds.
pub fn greedy_extend(f: &Graph, partial: &[Option<usize>], g: &Graph) -> Result<Embedding> {
    check_partial(partial, Mode::Complement, f, g).map_err(|e| Error::Precondition(format!("anchor map: {e}")))?;
    let a = anchors(partial);
    let all: Vec<usize> = (0..f.n()).collect();
    if !is_top_set(f, &all, &a) {
        return Err(Error::Precondition(
            "anchors are not highest-degree pattern vertices".into(),
        ));
    }
    let cond = GreedyCondition {
        host_order: g.n() as u64,
        host_edges: g.edge_count() as u64,
        pattern_order: f.n() as u64,
        pattern_edges: f.edge_count() as u64,
        k: a.len() as u64,
        max_anchor_degree: max_image_degree(g, partial, &a),
    };
    if a.len() < f.n() && !cond.holds() {
        return Err(Error::Precondition(format!("greedy condition fails: {cond:?}")));
    }
    try_greedy_extend(f, partial, g).ok_or_else(|| Error::Invariant("greedy extension ran out of candidates".into()))
}

/// Greedy extension without the numeric check. Places unmapped pattern
/// vertices in (degree desc, id) order on the lowest valid id, preferring
/// the low-degree set `W`.
pub fn try_greedy_extend(f: &Graph, partial: &[Option<usize>], g: &Graph) -> Option<Embedding> {
    let w = low_degree_set(g);
    let order: Vec<usize> = degree_order(f).into_iter().filter(|&x| partial[x].is_none()).collect();
    let map = place_in_order(f, partial.to_vec(), g, &order, Some(&w), true)?;
    into_embedding(map)
}

fn into_embedding(map: PartialMap) -> Option<Embedding> {
    let full: Vec<usize> = map.into_iter().collect::<Option<Vec<_>>>()?;
    Some(Embedding::complement(full))
}

/// Places `order` one by one; each vertex avoids used vertices and
/// G-neighbours of images of its mapped F-neighbours. Candidates come from
/// `pool` first and, if `spill`, from the rest of the host.
fn place_in_order(
    f: &Graph,
    mut map: PartialMap,
    g: &Graph,
    order: &[usize],
    pool: Option<&Bitset>,
    spill: bool,
) -> Option<PartialMap> {
    let mut used = Bitset::new(g.n());
    for v in map.iter().flatten() {
        used.insert(*v);
    }
    for &x in order {
        let mut blocked = used.clone();
        for y in f.neighbors(x) {
            if let Some(v) = map[y] {
                blocked.union_with(g.row(v));
            }
        }
        let mut pick = None;
        if let Some(p) = pool {
            let mut c = p.clone();
            c.difference_with(blocked.words());
            pick = c.first();
        }
        if pick.is_none() && (spill || pool.is_none()) {
            let mut c = Bitset::full(g.n());
            c.difference_with(blocked.words());
            pick = c.first();
        }
        let v = pick?;
        map[x] = Some(v);
        used.insert(v);
    }
    Some(map)
}

/// Embeds `F` into the complement of `G` when
/// `d(G) <= sqrt((N² − 2N·v(F)) / (48 e(F)))`.
pub fn embed_by_degeneracy(f: &Graph, g: &Graph) -> Result<Embedding> {
    if !degeneracy_condition(f, g) {
        return Err(Error::Precondition(format!(
            "average degree {:.3} too large for N = {}, v(F) = {}, e(F) = {}",
            g.average_degree(),
            g.n(),
            f.n(),
            f.edge_count()
        )));
    }
    try_embed_by_degeneracy(f, g).ok_or_else(|| Error::Invariant("degeneracy embedding failed".into()))
}

/// `192 m e² <= N² (N² − 2N v)` with a non-negative right side; for
/// edgeless `F` only `N >= v(F)` is needed.
pub fn degeneracy_condition(f: &Graph, g: &Graph) -> bool {
    let n = g.n() as i128;
    let v = f.n() as i128;
    let m = f.edge_count() as i128;
    let e = g.edge_count() as i128;
    if m == 0 {
        return n >= v;
    }
    let rhs = n * n - 2 * n * v;
    rhs >= 0 && 192 * m * e * e <= n * n * rhs
}

/// The degeneracy embedding without its numeric check: an independent set
/// of `G[W]` hosts the top-degree pattern vertices, the rest is greedy.
pub fn try_embed_by_degeneracy(f: &Graph, g: &Graph) -> Option<Embedding> {
    if f.n() > g.n() {
        return None;
    }
    let w = low_degree_set(g);
    let wv: Vec<usize> = w.to_vec();
    let sub = g.induced_unchecked(&wv);
    let is: VertexSet = sub.lift_set(&greedy_independent_set(&sub.graph));
    let all: Vec<usize> = (0..f.n()).collect();
    let a = top_k(f, &all, is.len().min(f.n()));
    let mut partial: PartialMap = vec![None; f.n()];
    for (x, &v) in a.iter().zip(is.iter()) {
        partial[*x] = Some(v);
    }
    try_greedy_extend(f, &partial, g)
}

/// Bipartite pattern with a fixed side assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartitePattern {
    graph: Graph,
    a: VertexSet,
    b: VertexSet,
}

impl BipartitePattern {
    /// Validates that `a`, `b` partition the vertices and every edge
    /// crosses.
    pub fn with_sides(graph: Graph, a: VertexSet, b: VertexSet) -> Result<Self> {
        if a.len() + b.len() != graph.n()
            || a.iter().chain(b.iter()).any(|&v| v >= graph.n())
            || a.iter().any(|&v| b.contains(v))
        {
            return Err(Error::Precondition("sides must partition V(F)".into()));
        }
        if graph.edges().iter().any(|&(u, v)| a.contains(u) == a.contains(v)) {
            return Err(Error::Precondition("an edge lies inside one side".into()));
        }
        Ok(Self { graph, a, b })
    }

    /// Two-colours each component by BFS (lowest id on side A).
    pub fn from_graph(graph: Graph) -> Result<Self> {
        let n = graph.n();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in graph.neighbors(u) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return Err(Error::Precondition("pattern is not bipartite".into()));
                    }
                }
            }
        }
        let a = (0..n).filter(|&v| side[v] == 0).collect();
        let b = (0..n).filter(|&v| side[v] == 1).collect();
        Ok(Self { graph, a, b })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn side_a(&self) -> &VertexSet {
        &self.a
    }

    pub fn side_b(&self) -> &VertexSet {
        &self.b
    }

    pub fn has_isolated_vertices(&self) -> bool {
        (0..self.graph.n()).any(|v| self.graph.degree(v) == 0)
    }

    /// The same pattern with the sides exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            graph: self.graph.clone(),
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }
}

/// Which numeric item of the bipartite greedy lemma failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BipartiteItem {
    One,
    Two,
}

/// Evaluates both items for a given anchor map; returns the first failing
/// item, if any.
pub fn bipartite_items(f: &BipartitePattern, partial: &[Option<usize>], g: &Graph) -> Option<BipartiteItem> {
    let fg = &f.graph;
    let n = g.n() as u128;
    let e = g.edge_count() as u128;
    let m = fg.edge_count() as u128;
    let v = fg.n() as u128;
    let ap: Vec<usize> = f.a.iter().copied().filter(|&x| partial[x].is_some()).collect();
    let bp: Vec<usize> = f.b.iter().copied().filter(|&x| partial[x].is_some()).collect();
    let (k, l) = (ap.len() as u128, bp.len() as u128);
    let max_a = max_image_degree(g, partial, &ap) as u128;
    let max_b = max_image_degree(g, partial, &bp) as u128;
    // Item 1: N(ℓ+1) >= 2m·maxA + 2v(ℓ+1)
    if bp.len() < f.b.len() && n * (l + 1) < 2 * m * max_a + 2 * v * (l + 1) {
        return Some(BipartiteItem::One);
    }
    // Item 2: N(k+1)N >= m·max(maxB·N, 4e) + v(k+1)N
    if ap.len() < f.a.len() && n * (k + 1) * n < m * (max_b * n).max(4 * e) + v * (k + 1) * n {
        return Some(BipartiteItem::Two);
    }
    None
}

/// Completes an embedding of `F[A' ∪ B']` into the complement of `G`:
/// first `B ∖ B'` inside `W`, then `A ∖ A'` anywhere.
pub fn bipartite_greedy_extend(f: &BipartitePattern, partial: &[Option<usize>], g: &Graph) -> Result<Embedding> {
    check_partial(partial, Mode::Complement, &f.graph, g)
        .map_err(|e| Error::Precondition(format!("anchor map: {e}")))?;
    for side in [&f.a, &f.b] {
        let chosen: Vec<usize> = side.iter().copied().filter(|&x| partial[x].is_some()).collect();
        if !is_top_set(&f.graph, side.as_slice(), &chosen) {
            return Err(Error::Precondition(
                "anchors are not highest-degree vertices of their side".into(),
            ));
        }
    }
    if let Some(item) = bipartite_items(f, partial, g) {
        return Err(Error::Precondition(format!(
            "bipartite greedy condition, item {}, fails",
            match item {
                BipartiteItem::One => 1,
                BipartiteItem::Two => 2,
            }
        )));
    }
    try_bipartite_greedy_extend(f, partial, g)
        .ok_or_else(|| Error::Invariant("bipartite extension ran out of candidates".into()))
}

/// The two-phase extension without the numeric check.
pub fn try_bipartite_greedy_extend(f: &BipartitePattern, partial: &[Option<usize>], g: &Graph) -> Option<Embedding> {
    let fg = &f.graph;
    let w = low_degree_set(g);
    let by_deg = |side: &VertexSet| -> Vec<usize> {
        let rest: Vec<usize> = side.iter().copied().filter(|&x| partial[x].is_none()).collect();
        top_k(fg, &rest, rest.len())
    };
    let order_b = by_deg(&f.b);
    let order_a = by_deg(&f.a);
    let mid = place_in_order(fg, partial.to_vec(), g, &order_b, Some(&w), true)?;
    into_embedding(place_in_order(fg, mid, g, &order_a, None, true)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns;

    #[test]
    fn full_anchor_is_returned_unchanged() {
        let f = patterns::path(3);
        let g = Graph::new(5);
        let partial = vec![Some(4), Some(2), Some(0)];
        let e = greedy_extend(&f, &partial, &g).unwrap();
        assert_eq!(e.map, vec![4, 2, 0]);
    }

    #[test]
    fn edge_into_empty_host() {
        let f = Graph::complete(2);
        let g = Graph::new(6);
        let e = greedy_extend(&f, &[None, None], &g).unwrap();
        assert!(e.is_valid(&f, &g));
    }

    #[test]
    fn path_into_matching_complement() {
        let f = patterns::path(4);
        let mut g = Graph::new(40);
        for i in 0..20 {
            g.add_edge(2 * i, 2 * i + 1);
        }
        // top-1 vertex of P4 is 1 (degree 2, lowest id)
        let partial = vec![None, Some(0), None, None];
        let e = greedy_extend(&f, &partial, &g).unwrap();
        assert!(e.is_valid(&f, &g));
        assert_eq!(e.map[1], 0);
    }

    #[test]
    fn greedy_rejects_non_top_anchor() {
        let f = patterns::path(4);
        let g = Graph::new(40);
        let partial = vec![Some(0), None, None, None];
        assert!(greedy_extend(&f, &partial, &g).is_err());
    }

    #[test]
    fn degeneracy_examples() {
        let k3 = Graph::complete(3);
        let e = embed_by_degeneracy(&k3, &Graph::new(10)).unwrap();
        assert!(e.is_valid(&k3, &Graph::new(10)));
        let c4 = patterns::cycle(4);
        let c100 = patterns::cycle(100);
        let e = embed_by_degeneracy(&c4, &c100).unwrap();
        assert!(e.is_valid(&c4, &c100));
    }

    #[test]
    fn degeneracy_boundary_is_rejected() {
        // N = 20, v = 3, m = 3: need 576 e² <= 400·280 = 112000, so e <= 13
        let k3 = Graph::complete(3);
        let mut g = Graph::new(20);
        for i in 0..13 {
            g.add_edge(i, i + 1);
        }
        assert!(degeneracy_condition(&k3, &g));
        g.add_edge(15, 16);
        assert!(!degeneracy_condition(&k3, &g));
        assert!(embed_by_degeneracy(&k3, &g).is_err());
    }

    #[test]
    fn bipartite_examples() {
        let f = BipartitePattern::from_graph(patterns::complete_bipartite(2, 2)).unwrap();
        let g = Graph::new(20);
        let e = bipartite_greedy_extend(&f, &[Some(0), None, None, None], &g).unwrap();
        assert!(e.is_valid(f.graph(), &g));

        let star = BipartitePattern::from_graph(patterns::star(3)).unwrap();
        let c50 = patterns::cycle(50);
        let e = bipartite_greedy_extend(&star, &[Some(7), None, None, None], &c50).unwrap();
        assert!(e.is_valid(star.graph(), &c50));
        assert_eq!(e.map[0], 7);
    }

    #[test]
    fn bipartite_item_failure_is_named() {
        let star = BipartitePattern::from_graph(patterns::star(3)).unwrap();
        let c10 = patterns::cycle(10);
        let err = bipartite_greedy_extend(&star, &[Some(0), None, None, None], &c10).unwrap_err();
        assert!(err.to_string().contains("item 1"));
    }
}
