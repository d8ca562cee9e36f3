//! Gluing embeddings along a shared vertex.

use crate::bitset::Bitset;
use crate::embedding::{Embedding, Mode};
use crate::graph::{biconnected_components, Graph, InducedSubgraph, VertexSet};
use crate::oracle::search::{find_embedding, SearchOutcome, SearchSpec};
use crate::witness::DichotomyResult;

/// What an inner solver reports for one induced subgraph. Maps and
/// escape witnesses use the subgraph's local ids.
#[derive(Clone, Debug)]
pub enum InnerOutcome {
    Found(Vec<usize>),
    /// A witness for the other side of the dichotomy.
    Escape(DichotomyResult),
    Absent,
}

#[derive(Clone, Debug)]
pub enum GlueOutcome {
    /// Embedding of the amalgam (labelled as by [`one_point_amalgam`]).
    Found(Embedding),
    /// Escape witness, lifted to host ids.
    Escape(DichotomyResult),
    Absent(String),
}

/// Glues `h1` and `h2` by identifying `v1` with `v2`. Vertices of `h1`
/// keep their ids; vertices of `h2` other than `v2` follow in order.
/// Returns the amalgam and the positions of `h2`'s vertices in it.
pub fn one_point_amalgam(h1: &Graph, v1: usize, h2: &Graph, v2: usize) -> (Graph, Vec<usize>) {
    let n1 = h1.n();
    let mut pos2 = vec![0; h2.n()];
    let mut next = n1;
    for (x, slot) in pos2.iter_mut().enumerate() {
        if x == v2 {
            *slot = v1;
        } else {
            *slot = next;
            next += 1;
        }
    }
    let mut h = Graph::new(next);
    for (u, v) in h1.edges() {
        h.add_edge(u, v);
    }
    for (u, v) in h2.edges() {
        h.add_edge(pos2[u], pos2[v]);
    }
    (h, pos2)
}

/// Finds the one-point amalgam of `h1` and `h2` in `g`: up to `copies`
/// vertex-disjoint copies of `h1`, then `h2` on their `v1`-images with
/// `v2` on one of them. Falls back to searching `h2` next to each copy,
/// anchored at that copy's `v1`-image, within `budget` search nodes.
#[allow(clippy::too_many_arguments)]
pub fn glue_embedding<S>(
    h1: &Graph,
    v1: usize,
    h2: &Graph,
    v2: usize,
    g: &Graph,
    copies: usize,
    budget: u64,
    mut solver: S,
) -> GlueOutcome
where
    S: FnMut(&Graph, &InducedSubgraph) -> InnerOutcome,
{
    let (amalgam, pos2) = one_point_amalgam(h1, v1, h2, v2);
    let mut free = Bitset::full(g.n());
    let mut found: Vec<Vec<usize>> = Vec::new();
    while found.len() < copies.max(1) {
        let rest: Vec<usize> = free.to_vec();
        if rest.len() < h1.n() {
            break;
        }
        let sub = g.induced_unchecked(&rest);
        match solver(h1, &sub) {
            InnerOutcome::Found(map) => {
                let lifted = sub.lift_all(&map);
                for &v in &lifted {
                    free.remove(v);
                }
                found.push(lifted);
            }
            InnerOutcome::Escape(r) => return GlueOutcome::Escape(r.lift(&sub.parent)),
            InnerOutcome::Absent => break,
        }
    }
    if found.is_empty() {
        return GlueOutcome::Absent("no copy of the first part".into());
    }
    let combine = |copy: &[usize], map2: &[usize]| -> Embedding {
        let mut map = vec![usize::MAX; amalgam.n()];
        map[..h1.n()].copy_from_slice(copy);
        for (x, &p) in pos2.iter().enumerate() {
            map[p] = map2[x];
        }
        Embedding::host(map)
    };

    let hubs: Vec<usize> = found.iter().map(|c| c[v1]).collect();
    if hubs.len() >= h2.n() {
        let mut sorted = hubs.clone();
        sorted.sort_unstable();
        let sub = g.induced_unchecked(&sorted);
        match solver(h2, &sub) {
            InnerOutcome::Found(map) => {
                let map2 = sub.lift_all(&map);
                let i = hubs.iter().position(|&h| h == map2[v2]).expect("hub image");
                return GlueOutcome::Found(combine(&found[i], &map2));
            }
            InnerOutcome::Escape(r) => return GlueOutcome::Escape(r.lift(&sub.parent)),
            InnerOutcome::Absent => {}
        }
    }

    for copy in &found {
        let hub = copy[v1];
        let mut allowed = Bitset::full(g.n());
        for &v in copy {
            allowed.remove(v);
        }
        let spec = SearchSpec {
            pinned: &[(v2, hub)],
            allowed: Some(&allowed),
            budget: Some(budget),
        };
        if let SearchOutcome::Found(e) = find_embedding(h2, g, Mode::Host, &spec) {
            return GlueOutcome::Found(combine(copy, &e.map));
        }
    }
    GlueOutcome::Absent(format!(
        "second part not found around {} copies of the first",
        found.len()
    ))
}

/// A decomposition `H = H1 ∪ H2` with `H1 ∩ H2 = {cut vertex}`.
#[derive(Clone, Debug)]
pub struct CutSplit {
    pub h1: Graph,
    pub v1: usize,
    pub h2: Graph,
    pub v2: usize,
    /// `labels[i]` is the `H` vertex at amalgam position `i`.
    pub labels: Vec<usize>,
}

impl CutSplit {
    /// Converts an amalgam embedding back to `H`'s labelling.
    pub fn to_pattern_map(&self, amalgam_map: &[usize]) -> Vec<usize> {
        let mut map = vec![usize::MAX; self.labels.len()];
        for (i, &x) in self.labels.iter().enumerate() {
            map[x] = amalgam_map[i];
        }
        map
    }
}

/// Splits off a leaf block of a connected `h` with at least two blocks:
/// `h1` is the leaf block, `h2` the rest, both containing the cut vertex.
pub fn split_leaf_block(h: &Graph) -> Option<CutSplit> {
    let blocks = biconnected_components(h);
    if blocks.len() < 2 {
        return None;
    }
    let n = h.n();
    let mut count = vec![0usize; n];
    for b in &blocks {
        for &v in b.iter() {
            count[v] += 1;
        }
    }
    // a leaf block contains exactly one cut vertex
    let (leaf, cut) = blocks.iter().find_map(|b| {
        let cuts: Vec<usize> = b.iter().copied().filter(|&v| count[v] > 1).collect();
        (cuts.len() == 1).then(|| (b.clone(), cuts[0]))
    })?;
    let rest: VertexSet = (0..n).filter(|&v| v == cut || !leaf.contains(v)).collect();
    let s1 = h.induced(&leaf).ok()?;
    let s2 = h.induced(&rest).ok()?;
    let v1 = s1.parent.iter().position(|&v| v == cut)?;
    let v2 = s2.parent.iter().position(|&v| v == cut)?;
    let mut labels = s1.parent.clone();
    labels.extend(s2.parent.iter().copied().filter(|&v| v != cut));
    Some(CutSplit {
        h1: s1.graph,
        v1,
        h2: s2.graph,
        v2,
        labels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::search::subgraph_find;
    use crate::patterns;

    fn exact(pattern: &Graph, sub: &InducedSubgraph) -> InnerOutcome {
        match subgraph_find(&sub.graph, pattern) {
            Some(e) => InnerOutcome::Found(e.map),
            None => InnerOutcome::Absent,
        }
    }

    fn glue_bowtie(g: &Graph) -> GlueOutcome {
        let k3 = Graph::complete(3);
        glue_embedding(&k3, 0, &k3, 0, g, g.n() / 4, 10_000, exact)
    }

    #[test]
    fn bowtie_in_k7() {
        let g = Graph::complete(7);
        match glue_bowtie(&g) {
            GlueOutcome::Found(e) => assert!(e.is_valid(&patterns::bowtie(), &g)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bowtie_in_octahedron() {
        let g = patterns::complete_multipartite(&[2, 2, 2]);
        assert!(subgraph_find(&g, &patterns::bowtie()).is_some());
        match glue_bowtie(&g) {
            GlueOutcome::Found(e) => assert!(e.is_valid(&patterns::bowtie(), &g)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bowtie_absent_in_c9() {
        assert!(matches!(glue_bowtie(&patterns::cycle(9)), GlueOutcome::Absent(_)));
    }

    #[test]
    fn leaf_block_split_round_trips() {
        let h = patterns::bowtie();
        let s = split_leaf_block(&h).unwrap();
        let (am, _) = one_point_amalgam(&s.h1, s.v1, &s.h2, s.v2);
        let relabelled = am.permute(&s.labels);
        assert_eq!(relabelled, h);
        assert!(split_leaf_block(&Graph::complete(4)).is_none());
    }
}
