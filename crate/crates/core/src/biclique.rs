//! Copies of a pattern versus empty `n × n` bipartite pairs.

use serde::Serialize;

use crate::bitset::Bitset;
use crate::config::Config;
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::{greedy_independent_set, is_connected, Graph, VertexSet};
use crate::lemmas::{glue_embedding, split_leaf_block, GlueOutcome, InnerOutcome};
use crate::oracle::alpha::independent_set_of_size;
use crate::oracle::search::{subgraph_find_budget, SearchOutcome};
use crate::witness::DichotomyResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OrderTag {
    /// At most `r - 1` earlier neighbours.
    BackDegree,
    /// Degree at most `r`.
    LowDegree,
}

/// An ordering in which every vertex has few earlier neighbours or low
/// degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrongDegeneracyCertificate {
    pub r: usize,
    pub order: Vec<usize>,
    pub tags: Vec<OrderTag>,
}

impl StrongDegeneracyCertificate {
    pub fn verify(&self, h: &Graph) -> bool {
        let n = h.n();
        if self.order.len() != n || self.tags.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for (i, &v) in self.order.iter().enumerate() {
            if v >= n || seen[v] {
                return false;
            }
            let back = self.order[..i].iter().filter(|&&u| h.has_edge(u, v)).count();
            let ok = match self.tags[i] {
                OrderTag::BackDegree => back < self.r,
                OrderTag::LowDegree => h.degree(v) <= self.r,
            };
            if !ok {
                return false;
            }
            seen[v] = true;
        }
        true
    }
}

/// Peels vertices off the end of the ordering: any remaining vertex of
/// degree at most `r`, or with at most `r - 1` remaining neighbours, may
/// go last. Lowest ids first; `None` when peeling gets stuck.
pub fn strong_degeneracy_order(h: &Graph, r: usize) -> Option<StrongDegeneracyCertificate> {
    assert!(r >= 1, "strong degeneracy needs r >= 1");
    let n = h.n();
    let mut alive = vec![true; n];
    let mut live_deg = h.degrees();
    let mut order = Vec::with_capacity(n);
    let mut tags = Vec::with_capacity(n);
    for _ in 0..n {
        let pick = (0..n).find_map(|v| {
            if !alive[v] {
                None
            } else if h.degree(v) <= r {
                Some((v, OrderTag::LowDegree))
            } else if live_deg[v] < r {
                Some((v, OrderTag::BackDegree))
            } else {
                None
            }
        })?;
        let (v, tag) = pick;
        alive[v] = false;
        for w in h.neighbors(v) {
            live_deg[w] -= 1;
        }
        order.push(v);
        tags.push(tag);
    }
    order.reverse();
    tags.reverse();
    Some(StrongDegeneracyCertificate { r, order, tags })
}

fn pow(n: usize, e: usize) -> u128 {
    (n as u128).saturating_pow(e as u32)
}

/// Host size `h² nʳ` needed by [`embed_vs_biclique`].
pub fn biclique_host_size(h: usize, n: usize, r: usize) -> u128 {
    ((h * h) as u128).saturating_mul(pow(n, r))
}

/// Copy of `h` in `g` or two `n`-sets with no edges between them.
///
/// Uses the first `h² nʳ` vertices split into `h` consecutive parts and
/// embeds the certificate order one vertex per part, shrinking the
/// candidate sets of later neighbours. When no candidate keeps every
/// later neighbour's set large enough, `n` of them fail on the same later
/// neighbour and their common non-neighbourhood there has `n` vertices.
pub fn embed_vs_biclique(
    h: &Graph,
    cert: &StrongDegeneracyCertificate,
    g: &Graph,
    n: usize,
) -> Result<DichotomyResult> {
    let hn = h.n();
    let r = cert.r;
    if !cert.verify(h) {
        return Err(Error::Precondition("certificate does not match the pattern".into()));
    }
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let need_n = biclique_host_size(hn, n, r);
    if (g.n() as u128) < need_n {
        return Err(Error::Precondition(format!(
            "host has {} vertices, need h² nʳ = {need_n}",
            g.n()
        )));
    }
    if hn == 0 {
        return Ok(DichotomyResult::PatternCopy(Embedding::host(Vec::new())));
    }
    let part = (hn as u128 * pow(n, r)) as usize;
    let u = &cert.order;
    let mut pos = vec![0; hn];
    for (i, &v) in u.iter().enumerate() {
        pos[v] = i;
    }
    // threshold h n^(r - d) for d earlier neighbours
    let need = |d: usize| -> u128 { hn as u128 * pow(n, r.saturating_sub(d)) };
    let mut sets: Vec<Bitset> = (0..hn)
        .map(|j| Bitset::from_iter(g.n(), j * part..(j + 1) * part))
        .collect();
    let mut back = vec![0usize; hn];
    let mut image = vec![usize::MAX; hn];
    for i in 0..hn {
        debug_assert!((i..hn).all(|j| sets[j].count() as u128 >= need(back[j])));
        let later: Vec<usize> = h.neighbors(u[i]).map(|w| pos[w]).filter(|&j| j > i).collect();
        let fits = |v: usize| {
            later
                .iter()
                .all(|&j| sets[j].intersection_count(g.row(v)) as u128 >= need(back[j] + 1))
        };
        if let Some(v) = sets[i].iter().find(|&v| fits(v)) {
            image[u[i]] = v;
            for &j in &later {
                sets[j].intersect_with(g.row(v));
                back[j] += 1;
            }
            continue;
        }
        for &k in &later {
            let limit = need(back[k] + 1);
            let s: Vec<usize> = sets[i]
                .iter()
                .filter(|&v| (sets[k].intersection_count(g.row(v)) as u128) < limit)
                .take(n)
                .collect();
            if s.len() < n {
                continue;
            }
            let mut rest = sets[k].clone();
            for &v in &s {
                rest.difference_with(g.row(v));
            }
            let right: Vec<usize> = rest.iter().take(n).collect();
            if right.len() < n {
                return Err(Error::Invariant(format!(
                    "common non-neighbourhood has {} < {n} vertices",
                    rest.count()
                )));
            }
            return Ok(DichotomyResult::BicliqueHole {
                left: s.into_iter().collect(),
                right: right.into_iter().collect(),
            });
        }
        return Err(Error::Invariant(format!(
            "no later neighbour collects {n} failing candidates"
        )));
    }
    let e = Embedding::host(image);
    e.check(h, g)
        .map_err(|err| Error::Invariant(format!("embedding is invalid: {err}")))?;
    Ok(DichotomyResult::PatternCopy(e))
}

/// `C(k+1, 2) - 2`, the excess allowed at level `k`.
pub fn excess_bound(k: usize) -> i64 {
    (k as i64 + 1) * k as i64 / 2 - 2
}

fn lowest_max_degree(g: &Graph) -> usize {
    (0..g.n())
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .unwrap_or(0)
}

fn split_hole(set: VertexSet, n: usize) -> DichotomyResult {
    let v = set.into_vec();
    DichotomyResult::BicliqueHole {
        left: v[..n].iter().copied().collect(),
        right: v[n..2 * n].iter().copied().collect(),
    }
}

struct Recursion<'a> {
    n: usize,
    cfg: &'a Config,
    notes: Vec<String>,
}

impl Recursion<'_> {
    fn solve(&mut self, h: &Graph, g: &Graph, k: usize) -> Result<DichotomyResult> {
        if let Some(split) = split_leaf_block(h) {
            let copies = (g.n() / (split.h1.n() + 1)).max(1);
            let budget = self.cfg.search_budget;
            let mut error = None;
            let out = glue_embedding(
                &split.h1,
                split.v1,
                &split.h2,
                split.v2,
                g,
                copies,
                budget,
                |p, sub| match self.solve(p, &sub.graph, k) {
                    Ok(DichotomyResult::PatternCopy(e)) => InnerOutcome::Found(e.map),
                    Ok(r @ DichotomyResult::BicliqueHole { .. }) => InnerOutcome::Escape(r),
                    Ok(_) => InnerOutcome::Absent,
                    Err(e) => {
                        error.get_or_insert(e);
                        InnerOutcome::Absent
                    }
                },
            );
            if let Some(e) = error {
                return Err(e);
            }
            return match out {
                GlueOutcome::Found(e) => Ok(DichotomyResult::PatternCopy(Embedding::host(
                    split.to_pattern_map(&e.map),
                ))),
                GlueOutcome::Escape(r) => Ok(r),
                GlueOutcome::Absent(why) => {
                    self.notes.push(format!("gluing at a cut vertex: {why}"));
                    self.fallback(h, g)
                }
            };
        }
        let delta = h.max_degree();
        if delta <= k {
            let r = delta.max(1);
            if let Some(cert) = strong_degeneracy_order(h, r) {
                if g.n() as u128 >= biclique_host_size(h.n(), self.n, r) {
                    return embed_vs_biclique(h, &cert, g, self.n);
                }
                self.notes.push(format!(
                    "{} host vertices is below h² nʳ = {}",
                    g.n(),
                    biclique_host_size(h.n(), self.n, r)
                ));
            }
            return self.fallback(h, g);
        }
        let v = lowest_max_degree(h);
        let peeled = h.remove_vertex(v);
        let x = lowest_max_degree(g);
        let nbhd: Vec<usize> = g.neighbors(x).collect();
        if nbhd.len() >= peeled.graph.n() && is_connected(&peeled.graph) {
            let sub = g.induced_unchecked(&nbhd);
            match self.solve(&peeled.graph, &sub.graph, k.saturating_sub(1).max(1))? {
                DichotomyResult::PatternCopy(e) => {
                    let mut map = vec![x; h.n()];
                    for (i, &hv) in peeled.parent.iter().enumerate() {
                        map[hv] = sub.parent[e.map[i]];
                    }
                    return Ok(DichotomyResult::PatternCopy(Embedding::host(map)));
                }
                r @ DichotomyResult::BicliqueHole { .. } => return Ok(r.lift(&sub.parent)),
                DichotomyResult::Failure(why) => self.notes.push(format!("inside N({x}): {why}")),
                _ => {}
            }
        }
        self.fallback(h, g)
    }

    fn fallback(&mut self, h: &Graph, g: &Graph) -> Result<DichotomyResult> {
        let n = self.n;
        let greedy = greedy_independent_set(g);
        if greedy.len() >= 2 * n {
            return Ok(split_hole(greedy, n));
        }
        if let SearchOutcome::Found(e) = subgraph_find_budget(g, h, self.cfg.search_budget) {
            return Ok(DichotomyResult::PatternCopy(e));
        }
        if let SearchOutcome::Found(s) = independent_set_of_size(g, 2 * n, self.cfg.search_budget) {
            return Ok(split_hole(s, n));
        }
        Ok(DichotomyResult::failure(format!(
            "no copy of a {}-vertex pattern and no empty {n} × {n} pair",
            h.n()
        )))
    }
}

/// Copy of a connected `h` with `e(H) - v(H) <= C(k+1, 2) - 2` in `g`, or
/// an empty `n × n` pair.
///
/// Leaf blocks are glued at cut vertices; patterns of maximum degree at
/// most `k` go to [`embed_vs_biclique`]; otherwise a maximum-degree
/// pattern vertex goes to a maximum-degree host vertex and the rest is
/// solved at level `k - 1` in its neighbourhood. Independent sets of size
/// `2n` met on the way are split into the two sides.
pub fn ev_vs_biclique(h: &Graph, g: &Graph, n: usize, k: usize, cfg: &Config) -> Result<DichotomyResult> {
    cfg.validate()?;
    if k == 0 || n == 0 {
        return Err(Error::Precondition("k and n must be positive".into()));
    }
    if h.n() == 0 || !is_connected(h) {
        return Err(Error::Precondition("pattern must be connected and nonempty".into()));
    }
    let excess = h.edge_count() as i64 - h.n() as i64;
    if excess > excess_bound(k) {
        return Err(Error::Precondition(format!(
            "pattern has e - v = {excess}, level {k} allows {}",
            excess_bound(k)
        )));
    }
    let mut rec = Recursion {
        n,
        cfg,
        notes: Vec::new(),
    };
    let out = rec.solve(h, g, k)?;
    Ok(match out {
        DichotomyResult::Failure(why) if !rec.notes.is_empty() => {
            DichotomyResult::Failure(format!("{why}; {}", rec.notes.join("; ")))
        }
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::instances;
    use crate::patterns;
    use crate::witness::{verify_witness, WitnessContext};

    #[test]
    fn certificates() {
        let c = strong_degeneracy_order(&patterns::cycle(6), 2).unwrap();
        assert!(c.tags.iter().all(|&t| t == OrderTag::LowDegree));
        assert!(c.verify(&patterns::cycle(6)));
        let k4 = Graph::complete(4);
        assert!(strong_degeneracy_order(&k4, 4).unwrap().verify(&k4));
        assert!(strong_degeneracy_order(&k4, 3).unwrap().verify(&k4));
        assert!(strong_degeneracy_order(&k4, 2).is_none());
        assert!(strong_degeneracy_order(&Graph::complete(5), 3).is_none());
        let p = patterns::petersen();
        assert!(strong_degeneracy_order(&p, 3).is_some());
    }

    #[test]
    fn complete_host_gives_copy() {
        let h = patterns::cycle(4);
        let cert = strong_degeneracy_order(&h, 2).unwrap();
        let g = Graph::complete(64);
        let r = embed_vs_biclique(&h, &cert, &g, 2).unwrap();
        assert!(matches!(r, DichotomyResult::PatternCopy(_)));
        assert!(verify_witness(&r, &WitnessContext::new(&g).pattern(&h).size(2)));
    }

    #[test]
    fn empty_host_gives_hole() {
        let h = patterns::cycle(4);
        let cert = strong_degeneracy_order(&h, 2).unwrap();
        let g = Graph::new(64);
        let r = embed_vs_biclique(&h, &cert, &g, 2).unwrap();
        assert!(matches!(r, DichotomyResult::BicliqueHole { .. }));
        assert!(verify_witness(&r, &WitnessContext::new(&g).pattern(&h).size(2)));
    }

    #[test]
    fn c4_never_fails_on_random_hosts() {
        let h = patterns::cycle(4);
        let cert = strong_degeneracy_order(&h, 2).unwrap();
        for seed in 0..60 {
            let p = (seed % 10) as f64 / 10.0;
            let g = instances::gnp(64, p, seed);
            let r = embed_vs_biclique(&h, &cert, &g, 2).unwrap();
            assert!(
                verify_witness(&r, &WitnessContext::new(&g).pattern(&h).size(2)),
                "{r:?}"
            );
        }
    }

    #[test]
    fn small_host_is_rejected() {
        let h = patterns::cycle(4);
        let cert = strong_degeneracy_order(&h, 2).unwrap();
        assert!(embed_vs_biclique(&h, &cert, &Graph::new(63), 2).is_err());
    }

    #[test]
    fn recursion_examples() {
        let cfg = Config::default();
        let g = instances::gnp(80, 0.5, 9);
        for (h, k) in [(Graph::complete(4), 3), (patterns::path(3), 2), (patterns::star(4), 1)] {
            let r = ev_vs_biclique(&h, &g, 2, k, &cfg).unwrap();
            assert!(!r.is_failure(), "{r:?}");
            assert!(verify_witness(&r, &WitnessContext::new(&g).pattern(&h).size(2)));
        }
        assert!(ev_vs_biclique(&Graph::complete(4), &g, 2, 2, &cfg).is_err());
    }
}
