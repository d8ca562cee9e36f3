//! `K4*` (K4 with one edge subdivided) against bipartite targets and
//! cliques.

use crate::bitset::Bitset;
use crate::config::Config;
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::{triangle_count, Graph, InducedSubgraph, VertexSet};
use crate::lemmas::{
    bipartite_greedy_extend, degeneracy_condition, embed_by_degeneracy, empty_bipartite_split,
    few_triangle_independent_set, greedy_extend, low_degree_set, regularize, top_k, try_embed_by_degeneracy,
    try_greedy_extend, BipartitePattern, PartialMap,
};
use crate::oracle::alpha::independent_set_of_size;
use crate::oracle::search::SearchOutcome;
use crate::witness::DichotomyResult;
use num_rational::Ratio;

/// Host-mode embedding of `K4*` from its five roles: `ends` are the two
/// ends of the subdivided edge, `edge` the opposite edge, `mid` the
/// subdivision vertex.
fn k4star_map(ends: (usize, usize), edge: (usize, usize), mid: usize) -> Embedding {
    Embedding::host(vec![ends.0, ends.1, edge.0, edge.1, mid])
}

/// Finds a copy of `K4*` in `g`, or proves there is none.
///
/// Every copy consists of an edge `ab`, two common neighbours `x, y` of
/// `a` and `b`, and a third common neighbour of `x` and `y`. The scan goes
/// over edges in lexicographic order.
pub fn find_k4star(g: &Graph) -> Option<Embedding> {
    for (a, b) in g.edges() {
        let common = g.common_neighbors(a, b);
        if common.count() < 2 {
            continue;
        }
        let cs = common.to_vec();
        for (i, &x) in cs.iter().enumerate() {
            for &y in &cs[i + 1..] {
                if g.common_neighbor_count(x, y) < 3 {
                    continue;
                }
                let mut third = g.common_neighbors(x, y);
                third.remove(a);
                third.remove(b);
                if let Some(u) = third.first() {
                    return Some(k4star_map((x, y), (a, b), u));
                }
            }
        }
    }
    None
}

/// Pairs of distinct vertices with at most two common neighbours.
#[derive(Clone, Debug)]
pub struct SparsePairs {
    rows: Vec<Bitset>,
    slices: Vec<Bitset>,
    len: usize,
}

impl SparsePairs {
    /// Number of unordered pairs.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    /// Partners of `x` as a bitset.
    pub fn row(&self, x: usize) -> &Bitset {
        &self.rows[x]
    }

    /// Partners `y` of `x` with `d(y) <= d(x)`.
    pub fn slice(&self, x: usize) -> &Bitset {
        &self.slices[x]
    }

    /// All pairs `(x, y)` with `x < y`, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, r)| r.iter().filter(move |&y| y > x).map(move |y| (x, y)))
    }
}

pub fn sparse_pairs(g: &Graph) -> SparsePairs {
    let n = g.n();
    let mut rows = vec![Bitset::new(n); n];
    let mut len = 0;
    for x in 0..n {
        for y in x + 1..n {
            if g.common_neighbor_count(x, y) <= 2 {
                rows[x].insert(y);
                rows[y].insert(x);
                len += 1;
            }
        }
    }
    let slices = (0..n)
        .map(|x| Bitset::from_iter(n, rows[x].iter().filter(|&y| g.degree(y) <= g.degree(x))))
        .collect();
    SparsePairs { rows, slices, len }
}

fn check_target(f: &BipartitePattern) -> Result<()> {
    if f.graph().edge_count() == 0 {
        return Err(Error::Precondition("target has no edges".into()));
    }
    if f.has_isolated_vertices() {
        return Err(Error::Precondition("target has isolated vertices".into()));
    }
    Ok(())
}

/// Maps the vertices `xs` of `f` onto `vs` in order.
fn anchor(f_n: usize, xs: &[usize], vs: &[usize]) -> PartialMap {
    let mut partial = vec![None; f_n];
    for (&x, &v) in xs.iter().zip(vs) {
        partial[x] = Some(v);
    }
    partial
}

/// Returns a copy of `K4*` in `G` or a copy of `F` in the complement.
///
/// Runs a `K4*` search and the degeneracy embedding first, then
/// regularizes and follows the three density cases. A case whose
/// threshold or internal step fails hands over to the next one; after
/// the last case an unchecked greedy completion is tried. `FAILURE` means
/// none of these produced a witness.
pub fn k4star_vs_bipartite(g: &Graph, f: &BipartitePattern, cfg: &Config) -> Result<DichotomyResult> {
    check_target(f)?;
    cfg.validate()?;
    let fg = f.graph();
    if let Some(e) = find_k4star(g) {
        return Ok(DichotomyResult::PatternCopy(e));
    }
    if degeneracy_condition(fg, g) {
        if let Ok(e) = embed_by_degeneracy(fg, g) {
            return Ok(DichotomyResult::ComplementEmbedding(e));
        }
    }
    let mut notes: Vec<String> = Vec::new();
    if g.n() >= 12 {
        let reg = regularize(g)?;
        if reg.independent {
            if reg.set.len() >= fg.n() {
                let map = reg.set.as_slice()[..fg.n()].to_vec();
                return Ok(DichotomyResult::ComplementEmbedding(Embedding::complement(map)));
            }
            notes.push("regularization ended in a small independent set".into());
        } else {
            let sub = g.induced_unchecked(reg.set.as_slice());
            if let Some(e) = density_cases(&sub, f, cfg, &mut notes) {
                return Ok(DichotomyResult::ComplementEmbedding(Embedding::complement(
                    sub.lift_all(&e.map),
                )));
            }
        }
    } else {
        notes.push(format!("N = {} is too small to regularize", g.n()));
    }
    if let Some(e) = fallback(g, fg, cfg.seed) {
        return Ok(DichotomyResult::ComplementEmbedding(e));
    }
    notes.push("greedy fallback ran out of candidates".into());
    Ok(DichotomyResult::failure(notes.join("; ")))
}

/// Threshold-free completions on the whole host.
fn fallback(g: &Graph, f: &Graph, seed: u64) -> Option<Embedding> {
    if let Some(e) = try_embed_by_degeneracy(f, g) {
        return Some(e);
    }
    let is = few_triangle_independent_set(g, triangle_count(g), seed).set;
    let all: Vec<usize> = (0..f.n()).collect();
    let a = top_k(f, &all, is.len().min(f.n()));
    try_greedy_extend(f, &anchor(f.n(), &a, is.as_slice()), g)
}

/// The three cases on a regularized host. Returns an embedding in local
/// ids of `sub`.
fn density_cases(
    sub: &InducedSubgraph,
    f: &BipartitePattern,
    cfg: &Config,
    notes: &mut Vec<String>,
) -> Option<Embedding> {
    let g = &sub.graph;
    let fg = f.graph();
    let n = g.n();
    let ln = (n as f64).ln();
    let m = fg.edge_count() as f64;
    let d = g.average_degree();
    let s = sparse_pairs(g);

    if s.len() as f64 >= 2.0 * n as f64 * d * ln {
        match case_one(g, f, &s) {
            Ok(emb) => return Some(emb),
            Err(err) => notes.push(format!("case 1: {err}")),
        }
    } else {
        notes.push(format!("case 1: |S| = {} below 2Nd ln N", s.len()));
    }

    if d >= 576.0 * (m * ln).sqrt() {
        match case_two(g, fg, &s, d, ln) {
            Ok(emb) => return Some(emb),
            Err(err) => notes.push(format!("case 2: {err}")),
        }
    } else {
        notes.push(format!("case 2: d = {d:.3} below 576 sqrt(m ln N)"));
    }

    match case_three(g, fg, cfg.seed) {
        Ok(emb) => return Some(emb),
        Err(err) => notes.push(format!("case 3: {err}")),
    }
    None
}

/// Splits around the vertex with the largest sparse slice and completes
/// with the bipartite greedy lemma.
fn case_one(g: &Graph, f: &BipartitePattern, s: &SparsePairs) -> Result<Embedding> {
    let n = g.n();
    let x = (0..n)
        .max_by_key(|&v| (s.slice(v).count(), std::cmp::Reverse(v)))
        .ok_or_else(|| Error::Precondition("empty host".into()))?;
    let nx: VertexSet = g.neighbors(x).collect();
    let mut ys = s.slice(x).clone();
    ys.difference_with(g.row(x));
    let ys: VertexSet = ys.iter().collect();
    let (xp, yp) = empty_bipartite_split(&nx, &ys, g, Ratio::from_integer(2))?;
    let fg = f.graph();
    let a = top_k(fg, f.side_a().as_slice(), yp.len().min(f.side_a().len()));
    let b = top_k(fg, f.side_b().as_slice(), xp.len().min(f.side_b().len()));
    let mut partial = anchor(fg.n(), &a, yp.as_slice());
    for (&bx, &v) in b.iter().zip(xp.iter()) {
        partial[bx] = Some(v);
    }
    bipartite_greedy_extend(f, &partial, g)
}

/// `16 ln N (d'(x) − d(x)/8 − d/8) − t(x)` for every `x`, with the lower
/// neighbourhoods `N'(x)`.
fn case_two_scores(g: &Graph, s: &SparsePairs, d: f64, ln: f64) -> Vec<(f64, Bitset)> {
    (0..g.n())
        .map(|x| {
            let lower = Bitset::from_iter(g.n(), g.neighbors(x).filter(|&y| g.degree(y) <= g.degree(x)));
            let twice_t: usize = lower.iter().map(|y| s.row(y).intersection_count(lower.words())).sum();
            let dp = lower.count() as f64;
            let score = 16.0 * ln * (dp - g.degree(x) as f64 / 8.0 - d / 8.0) - (twice_t / 2) as f64;
            (score, lower)
        })
        .collect()
}

fn case_two(g: &Graph, f: &Graph, s: &SparsePairs, d: f64, ln: f64) -> Result<Embedding> {
    let scores = case_two_scores(g, s, d, ln);
    let mut x = 0;
    for (v, (sc, _)) in scores.iter().enumerate() {
        if *sc > scores[x].0 {
            x = v;
        }
    }
    let lower = &scores[x].1;
    let g1 = g.induced_unchecked(&lower.to_vec());
    let k = (lower.count() / 3).min(f.n());
    let all: Vec<usize> = (0..f.n()).collect();
    let a = top_k(f, &all, k);
    let fa = f.induced_unchecked(&a);
    let inner = embed_by_degeneracy(&fa.graph, &g1.graph)?;
    let mut partial: PartialMap = vec![None; f.n()];
    for (i, &v) in inner.map.iter().enumerate() {
        partial[fa.parent[i]] = Some(g1.parent[v]);
    }
    greedy_extend(f, &partial, g)
}

/// Independent set of the low-degree part, then greedy completion.
fn case_three(g: &Graph, f: &Graph, seed: u64) -> Result<Embedding> {
    let w = low_degree_set(g).to_vec();
    let gw = g.induced_unchecked(&w);
    let t = triangle_count(&gw.graph);
    let out = few_triangle_independent_set(&gw.graph, t, seed);
    let is = gw.lift_set(&out.set);
    let all: Vec<usize> = (0..f.n()).collect();
    let a = top_k(f, &all, is.len().min(f.n()));
    greedy_extend(f, &anchor(f.n(), &a, is.as_slice()), g)
}

/// Cap on the host size for the exact independent-set search.
const EXACT_ALPHA_HOST: usize = 128;
/// Cap on the requested size for the exact independent-set search.
const EXACT_ALPHA_SIZE: usize = 12;

/// Returns an independent set of size `n` or a copy of `K4*`.
///
/// Small instances use an exact search for the independent set within
/// the configured budget; otherwise the best of the greedy searchers is
/// used. The `K4*` search looks in the `⌈N/(2n)⌉`-core first, then in the
/// whole host.
pub fn k4star_vs_clique(g: &Graph, n: usize, cfg: &Config) -> Result<DichotomyResult> {
    if n < 3 {
        return Err(Error::Precondition(format!("n = {n} must be at least 3")));
    }
    cfg.validate()?;
    let big_n = g.n();
    if big_n <= EXACT_ALPHA_HOST && n <= EXACT_ALPHA_SIZE {
        if let SearchOutcome::Found(s) = independent_set_of_size(g, n, cfg.search_budget) {
            return Ok(DichotomyResult::IndependentSet(s));
        }
    } else {
        let out = few_triangle_independent_set(g, triangle_count(g), cfg.seed);
        if out.set.len() >= n {
            let mut set = out.set;
            set.truncate(n);
            return Ok(DichotomyResult::IndependentSet(set));
        }
    }
    let core = min_degree_core(g, big_n.div_ceil(2 * n));
    if !core.is_empty() {
        let sub = g.induced_unchecked(core.as_slice());
        if let Some(e) = find_k4star(&sub.graph) {
            return Ok(DichotomyResult::PatternCopy(e.lift(&sub)));
        }
    }
    if let Some(e) = find_k4star(g) {
        return Ok(DichotomyResult::PatternCopy(e));
    }
    Ok(DichotomyResult::failure(format!(
        "no independent set of size {n} found and no K4* present"
    )))
}

/// Vertices of the largest induced subgraph with minimum degree `k`.
fn min_degree_core(g: &Graph, k: usize) -> VertexSet {
    let n = g.n();
    let mut alive = Bitset::full(n);
    let mut deg = g.degrees();
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] < k).collect();
    for &v in &stack {
        alive.remove(v);
    }
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if alive.contains(w) {
                deg[w] -= 1;
                if deg[w] < k {
                    alive.remove(w);
                    stack.push(w);
                }
            }
        }
    }
    alive.iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::instances;
    use crate::patterns;
    use crate::verify_witness;
    use crate::witness::WitnessContext;

    #[test]
    fn k5_and_wheel_contain_k4star() {
        let k = patterns::k4_star();
        for g in [Graph::complete(5), patterns::wheel(4)] {
            let e = find_k4star(&g).unwrap();
            assert!(e.is_valid(&k, &g));
        }
        assert!(find_k4star(&Graph::complete(4)).is_none());
        assert!(find_k4star(&patterns::petersen()).is_none());
    }

    #[test]
    fn sparse_pair_examples() {
        assert_eq!(sparse_pairs(&Graph::new(7)).len(), 21);
        assert!(sparse_pairs(&Graph::complete(6)).is_empty());
        assert_eq!(sparse_pairs(&patterns::petersen()).len(), 45);
    }

    #[test]
    fn slices_respect_degree() {
        let g = patterns::star(5);
        let s = sparse_pairs(&g);
        assert_eq!(s.slice(0).count(), 5);
        assert_eq!(s.slice(1).count(), 4);
        assert!(!s.slice(1).contains(0));
    }

    #[test]
    fn empty_host_embeds_the_target() {
        let f = BipartitePattern::from_graph(patterns::complete_bipartite(2, 3)).unwrap();
        let g = Graph::new(4 * 6);
        let r = k4star_vs_bipartite(&g, &f, &Config::default()).unwrap();
        let ctx = WitnessContext::new(&g).target(f.graph());
        assert!(verify_witness(&r, &ctx));
    }

    #[test]
    fn k5_gives_a_copy() {
        let f = BipartitePattern::from_graph(patterns::path(4)).unwrap();
        let g = Graph::complete(5).disjoint_union(&Graph::new(10));
        let r = k4star_vs_bipartite(&g, &f, &Config::default()).unwrap();
        assert!(matches!(r, DichotomyResult::PatternCopy(_)));
    }

    #[test]
    fn rejects_isolated_vertices() {
        let f = BipartitePattern::from_graph(Graph::new(3)).unwrap();
        assert!(k4star_vs_bipartite(&Graph::new(5), &f, &Config::default()).is_err());
    }

    #[test]
    fn random_hosts_give_valid_witnesses() {
        let mut rng = instances::rng(5);
        let k = patterns::k4_star();
        for i in 0..40 {
            let g = instances::gnp(40, 0.05 + 0.01 * (i % 10) as f64, i);
            let f = instances::random_bipartite_pattern(3, 3, 0.5, &mut rng);
            let r = k4star_vs_bipartite(&g, &f, &Config::default()).unwrap();
            if !r.is_failure() {
                let ctx = WitnessContext::new(&g).pattern(&k).target(f.graph());
                assert!(verify_witness(&r, &ctx), "{r}");
            }
        }
    }

    #[test]
    fn clique_examples() {
        let cfg = Config::default();
        let g = Graph::new(6);
        assert!(matches!(
            k4star_vs_clique(&g, 4, &cfg).unwrap(),
            DichotomyResult::IndependentSet(_)
        ));
        let r = k4star_vs_clique(&Graph::complete(5), 3, &cfg).unwrap();
        assert!(matches!(r, DichotomyResult::PatternCopy(_)));
        assert!(k4star_vs_clique(&g, 2, &cfg).is_err());
    }

    #[test]
    fn core_keeps_dense_part() {
        let g = Graph::complete(5).disjoint_union(&patterns::path(6));
        assert_eq!(min_degree_core(&g, 2).as_slice(), &[0, 1, 2, 3, 4]);
    }
}
