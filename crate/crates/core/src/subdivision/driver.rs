//! Copy of a `K4` subdivision in `G`, or a target graph in the complement.

use crate::bitset::Bitset;
use crate::config::Config;
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::{greedy_independent_set, triangle_count, Graph, VertexSet};
use crate::lemmas::{
    degeneracy_condition, embed_by_degeneracy, few_triangle_independent_set, top_k, try_embed_by_degeneracy,
    try_greedy_extend,
};
use crate::oracle::search::{subgraph_find_budget, SearchOutcome};
use crate::witness::DichotomyResult;

use super::assembly::assemble_subdivision;
use super::elimination::{eliminate_triangles, EliminationTrace};
use super::pattern::{classify_subdivision, Base, Layout, SubdivisionPattern};

/// Vertices tried per case, best functional first.
const CANDIDATES: usize = 16;
/// Vertex pairs examined in the common-neighbourhood case.
const PAIR_LIMIT: usize = 256;
/// Diamonds listed per tip vertex.
const DIAMOND_LIMIT: usize = 4096;

/// Completes `F` from an independent set of `G` holding its top-degree
/// vertices.
fn complete_from_independent(f: &Graph, g: &Graph, is: &[usize]) -> Option<Embedding> {
    let all: Vec<usize> = (0..f.n()).collect();
    let a = top_k(f, &all, is.len().min(f.n()));
    let mut partial = vec![None; f.n()];
    for (&x, &v) in a.iter().zip(is) {
        partial[x] = Some(v);
    }
    try_greedy_extend(f, &partial, g)
}

/// Largest colour class of a greedy colouring along a degeneracy order:
/// at least `n/(k+1)` vertices for a `k`-degenerate graph.
pub fn degenerate_independent_set(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut deg = g.degrees();
    let mut alive = Bitset::full(n);
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = alive.iter().min_by_key(|&v| (deg[v], v)).expect("vertex left");
        alive.remove(v);
        order.push(v);
        for w in g.neighbors(v) {
            if alive.contains(w) {
                deg[w] -= 1;
            }
        }
    }
    let mut colour = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in order.iter().rev() {
        let taken: Vec<usize> = g
            .neighbors(v)
            .filter(|&w| colour[w] != usize::MAX)
            .map(|w| colour[w])
            .collect();
        let c = (0..).find(|c| !taken.contains(c)).unwrap();
        colour[v] = c;
        if c == classes.len() {
            classes.push(Vec::new());
        }
        classes[c].push(v);
    }
    let best = classes.into_iter().rev().max_by_key(|c| c.len()).unwrap_or_default();
    best.into_iter().collect()
}

/// `b(v)`: number of `G-` edges with both ends in `N(v)`.
pub fn minus_edges_in_neighbourhoods(g: &Graph, trace: &EliminationTrace) -> Vec<usize> {
    let mut b = vec![0; g.n()];
    for &(x, y) in &trace.minus {
        for w in g.common_neighbors(x, y).iter() {
            b[w] += 1;
        }
    }
    b
}

/// Independent set built when fewer than half the edges are in `G+`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePlusWitness {
    pub vertex: usize,
    /// `G-` neighbours of `vertex` with degree at most its own.
    pub lower: VertexSet,
    /// Independent in `G-`, inside `lower`.
    pub a: VertexSet,
    /// Independent in `G`, inside `a`.
    pub independent: VertexSet,
}

/// When `2 e(G+) < e(G)`: picks `v` maximizing
/// `d'(v) − d(v)/16 − d/16 − b(v)/(12 C0)`, an independent set `A` of
/// `G-[N'(v)]`, and an independent set of `G[A]`. Returns `None` when
/// `G+` holds at least half the edges.
pub fn sparse_plus_witness(g: &Graph, trace: &EliminationTrace) -> Option<SparsePlusWitness> {
    let e = g.edge_count();
    if 2 * trace.plus.edge_count() >= e {
        return None;
    }
    let n = g.n();
    let mut minus = Graph::new(n);
    for &(x, y) in &trace.minus {
        minus.add_edge(x, y);
    }
    let b = minus_edges_in_neighbourhoods(g, trace);
    let d = g.average_degree();
    let c0 = trace.c0 as f64;
    let lower = |v: usize| -> Vec<usize> { minus.neighbors(v).filter(|&u| g.degree(u) <= g.degree(v)).collect() };
    let score = |v: usize| lower(v).len() as f64 - g.degree(v) as f64 / 16.0 - d / 16.0 - b[v] as f64 / (12.0 * c0);
    let mut best = 0;
    for v in 1..n {
        if score(v) > score(best) {
            best = v;
        }
    }
    let nv = lower(best);
    let sub = minus.induced_unchecked(&nv);
    let a = sub.lift_set(&greedy_independent_set(&sub.graph));
    let ga = g.induced_unchecked(a.as_slice());
    let independent = ga.lift_set(&degenerate_independent_set(&ga.graph));
    Some(SparsePlusWitness {
        vertex: best,
        lower: nv.into_iter().collect(),
        a,
        independent,
    })
}

/// Vertices in descending order of `score`, ties by id.
fn ranked(n: usize, score: impl Fn(usize) -> f64) -> Vec<usize> {
    let mut vs: Vec<(f64, usize)> = (0..n).map(|v| (score(v), v)).collect();
    vs.sort_by(|x, y| y.0.total_cmp(&x.0).then(x.1.cmp(&y.1)));
    vs.into_iter().map(|(_, v)| v).collect()
}

struct Ctx<'a> {
    g: &'a Graph,
    f: &'a Graph,
    trace: &'a EliminationTrace,
    pattern: &'a SubdivisionPattern,
    b: Vec<usize>,
    notes: Vec<String>,
}

impl Ctx<'_> {
    fn plus(&self) -> &Graph {
        &self.trace.plus
    }

    fn assemble(&mut self, base: Base, carrier: usize, core: Vec<usize>) -> Option<DichotomyResult> {
        let layout: Layout = self.pattern.layout_as(base, carrier)?;
        match assemble_subdivision(&Embedding::host(core), &layout, self.trace, self.g) {
            Ok(e) => Some(DichotomyResult::PatternCopy(e)),
            Err(err) => {
                self.notes.push(format!("{base} core: {err}"));
                None
            }
        }
    }

    fn independent(&mut self, is: &[usize]) -> Option<DichotomyResult> {
        complete_from_independent(self.f, self.g, is).map(DichotomyResult::ComplementEmbedding)
    }

    /// `G+` neighbours of `v` with `G`-degree at most `d(v)`.
    fn lower_plus(&self, v: usize) -> Vec<usize> {
        self.plus()
            .neighbors(v)
            .filter(|&u| self.g.degree(u) <= self.g.degree(v))
            .collect()
    }

    /// Two adjacent subdivided edges: `v`, an edge `u1 u2` and a vertex
    /// `w` in the lower `G+` neighbourhood, with `z_i` joining `u_i`, `w`.
    fn case_one(&mut self) -> Option<DichotomyResult> {
        let g = self.g;
        let plus = &self.trace.plus;
        let n = g.n();
        let c0 = self.trace.c0;
        let e = g.edge_count() as f64;
        let d = g.average_degree();
        let stars: Vec<Vec<usize>> = (0..n).map(|v| self.lower_plus(v)).collect();
        let bad_pairs = |s: &[usize]| -> Vec<(usize, usize)> {
            let mut out = Vec::new();
            for (i, &u) in s.iter().enumerate() {
                for &w in &s[i + 1..] {
                    if plus.common_neighbor_count(u, w) <= c0 {
                        out.push((u, w));
                    }
                }
            }
            out
        };
        let p: Vec<usize> = stars.iter().map(|s| bad_pairs(s).len()).collect();
        let nn = (n * n) as f64;
        let order = ranked(n, |v| {
            stars[v].len() as f64
                - g.degree(v) as f64 / 16.0
                - d / 16.0
                - self.b[v] as f64 / (24.0 * c0 as f64)
                - e / (4.0 * c0 as f64 * nn) * p[v] as f64
        });
        for &v in order.iter().take(CANDIDATES) {
            let star = &stars[v];
            let ds = star.len();
            if ds < 3 {
                continue;
            }
            let mut count = vec![0usize; n];
            for (u, w) in bad_pairs(star) {
                count[u] += 1;
                count[w] += 1;
            }
            let a: Vec<usize> = star.iter().copied().filter(|&u| 2 * count[u] + 3 <= ds).collect();
            let mut had_edge = false;
            for (i, &u1) in a.iter().enumerate() {
                for &u2 in &a[i + 1..] {
                    if !plus.has_edge(u1, u2) {
                        continue;
                    }
                    had_edge = true;
                    for &w in star {
                        if w == u1 || w == u2 {
                            continue;
                        }
                        let mut z1s = plus.common_neighbors(u1, w);
                        z1s.remove(v);
                        z1s.remove(u2);
                        let Some(z1) = z1s.first() else { continue };
                        let mut z2s = plus.common_neighbors(u2, w);
                        for x in [v, u1, z1] {
                            z2s.remove(x);
                        }
                        let Some(z2) = z2s.first() else { continue };
                        if let Some(r) = self.assemble(Base::H1, 0, vec![w, u1, u2, v, z1, z2]) {
                            return Some(r);
                        }
                    }
                }
            }
            if !had_edge {
                let ga = g.induced_unchecked(&a);
                let is = ga.lift_set(&greedy_independent_set(&ga.graph));
                if let Some(r) = self.independent(is.as_slice()) {
                    return Some(r);
                }
            }
        }
        self.notes.push("case 1: no core found".into());
        None
    }

    /// Two disjoint subdivided edges: a pair `v1, v2` with a large common
    /// `G+` neighbourhood containing three suitable vertices.
    fn case_two(&mut self) -> Option<DichotomyResult> {
        let c0 = self.trace.c0;
        let plus = &self.trace.plus;
        for (v1, v2, a) in h2_pairs(plus, c0).into_iter().take(PAIR_LIMIT) {
            for (i, &u1) in a.iter().enumerate() {
                for &u2 in &a[i + 1..] {
                    for &u3 in &a {
                        if u3 == u1 || u3 == u2 {
                            continue;
                        }
                        let mut ws = plus.common_neighbors(u1, u2);
                        for x in [v1, v2, u3] {
                            ws.remove(x);
                        }
                        let Some(w) = ws.first() else { continue };
                        if let Some(r) = self.assemble(Base::H2, 0, vec![v1, v2, u1, u2, u3, w]) {
                            return Some(r);
                        }
                    }
                }
            }
        }
        self.notes.push("case 2: no core found".into());
        None
    }

    /// One subdivided edge: diamonds of `G+` sharing a tip.
    fn case_three(&mut self) -> Option<DichotomyResult> {
        let g = self.g;
        let n = g.n();
        let d = g.average_degree();
        let plus = &self.trace.plus;
        let mut t = vec![0usize; n];
        for (a, b) in plus.edges() {
            let tips = plus.common_neighbors(a, b).to_vec();
            for &s in &tips {
                t[s] += tips.iter().filter(|&&u| u != s && g.degree(u) <= g.degree(s)).count();
            }
        }
        let order = ranked(n, |v| t[v] as f64 - g.degree(v) as f64 - d);
        for &v in order.iter().take(CANDIDATES) {
            if t[v] == 0 {
                break;
            }
            // (other tip, middle edge)
            let mut ds: Vec<(usize, (usize, usize))> = Vec::new();
            let nv = plus.neighbor_set(v).to_vec();
            'list: for (i, &a) in nv.iter().enumerate() {
                for &b in &nv[i + 1..] {
                    if !plus.has_edge(a, b) {
                        continue;
                    }
                    for u in plus.common_neighbors(a, b).iter() {
                        if u != v && g.degree(u) <= g.degree(v) {
                            ds.push((u, (a, b)));
                            if ds.len() >= DIAMOND_LIMIT {
                                break 'list;
                            }
                        }
                    }
                }
            }
            if let Some(r) = self.diamonds_at(v, &ds) {
                return Some(r);
            }
        }
        self.notes.push("case 3: no core found".into());
        None
    }

    fn diamonds_at(&mut self, v: usize, ds: &[(usize, (usize, usize))]) -> Option<DichotomyResult> {
        let g = self.g;
        for &(u, (a, b)) in ds {
            if g.has_edge(v, u) {
                if let Some(r) = self.assemble(Base::K4, 0, vec![a, b, v, u]) {
                    return Some(r);
                }
            }
        }
        for (i, &(u, (a, b))) in ds.iter().enumerate() {
            for &(u2, (c, e)) in &ds[i + 1..] {
                if u2 != u {
                    continue;
                }
                let x = if c != a && c != b { c } else { e };
                if x == a || x == b {
                    continue;
                }
                if let Some(r) = self.assemble(Base::K4Star, 1, vec![v, u, a, b, x]) {
                    return Some(r);
                }
            }
        }
        let mut tips: Vec<usize> = ds.iter().map(|x| x.0).collect();
        tips.sort_unstable();
        tips.dedup();
        if g.is_independent(&tips) {
            return self.independent(&tips);
        }
        for (i, &(ui, (a, b))) in ds.iter().enumerate() {
            for &(uj, (c, e)) in &ds[i + 1..] {
                if ui == uj || !g.has_edge(ui, uj) {
                    continue;
                }
                if (a, b) == (c, e) {
                    if let Some(r) = self.assemble(Base::K4, 0, vec![a, b, ui, uj]) {
                        return Some(r);
                    }
                    continue;
                }
                let x = if c != a && c != b { c } else { e };
                if let Some(r) = self.assemble(Base::H3, 0, vec![v, ui, a, b, x, uj]) {
                    return Some(r);
                }
            }
        }
        None
    }

    /// Budgeted exact search for a base core inside `G+`.
    fn core_search(&mut self, budget: u64) -> Option<DichotomyResult> {
        let mut bases = vec![(self.pattern.base, 0)];
        if self.pattern.base == Base::H3 {
            bases.push((Base::K4Star, 1));
        }
        bases.push((Base::K4, 0));
        for (base, carrier) in bases {
            let Some(layout) = self.pattern.layout_as(base, carrier) else {
                continue;
            };
            if let SearchOutcome::Found(core) = subgraph_find_budget(self.plus(), &layout.graph, budget) {
                if let Some(r) = self.assemble(base, carrier, core.map) {
                    return Some(r);
                }
            }
        }
        None
    }
}

/// Pairs `(v1, v2)` in descending order of `|N+(v1, v2)|` (ties
/// lexicographic) whose common neighbourhood keeps at least three
/// vertices after dropping one vertex from each pair with at most `c0`
/// common `G+` neighbours. Each comes with the kept vertices.
pub fn h2_pairs(plus: &Graph, c0: usize) -> Vec<(usize, usize, Vec<usize>)> {
    let n = plus.n();
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    for v1 in 0..n {
        for v2 in v1 + 1..n {
            let c = plus.common_neighbor_count(v1, v2);
            if c >= 3 {
                pairs.push((c, v1, v2));
            }
        }
    }
    pairs.sort_by(|x, y| y.0.cmp(&x.0).then((x.1, x.2).cmp(&(y.1, y.2))));
    pairs
        .into_iter()
        .filter_map(|(_, v1, v2)| {
            let a = plus.common_neighbors(v1, v2).to_vec();
            let mut keep = a.clone();
            for (i, &u1) in a.iter().enumerate() {
                for &u2 in &a[i + 1..] {
                    if keep.contains(&u1) && keep.contains(&u2) && plus.common_neighbor_count(u1, u2) <= c0 {
                        keep.retain(|&x| x != u2);
                    }
                }
            }
            (keep.len() >= 3).then_some((v1, v2, keep))
        })
        .collect()
}

/// Whether `E[|A| − |P|] >= 3` for a uniformly random pair, computed
/// exactly: `Σ_u C(d+(u), 2) − Σ_{c(u,w) <= c0} C(c(u,w), 2) >= 3 C(N, 2)`.
pub fn h2_expectation_holds(plus: &Graph, c0: usize) -> bool {
    let n = plus.n() as u128;
    let c2 = |x: u128| x * x.saturating_sub(1) / 2;
    let a: u128 = (0..plus.n()).map(|u| c2(plus.degree(u) as u128)).sum();
    let mut p: u128 = 0;
    for u in 0..plus.n() {
        for w in u + 1..plus.n() {
            let c = plus.common_neighbor_count(u, w);
            if c <= c0 {
                p += c2(c as u128);
            }
        }
    }
    a >= p + 3 * c2(n)
}

/// Returns a copy of the subdivision `H` in `G` or a copy of `F` in the
/// complement.
///
/// Order of attempts: a budgeted exact search for `H`; the degeneracy
/// embedding; triangle elimination; the sparse-`G+` independent set; the
/// case matching `H`'s base; a budgeted search for a base core inside
/// `G+`; unchecked greedy completions. `FAILURE` lists why each step
/// gave up.
pub fn subdivision_vs_graph(g: &Graph, h: &Graph, f: &Graph, cfg: &Config) -> Result<DichotomyResult> {
    cfg.validate()?;
    let pattern = classify_subdivision(h)?;
    if h.n() < 6 {
        return Err(Error::Precondition(format!(
            "subdivision has {} vertices, need at least 6",
            h.n()
        )));
    }
    if f.edge_count() == 0 || (0..f.n()).any(|v| f.degree(v) == 0) {
        return Err(Error::Precondition(
            "target must have edges and no isolated vertices".into(),
        ));
    }
    if let SearchOutcome::Found(e) = subgraph_find_budget(g, h, cfg.search_budget) {
        return Ok(DichotomyResult::PatternCopy(e));
    }
    if degeneracy_condition(f, g) {
        if let Ok(e) = embed_by_degeneracy(f, g) {
            return Ok(DichotomyResult::ComplementEmbedding(e));
        }
    }
    let mut notes = Vec::new();
    match eliminate_triangles(g, cfg.c0) {
        Ok(trace) => {
            let b = minus_edges_in_neighbourhoods(g, &trace);
            let mut ctx = Ctx {
                g,
                f,
                trace: &trace,
                pattern: &pattern,
                b,
                notes: Vec::new(),
            };
            if let Some(w) = sparse_plus_witness(g, &trace) {
                if let Some(r) = ctx.independent(w.independent.as_slice()) {
                    return Ok(r);
                }
                ctx.notes.push("fewer than half the edges are in G+".into());
            }
            let found = match pattern.base {
                Base::H1 => ctx.case_one(),
                Base::H2 => ctx.case_two(),
                Base::H3 => ctx.case_three(),
                Base::K4 | Base::K4Star => None,
            };
            if let Some(r) = found.or_else(|| ctx.core_search(cfg.search_budget)) {
                return Ok(r);
            }
            notes.append(&mut ctx.notes);
        }
        Err(err) => notes.push(format!("elimination: {err}")),
    }
    if let Some(e) = try_embed_by_degeneracy(f, g) {
        return Ok(DichotomyResult::ComplementEmbedding(e));
    }
    let is = few_triangle_independent_set(g, triangle_count(g), cfg.seed).set;
    if let Some(e) = complete_from_independent(f, g, is.as_slice()) {
        return Ok(DichotomyResult::ComplementEmbedding(e));
    }
    notes.push("greedy completion ran out of candidates".into());
    notes.dedup();
    Ok(DichotomyResult::failure(notes.join("; ")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::instances;
    use crate::patterns;
    use crate::witness::{verify_witness, WitnessContext};

    #[test]
    fn dense_host_gives_copy() {
        let g = Graph::complete(20);
        let r = subdivision_vs_graph(&g, &patterns::h3(), &patterns::path(3), &Config::default()).unwrap();
        assert!(matches!(r, DichotomyResult::PatternCopy(_)));
    }

    #[test]
    fn empty_host_gives_target() {
        let f = patterns::cycle(4);
        let g = Graph::new(16);
        let r = subdivision_vs_graph(&g, &patterns::h1(), &f, &Config::default()).unwrap();
        assert!(verify_witness(&r, &WitnessContext::new(&g).target(&f)));
    }

    #[test]
    fn rejects_small_or_bad_patterns() {
        let cfg = Config::default();
        let g = Graph::new(10);
        let f = patterns::path(2);
        assert!(subdivision_vs_graph(&g, &patterns::k4_star(), &f, &cfg).is_err());
        assert!(subdivision_vs_graph(&g, &patterns::cycle(6), &f, &cfg).is_err());
    }

    #[test]
    fn cases_without_prepass() {
        // the cases alone must find cores in complete graphs
        let g = Graph::complete(14);
        let trace = eliminate_triangles(&g, 3).unwrap();
        for h in [patterns::h1(), patterns::h2(), patterns::h3()] {
            let pattern = classify_subdivision(&h).unwrap();
            let mut ctx = Ctx {
                g: &g,
                f: &patterns::path(2),
                trace: &trace,
                pattern: &pattern,
                b: minus_edges_in_neighbourhoods(&g, &trace),
                notes: Vec::new(),
            };
            let r = match pattern.base {
                Base::H1 => ctx.case_one(),
                Base::H2 => ctx.case_two(),
                _ => ctx.case_three(),
            }
            .unwrap();
            assert!(verify_witness(&r, &WitnessContext::new(&g).pattern(&h)), "{h:?}");
        }
    }

    #[test]
    fn degenerate_set_size() {
        let g = patterns::cycle(9);
        let s = degenerate_independent_set(&g);
        assert!(g.is_independent(s.as_slice()));
        assert!(s.len() >= 3);
    }

    #[test]
    fn random_witnesses_verify() {
        let cfg = Config::default();
        for i in 0..20 {
            let g = instances::gnp(30, 0.2 + 0.03 * (i % 8) as f64, i);
            let h = [patterns::h1(), patterns::h2(), patterns::h3()][i as usize % 3].clone();
            let f = patterns::cycle(4);
            let r = subdivision_vs_graph(&g, &h, &f, &cfg).unwrap();
            if !r.is_failure() {
                assert!(
                    verify_witness(&r, &WitnessContext::new(&g).pattern(&h).target(&f)),
                    "{r}"
                );
            }
        }
    }
}
