#![allow(dead_code)]

use ramsey_core::embedding::{Embedding, Mode};
use ramsey_core::graph::{greedy_independent_set, Graph};
use ramsey_core::lemmas::{bipartite_greedy_extend, embed_by_degeneracy, greedy_extend, top_k, Regularized};
use ramsey_core::oracle::canon::next_permutation;
use ramsey_core::oracle::instances::{gnp_with, random_bipartite_pattern, random_target, rng};
use ramsey_core::patterns;
use ramsey_core::subdivision::EliminationTrace;
use ramsey_core::Error;
use ramsey_core::VertexSet;
use rand::Rng;

/// Every triangle of `g` as a sorted triple, by triple enumeration.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Largest number of later neighbours a vertex has once `order` is
/// eliminated with fill.
fn fill_width(g: &Graph, order: &[usize]) -> usize {
    let n = g.n();
    let mut adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
    let mut width = 0;
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = order[i + 1..].iter().copied().filter(|&w| adj[v][w]).collect();
        width = width.max(later.len());
        for &a in &later {
            for &b in &later {
                if a != b {
                    adj[a][b] = true;
                }
            }
        }
    }
    width
}

/// Least `k` such that `g` is a subgraph of a `k`-tree on its own vertex
/// set. The filled graph of any order is such a subgraph when every vertex
/// has at most `k` later neighbours, and every `k`-tree arises this way, so
/// the minimum over all `n!` orders is exact.
pub fn brute_treewidth(g: &Graph) -> usize {
    let mut best = g.n().saturating_sub(1);
    let mut perm: Vec<usize> = (0..g.n()).collect();
    loop {
        best = best.min(fill_width(g, &perm));
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

/// Checks the partition, the surviving-triangle characterisation of `G+`,
/// property (a) by recounting, and replay of the recorded order.
pub fn check_trace(g: &Graph, t: &EliminationTrace, c0: usize) -> Result<(), String> {
    let mut minus = t.minus.clone();
    minus.sort_unstable();
    let before = minus.len();
    minus.dedup();
    if minus.len() != before {
        return Err("G- lists an edge twice".into());
    }
    for &(u, v) in &minus {
        if !g.has_edge(u, v) || t.plus.has_edge(u, v) {
            return Err(format!("G- edge {u}-{v} is not a G edge outside G+"));
        }
    }
    for (u, v) in t.plus.edges() {
        if !g.has_edge(u, v) {
            return Err(format!("G+ edge {u}-{v} is not in G"));
        }
    }
    if t.plus.edge_count() + minus.len() != g.edge_count() {
        return Err("G+ and G- do not cover E(G)".into());
    }
    let plus_triangles = triangles(&t.plus);
    for (u, v) in t.plus.edges() {
        let through = plus_triangles
            .iter()
            .filter(|tr| tr.contains(&u) && tr.contains(&v))
            .count();
        if through < c0 {
            return Err(format!("G+ edge {u}-{v} lies in {through} < {c0} G+ triangles"));
        }
        if !t.surviving.iter().any(|tr| tr.contains(&u) && tr.contains(&v)) {
            return Err(format!("G+ edge {u}-{v} lies in no surviving triangle"));
        }
    }
    for tr in &t.surviving {
        let [a, b, c] = *tr;
        if !(t.plus.has_edge(a, b) && t.plus.has_edge(a, c) && t.plus.has_edge(b, c)) {
            return Err(format!("surviving triangle {tr:?} leaves G+"));
        }
    }
    let order: Vec<(usize, usize)> = t.order.iter().map(|s| s.edge).collect();
    let (plus, replay_minus) = ramsey_core::subdivision::replay(g, &order);
    if plus != t.plus || replay_minus != t.minus {
        return Err("replay differs".into());
    }
    Ok(())
}

/// Conclusions of the regularization lemma, with a small float slack on
/// the logarithmic bound.
pub fn check_regularized(g: &Graph, reg: &Regularized) -> Result<(), String> {
    let s = reg.set.as_slice();
    if 6 * s.len() < g.n() {
        return Err(format!("|S| = {} < N/6", s.len()));
    }
    if s.windows(2).any(|w| w[0] >= w[1]) || s.iter().any(|&v| v >= g.n()) {
        return Err("S is not a sorted vertex set".into());
    }
    if reg.independent {
        return if g.is_independent(s) {
            Ok(())
        } else {
            Err("S is marked independent but has an edge".into())
        };
    }
    if reg.removed + s.len() != g.n() {
        return Err("removed count does not match".into());
    }
    let sub = g.induced_unchecked(s).graph;
    let k = s.len() as f64;
    let dmax = sub.max_degree() as f64;
    let avg = 2.0 * sub.edge_count() as f64 / k;
    if dmax > avg * k.ln() * (1.0 + 1e-9) + 1e-9 {
        return Err(format!("max degree {dmax} exceeds {avg:.3} ln {k}"));
    }
    Ok(())
}

/// Contract of the empty bipartite split: subsets, floors, no cross edges.
pub fn check_split(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    r: usize,
    xp: &VertexSet,
    yp: &VertexSet,
) -> Result<(), String> {
    if !xp.iter().all(|&v| x.contains(v)) || !yp.iter().all(|&v| y.contains(v)) {
        return Err("split leaves X or Y".into());
    }
    if xp.len() < x.len() / (r + 1) || yp.len() < y.len() / (r + 1) {
        return Err(format!(
            "sizes {}/{} below floors {}/{}",
            xp.len(),
            yp.len(),
            x.len() / (r + 1),
            y.len() / (r + 1)
        ));
    }
    if g.edges_between(xp.as_slice(), yp.as_slice()) != 0 {
        return Err("cross edge".into());
    }
    Ok(())
}

/// Trees on at most four vertices, one per isomorphism class.
pub fn small_trees() -> Vec<(&'static str, Graph)> {
    vec![
        ("K1", Graph::new(1)),
        ("P2", patterns::path(2)),
        ("P3", patterns::path(3)),
        ("P4", patterns::path(4)),
        ("S3", patterns::star(3)),
    ]
}

/// All length vectors with `4 + Σ(ℓ - 1) <= max_order`.
pub fn subdivision_lengths(max_order: usize) -> Vec<[usize; 6]> {
    let extra = max_order.saturating_sub(4);
    let mut out = Vec::new();
    let mut cur = [1usize; 6];
    fn rec(i: usize, left: usize, cur: &mut [usize; 6], out: &mut Vec<[usize; 6]>) {
        if i == 6 {
            out.push(*cur);
            return;
        }
        for add in 0..=left {
            cur[i] = 1 + add;
            rec(i + 1, left - add, cur, out);
        }
        cur[i] = 1;
    }
    rec(0, extra, &mut cur, &mut out);
    out
}

/// Outcome of one lemma-contract instance.
#[derive(Debug)]
pub enum Contract {
    /// The lemma's numeric precondition failed.
    Skipped,
    Held,
    Violated(String),
}

fn edge_probability<R: Rng>(n: usize, target_edges: f64, rg: &mut R) -> f64 {
    let pairs = (n * (n - 1) / 2) as f64;
    (rg.random_range(0.2..1.3) * target_edges / pairs).clamp(0.0, 1.0)
}

/// Maps `anchors` onto distinct vertices of a greedy independent set.
fn anchor_map(f_n: usize, anchors: &[usize], g: &Graph) -> Option<Vec<Option<usize>>> {
    let is = greedy_independent_set(g);
    if is.len() < anchors.len() {
        return None;
    }
    let mut partial = vec![None; f_n];
    for (&x, &v) in anchors.iter().zip(is.iter()) {
        partial[x] = Some(v);
    }
    Some(partial)
}

fn judge(res: ramsey_core::Result<Embedding>, f: &Graph, g: &Graph, partial: &[Option<usize>]) -> Contract {
    match res {
        Err(Error::Precondition(_)) => Contract::Skipped,
        Err(e) => Contract::Violated(e.to_string()),
        Ok(e) => {
            if e.mode != Mode::Complement || !e.is_valid(f, g) {
                return Contract::Violated(format!("invalid embedding {e:?}"));
            }
            if partial
                .iter()
                .enumerate()
                .any(|(x, p)| p.is_some_and(|v| e.map[x] != v))
            {
                return Contract::Violated("anchors moved".into());
            }
            Contract::Held
        }
    }
}

/// Random instance of the greedy completion lemma with up to two anchors.
pub fn greedy_case(seed: u64) -> Contract {
    let mut rg = rng(seed);
    let v = rg.random_range(2..=6);
    let f = random_target(v, 0.5, &mut rg);
    let n = rg.random_range(30..=120);
    let m = f.edge_count() as f64;
    let target = ((n * n - 2 * v * n) as f64 / (16.0 * m)).max(1.0);
    let p = edge_probability(n, target, &mut rg);
    let g = gnp_with(n, p, &mut rg);
    let k = rg.random_range(0..=2.min(v));
    let all: Vec<usize> = (0..v).collect();
    let Some(partial) = anchor_map(v, &top_k(&f, &all, k), &g) else {
        return Contract::Skipped;
    };
    judge(greedy_extend(&f, &partial, &g), &f, &g, &partial)
}

/// Random instance of the two-phase bipartite completion lemma.
pub fn bipartite_case(seed: u64) -> Contract {
    let mut rg = rng(seed);
    let (a, b) = (rg.random_range(1..=3), rg.random_range(1..=3));
    let f = random_bipartite_pattern(a, b, 0.5, &mut rg);
    let fg = f.graph();
    let v = fg.n();
    let n = rg.random_range(30..=120);
    let m = fg.edge_count() as f64;
    let target = ((n * n - v * n) as f64 / (4.0 * m)).max(1.0);
    let p = edge_probability(n, target, &mut rg);
    let g = gnp_with(n, p, &mut rg);
    let ka = rg.random_range(0..=1);
    let kb = rg.random_range(0..=1);
    let mut anchors = top_k(fg, f.side_a().as_slice(), ka);
    anchors.extend(top_k(fg, f.side_b().as_slice(), kb));
    let Some(partial) = anchor_map(v, &anchors, &g) else {
        return Contract::Skipped;
    };
    judge(bipartite_greedy_extend(&f, &partial, &g), fg, &g, &partial)
}

/// Random instance of the degeneracy embedding lemma.
pub fn degeneracy_case(seed: u64) -> Contract {
    let mut rg = rng(seed);
    let v = rg.random_range(2..=6);
    let f = random_target(v, 0.5, &mut rg);
    let n = rg.random_range(30..=120);
    let m = f.edge_count() as f64;
    let nn = n as f64;
    let target = (nn * nn * (nn * nn - 2.0 * nn * v as f64) / (192.0 * m))
        .sqrt()
        .max(1.0);
    let p = edge_probability(n, target, &mut rg);
    let g = gnp_with(n, p, &mut rg);
    judge(embed_by_degeneracy(&f, &g), &f, &g, &vec![None; v])
}
