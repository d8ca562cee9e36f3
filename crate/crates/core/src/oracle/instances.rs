//! Reproducible random and structured instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::lemmas::BipartitePattern;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    gnp_with(n, p, &mut rng(seed))
}

pub fn gnp_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p.clamp(0.0, 1.0)) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random graph with exactly `m` edges (capped at `C(n, 2)`).
pub fn gnm<R: Rng>(n: usize, m: usize, rng: &mut R) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut g = Graph::new(n);
    for &(u, v) in pairs.iter().take(m) {
        g.add_edge(u, v);
    }
    g
}

/// Randomly relabels the vertices.
pub fn shuffle_labels<R: Rng>(g: &Graph, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.permute(&perm)
}

/// `G(n, p)` with an independent set planted on `size` random vertices.
pub fn planted_independent_set<R: Rng>(n: usize, p: f64, size: usize, rng: &mut R) -> Graph {
    let mut g = gnp_with(n, p, rng);
    let mut vs: Vec<usize> = (0..n).collect();
    vs.shuffle(rng);
    let plant = &vs[..size.min(n)];
    for (i, &u) in plant.iter().enumerate() {
        for &v in &plant[i + 1..] {
            g.remove_edge(u, v);
        }
    }
    g
}

/// Complete multipartite graph on `n` vertices with parts of random sizes
/// in `1..=max_part`, randomly labelled. Its independence number is the
/// largest part size.
pub fn random_multipartite<R: Rng>(n: usize, max_part: usize, rng: &mut R) -> Graph {
    let mut parts = Vec::new();
    let mut left = n;
    while left > 0 {
        let s = rng.random_range(1..=max_part.max(1)).min(left);
        parts.push(s);
        left -= s;
    }
    shuffle_labels(&crate::patterns::complete_multipartite(&parts), rng)
}

/// Disjoint union of cliques of size `k` (plus a remainder clique).
/// Independence number is `ceil(n / k)`.
pub fn clique_union(n: usize, k: usize) -> Graph {
    let mut g = Graph::new(n);
    let k = k.max(1);
    for start in (0..n).step_by(k) {
        let end = (start + k).min(n);
        for u in start..end {
            for v in (u + 1)..end {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random bipartite pattern with sides of the given sizes and no isolated
/// vertices: a random spanning structure plus extra edges with
/// probability `p`.
pub fn random_bipartite_pattern<R: Rng>(a: usize, b: usize, p: f64, rng: &mut R) -> BipartitePattern {
    assert!(a >= 1 && b >= 1);
    let mut g = Graph::new(a + b);
    for x in 0..a {
        for y in 0..b {
            if rng.random_bool(p) {
                g.add_edge(x, a + y);
            }
        }
    }
    for x in 0..a {
        if g.degree(x) == 0 {
            let y = rng.random_range(0..b);
            g.add_edge(x, a + y);
        }
    }
    for y in 0..b {
        if g.degree(a + y) == 0 {
            let x = rng.random_range(0..a);
            g.add_edge(x, a + y);
        }
    }
    BipartitePattern::with_sides(g, (0..a).collect(), (a..a + b).collect()).expect("constructed across the sides")
}

/// Random graph on `n` vertices with no isolated vertices.
pub fn random_target<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = gnp_with(n, p, rng);
    for v in 0..n {
        if g.degree(v) == 0 && n > 1 {
            let mut w = rng.random_range(0..n - 1);
            if w >= v {
                w += 1;
            }
            g.add_edge(v, w);
        }
    }
    g
}

/// Hosts that stress greedy embedders: complete bipartite, disjoint
/// cliques, a planted hole, a star forest and a near-regular graph.
pub fn adversarial_host<R: Rng>(n: usize, kind: usize, rng: &mut R) -> Graph {
    let g = match kind % 6 {
        0 => crate::patterns::complete_bipartite(n / 2, n - n / 2),
        1 => clique_union(n, rng.random_range(2..=n.clamp(2, 8))),
        2 => planted_independent_set(n, 0.7, n / 4, rng),
        3 => {
            let mut g = Graph::new(n);
            let hubs = (n / 8).max(1);
            for v in hubs..n {
                g.add_edge(v % hubs, v);
            }
            g
        }
        4 => {
            let mut g = Graph::new(n);
            let step = rng.random_range(1..n.max(2));
            for v in 0..n {
                let w = (v + step) % n;
                if w != v {
                    g.add_edge(v, w);
                }
            }
            g
        }
        _ => gnp_with(n, rng.random_range(0.05..0.95), rng),
    };
    shuffle_labels(&g, rng)
}
