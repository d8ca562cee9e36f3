//! Small-graph canonical forms and isomorphism-class catalogs.

use std::collections::HashSet;

use crate::graph::{is_connected, Graph};

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Permutations {
    Permutations {
        cur: (0..n).collect(),
        done: false,
    }
}

pub struct Permutations {
    cur: Vec<usize>,
    done: bool,
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        self.done = !next_permutation(&mut self.cur);
        Some(out)
    }
}

/// Advances to the next lexicographic permutation; false at the last one.
pub fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Stable colour refinement starting from degrees. Returns a colour per
/// vertex; colours are ranks, so they are isomorphism-invariant.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<usize> = g.degrees();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| sorted.binary_search(s).unwrap()).collect();
        let classes = |c: &[usize]| c.iter().collect::<HashSet<_>>().len();
        if classes(&next) == classes(&color) {
            return next;
        }
        color = next;
    }
}

/// Canonical code of a graph on at most 16 vertices: the lexicographically
/// largest upper-triangle bit string over all labellings that list colour
/// classes in colour order. Two graphs are isomorphic iff their codes (and
/// vertex counts) agree.
pub fn canonical_code(g: &Graph) -> (usize, u128) {
    let n = g.n();
    assert!(n <= 16, "canonical_code supports at most 16 vertices");
    let color = refine(g);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| color[v]);
    for &v in &order {
        match cells.last_mut() {
            Some(c) if color[c[0]] == color[v] => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = 0u128;
    let mut labelling = Vec::with_capacity(n);
    search_cells(g, &cells, 0, &mut labelling, &mut best);
    (n, best)
}

fn search_cells(g: &Graph, cells: &[Vec<usize>], idx: usize, labelling: &mut Vec<usize>, best: &mut u128) {
    if idx == cells.len() {
        let code = code_of(g, labelling);
        if code > *best {
            *best = code;
        }
        return;
    }
    let mut cell = cells[idx].clone();
    cell.sort_unstable();
    loop {
        let base = labelling.len();
        labelling.extend_from_slice(&cell);
        search_cells(g, cells, idx + 1, labelling, best);
        labelling.truncate(base);
        if !next_permutation(&mut cell) {
            break;
        }
    }
}

/// `labelling[i]` is the original vertex placed at position `i`.
fn code_of(g: &Graph, labelling: &[usize]) -> u128 {
    let n = labelling.len();
    let mut code = 0u128;
    for i in 0..n {
        for j in (i + 1)..n {
            code = (code << 1) | g.has_edge(labelling[i], labelling[j]) as u128;
        }
    }
    code
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && {
            let mut da = a.degrees();
            let mut db = b.degrees();
            da.sort_unstable();
            db.sort_unstable();
            da == db
        }
        && canonical_code(a) == canonical_code(b)
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// built by vertex augmentation with canonical deduplication.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::new(0)];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..(1u32 << (k - 1)) {
                let mut h = Graph::new(k);
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for u in 0..k - 1 {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, k - 1);
                    }
                }
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

/// Connected graphs on exactly `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    graphs_up_to_iso(n).into_iter().filter(is_connected).collect()
}

/// Every labelled graph on `n <= 6` vertices.
pub fn all_labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 7, "too many labelled graphs");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let mut g = Graph::new(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    })
}
