//! Replacing core edges by paths inside `G+` neighbourhoods.

use crate::bitset::Bitset;
use crate::embedding::{Embedding, Mode};
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::elimination::EliminationTrace;
use super::pattern::Layout;

/// Node budget of each path search.
pub const PATH_BUDGET: u64 = 50_000;

/// Simple path `start = p0, p1, ..., p_len` with `p1..` in `allowed`, in
/// the graph `plus`. Lowest ids first; `None` if absent or over budget.
fn path_from(plus: &Graph, allowed: &Bitset, start: usize, len: usize, budget: u64) -> Option<Vec<usize>> {
    fn go(plus: &Graph, allowed: &mut Bitset, path: &mut Vec<usize>, len: usize, budget: &mut u64) -> bool {
        if path.len() == len + 1 {
            return true;
        }
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        let last = *path.last().unwrap();
        let mut next = Bitset::from_words(plus.n(), plus.row(last));
        next.intersect_with(allowed.words());
        for w in next.iter() {
            allowed.remove(w);
            path.push(w);
            if go(plus, allowed, path, len, budget) {
                return true;
            }
            path.pop();
            allowed.insert(w);
        }
        false
    }
    let mut allowed = allowed.clone();
    allowed.remove(start);
    let mut path = vec![start];
    let mut budget = budget;
    go(plus, &mut allowed, &mut path, len, &mut budget).then_some(path)
}

/// `h` paths of length `h` in `G+`, all starting at `x`, disjoint apart
/// from `x`, with every vertex in `N+(y)`.
///
/// Built greedily one path at a time (each path by a short backtracking
/// search). The greedy argument needs `G+[N+(y)]` to have minimum degree
/// at least `h²`, which the process guarantees when `C0 >= h²`.
pub fn subdivision_paths(trace: &EliminationTrace, x: usize, y: usize, h: usize) -> Result<Vec<Vec<usize>>> {
    let plus = &trace.plus;
    if x >= plus.n() || y >= plus.n() || !plus.has_edge(x, y) {
        return Err(Error::Precondition(format!("({x}, {y}) is not an edge of G+")));
    }
    let mut allowed = Bitset::from_words(plus.n(), plus.row(y));
    let mut out = Vec::with_capacity(h);
    for i in 0..h {
        let Some(p) = path_from(plus, &allowed, x, h, PATH_BUDGET) else {
            let hint = if trace.c0 < h * h {
                format!(" (C0 = {} is below h² = {})", trace.c0, h * h)
            } else {
                String::new()
            };
            return Err(Error::Precondition(format!(
                "found {i} of {h} paths from {x} inside N+({y}){hint}"
            )));
        };
        for &v in &p[1..] {
            allowed.remove(v);
        }
        out.push(p);
    }
    Ok(out)
}

/// Extends a copy of the layout's base (its subdivided edges in `G+`) to
/// a copy of `H` in `G`.
///
/// For each subdivided base edge `(x, y)` needing length `k`, takes a
/// path `x, p1, ..., p_{k-1}` inside `N+(y)` avoiding all used vertices
/// (from the candidate paths when they exist, otherwise by a direct
/// search, trying both orientations) and closes it at `y`.
pub fn assemble_subdivision(
    core: &Embedding,
    layout: &Layout,
    trace: &EliminationTrace,
    g: &Graph,
) -> Result<Embedding> {
    let plus = &trace.plus;
    core.check(&layout.graph, g)
        .map_err(|e| Error::Precondition(format!("core is not a copy of the base: {e}")))?;
    for (a, b) in layout.subdivided() {
        if !plus.has_edge(core.map[a], core.map[b]) {
            return Err(Error::Precondition(format!(
                "subdivided edge ({}, {}) is not in G+",
                core.map[a], core.map[b]
            )));
        }
    }
    let mut map = vec![usize::MAX; layout.order];
    let mut used = Bitset::new(g.n());
    for (i, &hv) in layout.vertices.iter().enumerate() {
        map[hv] = core.map[i];
        used.insert(core.map[i]);
    }
    for (a, b, seg) in &layout.segments {
        let k = seg.len() - 1;
        if k < 2 {
            continue;
        }
        let mut placed = false;
        for (x, y, forward) in [(core.map[*a], core.map[*b], true), (core.map[*b], core.map[*a], false)] {
            let Some(p) = interior_path(trace, &used, x, y, k, layout.order) else {
                continue;
            };
            let inner = &p[1..k];
            for (j, &v) in inner.iter().enumerate() {
                let hv = if forward { seg[1 + j] } else { seg[k - 1 - j] };
                map[hv] = v;
                used.insert(v);
            }
            placed = true;
            break;
        }
        if !placed {
            return Err(Error::Precondition(format!(
                "no path of length {k} between {} and {} avoiding used vertices",
                core.map[*a], core.map[*b]
            )));
        }
    }
    let e = Embedding::new(map, Mode::Host);
    e.check(&layout.to_graph(), g)
        .map_err(|err| Error::Invariant(format!("assembled copy is invalid: {err}")))?;
    Ok(e)
}

/// `x = p0, ..., p_{k-1}` inside `N+(y)`, new vertices unused.
fn interior_path(
    trace: &EliminationTrace,
    used: &Bitset,
    x: usize,
    y: usize,
    k: usize,
    h: usize,
) -> Option<Vec<usize>> {
    if let Ok(paths) = subdivision_paths(trace, x, y, h.max(k)) {
        if let Some(p) = paths.iter().find(|p| p[1..k].iter().all(|&v| !used.contains(v))) {
            return Some(p[..k].to_vec());
        }
    }
    let plus = &trace.plus;
    let mut allowed = Bitset::from_words(plus.n(), plus.row(y));
    allowed.difference_with(used.words());
    path_from(plus, &allowed, x, k - 1, PATH_BUDGET)
}
