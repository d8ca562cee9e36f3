//! Bag-by-bag embedding of bounded-treewidth patterns.

use crate::config::Config;
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::{count_cliques, greedy_independent_set, Graph, VertexSet};
use crate::oracle::alpha::independent_set_of_size;
use crate::oracle::search::SearchOutcome;
use crate::witness::DichotomyResult;

use super::cliques::clique_process;
use super::decomposition::{smooth_tree_decomposition, TreeDecomposition};

/// Hosts up to this size (with `n` up to [`EXACT_ALPHA_SIZE`]) get an
/// exact independent-set search.
pub const EXACT_ALPHA_HOST: usize = 128;
pub const EXACT_ALPHA_SIZE: usize = 12;
/// Windows whose clique count exceeds this stop the window growth.
pub const MAX_WINDOW_CLIQUES: u64 = 2_000_000;

/// An independent set of size `n` in `g`, exact on small inputs and
/// greedy otherwise; `Err` carries the largest size seen.
pub(crate) fn independent_fallback(g: &Graph, n: usize, budget: u64) -> std::result::Result<VertexSet, usize> {
    let greedy = greedy_independent_set(g);
    if greedy.len() >= n {
        let mut s = greedy;
        s.truncate(n);
        return Ok(s);
    }
    if g.n() <= EXACT_ALPHA_HOST && n <= EXACT_ALPHA_SIZE {
        if let SearchOutcome::Found(s) = independent_set_of_size(g, n, budget) {
            return Ok(s);
        }
    }
    Err(greedy.len())
}

/// Places bags in breadth-first order: the root on a surviving
/// `(r+1)`-clique, each later bag on a surviving clique extending the
/// image of the part it shares with its parent by an unused vertex.
fn place_bags(td: &TreeDecomposition, h_n: usize, r: usize, g: &Graph) -> Result<Option<Vec<usize>>> {
    let pair = clique_process(g, r, h_n - r - 1);
    let Some(root_img) = pair.upper.first() else {
        return Ok(None);
    };
    let ext = pair.extensions();
    let mut map = vec![usize::MAX; h_n];
    let mut used = vec![false; g.n()];
    for (&hv, &gv) in td.bags[0].iter().zip(root_img) {
        map[hv] = gv;
        used[gv] = true;
    }
    for (t, parent) in td.bfs_order().into_iter().skip(1) {
        let parent = parent.expect("non-root bag has a parent");
        let shared: Vec<usize> = td.bags[t]
            .iter()
            .copied()
            .filter(|v| td.bags[parent].contains(v))
            .collect();
        let fresh = td.bags[t]
            .iter()
            .copied()
            .find(|v| !td.bags[parent].contains(v))
            .ok_or_else(|| Error::Invariant(format!("bag {t} adds no vertex")))?;
        let mut img: Vec<usize> = shared.iter().map(|&v| map[v]).collect();
        img.sort_unstable();
        let choice = ext
            .get(&img)
            .and_then(|cands| cands.iter().copied().find(|&w| !used[w]))
            .ok_or_else(|| Error::Invariant(format!("no unused extension of {img:?}")))?;
        map[fresh] = choice;
        used[choice] = true;
    }
    Ok(Some(map))
}

/// Copy of `h` in `g` or an independent set of size `n`.
///
/// Runs the clique process with support `v(H) - tw(H) - 1` on growing
/// prefixes of `g` (doubling from `max(2 v(H), 12)` vertices) and embeds
/// the smooth decomposition bag by bag into the first nonempty family.
/// Without a copy, falls back to an independent-set search; `FAILURE`
/// reports the best size found.
pub fn embed_via_treewidth(h: &Graph, g: &Graph, n: usize, cfg: &Config) -> Result<DichotomyResult> {
    let td = smooth_tree_decomposition(h)?;
    let r = td.width();
    let h_n = h.n();
    if h_n == 0 {
        return Ok(DichotomyResult::PatternCopy(Embedding::host(Vec::new())));
    }
    if h.edge_count() == 0 {
        if g.n() >= h_n {
            return Ok(DichotomyResult::PatternCopy(Embedding::host((0..h_n).collect())));
        }
    } else {
        let mut window = g.n().min((2 * h_n).max(12));
        loop {
            let prefix: Vec<usize> = (0..window).collect();
            let sub = g.induced_unchecked(&prefix);
            if count_cliques(&sub.graph, r + 1) > MAX_WINDOW_CLIQUES {
                break;
            }
            if let Some(map) = place_bags(&td, h_n, r, &sub.graph)? {
                let e = Embedding::host(map);
                e.check(h, g)
                    .map_err(|err| Error::Invariant(format!("bag embedding is invalid: {err}")))?;
                return Ok(DichotomyResult::PatternCopy(e));
            }
            if window == g.n() {
                break;
            }
            window = (2 * window).min(g.n());
        }
    }
    match independent_fallback(g, n, cfg.search_budget) {
        Ok(s) => Ok(DichotomyResult::IndependentSet(s)),
        Err(best) => Ok(DichotomyResult::failure(format!(
            "clique process left no copy and the best independent set has {best} of {n} vertices"
        ))),
    }
}
