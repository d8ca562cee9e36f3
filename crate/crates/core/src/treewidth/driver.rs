//! Copies of sparse connected patterns versus independent sets.

use crate::config::Config;
use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::{is_connected, Graph};
use crate::lemmas::{glue_embedding, split_leaf_block, GlueOutcome, InnerOutcome};
use crate::oracle::search::{subgraph_find_budget, SearchOutcome};
use crate::subdivision::{classify_subdivision, subdivision_vs_graph};
use crate::witness::DichotomyResult;

use super::embed::embed_via_treewidth;

/// Largest excess `e(H) - v(H)` accepted.
pub const MAX_EXCESS: i64 = 4;

fn lowest_max_degree(g: &Graph) -> usize {
    (0..g.n())
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .unwrap_or(0)
}

struct Solver<'a> {
    n: usize,
    cfg: &'a Config,
    notes: Vec<String>,
}

impl Solver<'_> {
    fn solve(&mut self, h: &Graph, g: &Graph) -> Result<DichotomyResult> {
        if let Some(split) = split_leaf_block(h) {
            let copies = (g.n() / (split.h1.n() + 1)).max(1);
            let budget = self.cfg.search_budget;
            let mut failure: Option<Error> = None;
            let out = glue_embedding(
                &split.h1,
                split.v1,
                &split.h2,
                split.v2,
                g,
                copies,
                budget,
                |p, sub| match self.solve(p, &sub.graph) {
                    Ok(DichotomyResult::PatternCopy(e)) => InnerOutcome::Found(e.map),
                    Ok(r @ DichotomyResult::IndependentSet(_)) => InnerOutcome::Escape(r),
                    Ok(_) => InnerOutcome::Absent,
                    Err(e) => {
                        failure.get_or_insert(e);
                        InnerOutcome::Absent
                    }
                },
            );
            if let Some(e) = failure {
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
        if h.n() <= 5 || h.max_degree() <= 2 {
            return embed_via_treewidth(h, g, self.n, self.cfg);
        }
        if h.n() >= 6 && classify_subdivision(h).is_ok() && self.n >= 2 {
            match subdivision_vs_graph(g, h, &Graph::complete(self.n), self.cfg)? {
                DichotomyResult::ComplementEmbedding(e) => {
                    return Ok(DichotomyResult::IndependentSet(e.map.iter().copied().collect()));
                }
                DichotomyResult::Failure(why) => {
                    self.notes.push(format!("subdivision driver: {why}"));
                    return self.fallback(h, g);
                }
                other => return Ok(other),
            }
        }
        // peel a top-degree pattern vertex onto a top-degree host vertex
        let v = lowest_max_degree(h);
        let peeled = h.remove_vertex(v);
        let x = lowest_max_degree(g);
        let nbhd: Vec<usize> = g.neighbors(x).collect();
        if nbhd.len() >= peeled.graph.n() {
            let sub = g.induced_unchecked(&nbhd);
            match self.solve(&peeled.graph, &sub.graph)? {
                DichotomyResult::PatternCopy(e) => {
                    let mut map = vec![x; h.n()];
                    for (i, &hv) in peeled.parent.iter().enumerate() {
                        map[hv] = sub.parent[e.map[i]];
                    }
                    return Ok(DichotomyResult::PatternCopy(Embedding::host(map)));
                }
                r @ DichotomyResult::IndependentSet(_) => return Ok(r.lift(&sub.parent)),
                DichotomyResult::Failure(why) => self.notes.push(format!("inside N({x}): {why}")),
                _ => {}
            }
        } else {
            self.notes.push(format!("N({x}) has {} vertices", nbhd.len()));
        }
        self.fallback(h, g)
    }

    fn fallback(&mut self, h: &Graph, g: &Graph) -> Result<DichotomyResult> {
        if h.n() <= super::decomposition::MAX_TREEWIDTH_VERTICES {
            let r = embed_via_treewidth(h, g, self.n, self.cfg)?;
            if !r.is_failure() {
                return Ok(r);
            }
        }
        if let SearchOutcome::Found(e) = subgraph_find_budget(g, h, self.cfg.search_budget) {
            return Ok(DichotomyResult::PatternCopy(e));
        }
        Ok(DichotomyResult::failure(format!(
            "no copy of a {}-vertex pattern and no independent set of size {}",
            h.n(),
            self.n
        )))
    }
}

/// Copy of a connected `h` with `e(H) <= v(H) + 4` in `g`, or an
/// independent set of size `n`.
///
/// Leaf blocks are glued on at cut vertices. Blocks with at most five
/// vertices or maximum degree two go to [`embed_via_treewidth`]; larger
/// subdivisions of `K4` go to the subdivision driver against `K_n`;
/// otherwise a maximum-degree pattern vertex is mapped to a
/// maximum-degree host vertex and the rest is found in its neighbourhood.
pub fn sparse_pattern_vs_clique(h: &Graph, g: &Graph, n: usize, cfg: &Config) -> Result<DichotomyResult> {
    cfg.validate()?;
    if h.n() == 0 || !is_connected(h) {
        return Err(Error::Precondition("pattern must be connected and nonempty".into()));
    }
    let excess = h.edge_count() as i64 - h.n() as i64;
    if excess > MAX_EXCESS {
        return Err(Error::Precondition(format!(
            "pattern has e - v = {excess}, at most {MAX_EXCESS} is supported"
        )));
    }
    if n <= 1 && g.n() >= n {
        return Ok(DichotomyResult::IndependentSet((0..n).collect()));
    }
    let mut solver = Solver {
        n,
        cfg,
        notes: Vec::new(),
    };
    let out = solver.solve(h, g)?;
    Ok(match out {
        DichotomyResult::Failure(why) if !solver.notes.is_empty() => {
            DichotomyResult::Failure(format!("{why}; {}", solver.notes.join("; ")))
        }
        other => other,
    })
}

/// Whether `h` falls in the family handled by [`sparse_pattern_vs_clique`].
pub fn is_sparse_connected(h: &Graph) -> bool {
    h.n() > 0 && is_connected(h) && h.edge_count() as i64 - h.n() as i64 <= MAX_EXCESS
}
