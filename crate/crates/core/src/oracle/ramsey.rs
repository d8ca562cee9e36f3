//! Exact small Ramsey numbers by orderly generation.

use std::collections::HashSet;

use crate::embedding::Mode;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::canon::canonical_code;
use crate::oracle::search::{find_embedding, SearchOutcome, SearchSpec};

/// Graphs kept per level before the search gives up.
pub const MAX_LEVEL_GRAPHS: usize = 2_000_000;
/// Largest host size the canonical forms support.
pub const MAX_RAMSEY_N: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RamseyValue {
    /// The exact value, with a largest good graph (one vertex smaller).
    Exact { value: usize, witness: Graph },
    /// Good graphs exist on `nmax` vertices; one is attached.
    Above { nmax: usize, witness: Graph },
}

impl RamseyValue {
    pub fn value(&self) -> Option<usize> {
        match self {
            RamseyValue::Exact { value, .. } => Some(*value),
            RamseyValue::Above { .. } => None,
        }
    }

    pub fn witness(&self) -> &Graph {
        match self {
            RamseyValue::Exact { witness, .. } | RamseyValue::Above { witness, .. } => witness,
        }
    }
}

/// Whether some copy of `p` (in `g` or its complement) uses vertex `v`.
fn copy_through(p: &Graph, g: &Graph, mode: Mode, v: usize) -> bool {
    (0..p.n()).any(|x| {
        let spec = SearchSpec {
            pinned: &[(x, v)],
            ..SearchSpec::default()
        };
        matches!(find_embedding(p, g, mode, &spec), SearchOutcome::Found(_))
    })
}

/// `R(H, F)`: the least `N` such that every graph on `N` vertices contains
/// `H` or has `F` in its complement.
///
/// Builds the good graphs (no `H`, no `F` in the complement) level by
/// level: each good graph on `k + 1` vertices is a good graph on `k`
/// vertices plus one vertex, so extending every representative by every
/// neighbourhood and keeping one graph per isomorphism class is complete.
pub fn ramsey_exact(h: &Graph, f: &Graph, nmax: usize) -> Result<RamseyValue> {
    if nmax > MAX_RAMSEY_N {
        return Err(Error::TooLarge(format!("nmax is limited to {MAX_RAMSEY_N}")));
    }
    if h.n() == 0 || f.n() == 0 {
        return Ok(RamseyValue::Exact {
            value: 0,
            witness: Graph::new(0),
        });
    }
    let mut level = vec![Graph::new(0)];
    for k in 1..=nmax {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..(1u32 << (k - 1)) {
                let mut cand = Graph::new(k);
                for (u, v) in g.edges() {
                    cand.add_edge(u, v);
                }
                for u in 0..k - 1 {
                    if mask >> u & 1 == 1 {
                        cand.add_edge(u, k - 1);
                    }
                }
                if copy_through(h, &cand, Mode::Host, k - 1) || copy_through(f, &cand, Mode::Complement, k - 1) {
                    continue;
                }
                if seen.insert(canonical_code(&cand)) {
                    next.push(cand);
                }
            }
        }
        if next.is_empty() {
            return Ok(RamseyValue::Exact {
                value: k,
                witness: level.swap_remove(0),
            });
        }
        if next.len() > MAX_LEVEL_GRAPHS {
            return Err(Error::TooLarge(format!(
                "{} good graphs on {k} vertices exceed the limit",
                next.len()
            )));
        }
        level = next;
    }
    Ok(RamseyValue::Above {
        nmax,
        witness: level.swap_remove(0),
    })
}

/// `(v(T) - 1)(n - 1) + 1`, the value of `R(T, K_n)` for a tree `T`.
pub fn tree_clique_value(tree_order: usize, n: usize) -> usize {
    (tree_order - 1) * (n - 1) + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::search::subgraph_find;
    use crate::patterns;

    #[test]
    fn small_values() {
        let k2 = Graph::complete(2);
        let k3 = Graph::complete(3);
        assert_eq!(ramsey_exact(&k2, &k2, 5).unwrap().value(), Some(2));
        assert_eq!(ramsey_exact(&patterns::path(3), &k3, 8).unwrap().value(), Some(5));
        let r33 = ramsey_exact(&k3, &k3, 8).unwrap();
        assert_eq!(r33.value(), Some(6));
        let w = r33.witness();
        assert_eq!(w.n(), 5);
        assert!(subgraph_find(w, &k3).is_none());
        assert!(subgraph_find(&w.complement(), &k3).is_none());
    }

    #[test]
    fn bounded_search_reports_above() {
        let k3 = Graph::complete(3);
        match ramsey_exact(&k3, &k3, 4).unwrap() {
            RamseyValue::Above { nmax, witness } => {
                assert_eq!(nmax, 4);
                assert_eq!(witness.n(), 4);
            }
            other => panic!("{other:?}"),
        }
    }
}
