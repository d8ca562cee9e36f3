use crate::error::{Error, Result};
use crate::graph::{greedy_independent_set, Graph, VertexSet};

/// Result of the max-degree deletion process.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regularized {
    /// Surviving vertex set.
    pub set: VertexSet,
    /// Number of deleted vertices.
    pub removed: usize,
    /// True when the process ran out of steps and the set is the
    /// independent half of the final graph.
    pub independent: bool,
}

/// Lower bound on `ln(x)`, widened by a few ulps so that comparisons
/// against it are sound.
fn ln_lower(x: usize) -> f64 {
    let l = (x as f64).ln();
    l - l.abs() * 8.0 * f64::EPSILON
}

/// Whether `a <= b * ln(n)` certainly holds for non-negative integers.
pub fn certainly_le_times_ln(a: u64, b: u64, n: usize) -> bool {
    let rhs = b as f64 * ln_lower(n) * (1.0 - 4.0 * f64::EPSILON);
    (a as f64) <= rhs
}

/// Induced subgraph with `|S| >= N/6` and `Δ(G[S]) <= d(G[S]) ln |S|`.
///
/// Deletes a maximum-degree vertex (lowest id among ties) while the bound
/// fails, for at most `⌊2N/3⌋` steps. A step is only skipped when the
/// bound certainly holds. If every step is used, returns a greedy
/// independent set of what remains.
pub fn regularize(g: &Graph) -> Result<Regularized> {
    let n0 = g.n();
    if n0 < 12 {
        return Err(Error::Precondition(format!("N = {n0} is below 12")));
    }
    let steps = 2 * n0 / 3;
    let mut alive = vec![true; n0];
    let mut deg = g.degrees();
    let mut edges: u64 = g.edge_count() as u64;
    let mut n = n0;
    for step in 0..=steps {
        let (vmax, dmax) = (0..n0)
            .filter(|&v| alive[v])
            .map(|v| (v, deg[v]))
            .fold((usize::MAX, 0), |best, (v, d)| {
                if best.0 == usize::MAX || d > best.1 {
                    (v, d)
                } else {
                    best
                }
            });
        // Δ <= (2e/n) ln n  <=>  Δ n <= 2e ln n
        if dmax == 0 || certainly_le_times_ln(dmax as u64 * n as u64, 2 * edges, n) {
            return Ok(Regularized {
                set: (0..n0).filter(|&v| alive[v]).collect(),
                removed: n0 - n,
                independent: false,
            });
        }
        if step == steps {
            break;
        }
        alive[vmax] = false;
        n -= 1;
        edges -= dmax as u64;
        for w in g.neighbors(vmax) {
            if alive[w] {
                deg[w] -= 1;
            }
        }
    }
    let rest: Vec<usize> = (0..n0).filter(|&v| alive[v]).collect();
    let sub = g.induced_unchecked(&rest);
    let is = sub.lift_set(&greedy_independent_set(&sub.graph));
    if 6 * is.len() < n0 {
        return Err(Error::Invariant(format!(
            "final independent set has {} vertices, below N/6",
            is.len()
        )));
    }
    Ok(Regularized {
        set: is,
        removed: n0 - rest.len(),
        independent: true,
    })
}
