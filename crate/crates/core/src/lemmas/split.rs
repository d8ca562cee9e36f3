use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Finds `X' ⊆ X`, `Y' ⊆ Y` with no edges between them.
///
/// Requires `e(X, Y) <= r|Y|` and `r > 0`. Takes the `⌊|X|/(r+1)⌋`
/// vertices of `X` with fewest neighbours in `Y` (ties by id) and keeps
/// every `y ∈ Y` with no neighbour among them. Both sides meet the
/// `⌊·/(r+1)⌋` floors.
pub fn empty_bipartite_split(x: &VertexSet, y: &VertexSet, g: &Graph, r: Ratio<i64>) -> Result<(VertexSet, VertexSet)> {
    if *r.numer() <= 0 {
        return Err(Error::Precondition(format!("r = {r} must be positive")));
    }
    for &v in x.iter().chain(y.iter()) {
        if v >= g.n() {
            return Err(crate::error::GraphError::VertexOutOfRange { vertex: v, n: g.n() }.into());
        }
    }
    if x.iter().any(|&v| y.contains(v)) {
        return Err(Error::Precondition("X and Y must be disjoint".into()));
    }
    let ybits = y.to_bitset(g.n());
    let deg_y: Vec<(usize, usize)> = x.iter().map(|&v| (ybits.intersection_count(g.row(v)), v)).collect();
    let e: i128 = deg_y.iter().map(|&(d, _)| d as i128).sum();
    let (num, den) = (*r.numer() as i128, *r.denom() as i128);
    // e <= (num/den) |Y|
    if e * den > num * y.len() as i128 {
        return Err(Error::Precondition(format!(
            "e(X, Y) = {e} exceeds r|Y| = {}",
            r * Ratio::from_integer(y.len() as i64)
        )));
    }
    let floor = |s: usize| ((s as i128 * den) / (num + den)) as usize;
    let kx = floor(x.len());
    let mut sorted = deg_y;
    sorted.sort_unstable();
    let xp: VertexSet = sorted[..kx].iter().map(|&(_, v)| v).collect();
    let mut blocked = crate::bitset::Bitset::new(g.n());
    for &v in xp.iter() {
        blocked.union_with(g.row(v));
    }
    let yp: VertexSet = y.iter().copied().filter(|&v| !blocked.contains(v)).collect();
    if yp.len() < floor(y.len()) {
        return Err(Error::Invariant(format!(
            "split kept {} of |Y| = {}, below the floor",
            yp.len(),
            y.len()
        )));
    }
    Ok((xp, yp))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_edges_keeps_all_of_y() {
        let g = Graph::new(8);
        let x = VertexSet::from(vec![0, 1, 2, 3]);
        let y = VertexSet::from(vec![4, 5, 6, 7]);
        let (xp, yp) = empty_bipartite_split(&x, &y, &g, Ratio::from_integer(1)).unwrap();
        assert_eq!(xp.len(), 2);
        assert_eq!(yp, y);
    }

    #[test]
    fn small_example() {
        // x1 = 0 adjacent to both of Y = {4, 5}
        let g = Graph::from_edges(6, &[(0, 4), (0, 5)]).unwrap();
        let x = VertexSet::from(vec![0, 1, 2, 3]);
        let y = VertexSet::from(vec![4, 5]);
        let (xp, yp) = empty_bipartite_split(&x, &y, &g, Ratio::from_integer(1)).unwrap();
        assert_eq!(xp, VertexSet::from(vec![1, 2]));
        assert_eq!(yp, y);
        assert_eq!(g.edges_between(xp.as_slice(), yp.as_slice()), 0);
    }

    #[test]
    fn rejects_dense_input_and_bad_ratio() {
        let g = Graph::from_edges(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let x = VertexSet::from(vec![0, 1]);
        let y = VertexSet::from(vec![2, 3]);
        assert!(empty_bipartite_split(&x, &y, &g, Ratio::from_integer(1)).is_err());
        assert!(empty_bipartite_split(&x, &y, &g, Ratio::from_integer(2)).is_ok());
        assert!(empty_bipartite_split(&x, &y, &g, Ratio::from_integer(0)).is_err());
    }
}
