use super::{Graph, VertexSet};

/// Connected components as vertex sets, ordered by smallest member.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut comp = vec![s];
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                    comp.push(w);
                }
            }
        }
        out.push(comp.into_iter().collect());
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() <= 1 || components(g).len() == 1
}

/// Blocks (maximal 2-connected subgraphs and bridges) via DFS lowpoints.
///
/// Every edge lies in exactly one returned block. Isolated vertices carry no
/// edges and are not reported.
pub fn biconnected_components(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, neighbour iterator position)
        let mut stack: Vec<(usize, usize, Vec<usize>, usize)> =
            vec![(root, usize::MAX, g.neighbors(root).collect(), 0)];
        while let Some(top) = stack.last_mut() {
            let (u, parent) = (top.0, top.1);
            if top.3 < top.2.len() {
                let w = top.2[top.3];
                top.3 += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, u, g.neighbors(w).collect(), 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(p) = stack.last() {
                    let p = p.0;
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (p, u) {
                                break;
                            }
                        }
                        blocks.push(block.into_iter().collect());
                    }
                }
            }
        }
    }
    blocks
}

/// Vertices surviving iterated deletion of vertices of degree at most one.
pub fn two_core(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut deg = g.degrees();
    let mut alive = vec![true; n];
    let mut queue: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = queue.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    queue.push(w);
                }
            }
        }
    }
    (0..n).filter(|&v| alive[v]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns;
    use proptest::prelude::*;

    /// Definitional block check: a block with >= 3 vertices stays connected
    /// after deleting any single vertex.
    fn is_two_connected(g: &Graph) -> bool {
        g.n() >= 3 && is_connected(g) && (0..g.n()).all(|v| is_connected(&g.remove_vertex(v).graph))
    }

    fn check_blocks(g: &Graph) {
        let blocks = biconnected_components(g);
        let mut covered = 0;
        for b in &blocks {
            let sub = g.induced(b).unwrap().graph;
            assert!(
                (sub.n() == 2 && sub.edge_count() == 1) || is_two_connected(&sub),
                "block {b:?} of {g:?}"
            );
            covered += sub.edge_count();
        }
        // blocks share no edges, so induced edge counts sum to e(G)
        assert_eq!(covered, g.edge_count());
    }

    #[test]
    fn bowtie_has_two_triangle_blocks() {
        let g = patterns::bowtie();
        let mut blocks = biconnected_components(&g);
        blocks.sort();
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| b.len() == 3));
        check_blocks(&g);
    }

    #[test]
    fn tree_blocks_are_edges() {
        let t = patterns::star(4);
        let blocks = biconnected_components(&t);
        assert_eq!(blocks.len(), 4);
        assert!(blocks.iter().all(|b| b.len() == 2));
        assert!(two_core(&t).is_empty());
    }

    #[test]
    fn k4_with_pendant_path() {
        let mut g = Graph::new(7);
        for (u, v) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6)] {
            g.add_edge(u, v);
        }
        let mut blocks = biconnected_components(&g);
        blocks.sort_by_key(|b| std::cmp::Reverse(b.len()));
        assert_eq!(blocks.len(), 4);
        assert_eq!(blocks[0], VertexSet::range(4));
        assert_eq!(two_core(&g), VertexSet::range(4));
        check_blocks(&g);
    }

    proptest! {
        #[test]
        fn blocks_partition_edges(bits in proptest::collection::vec(any::<bool>(), 45)) {
            let mut g = Graph::new(10);
            let mut k = 0;
            for u in 0..10 {
                for v in (u + 1)..10 {
                    if bits[k] { g.add_edge(u, v); }
                    k += 1;
                }
            }
            check_blocks(&g);
        }
    }
}
