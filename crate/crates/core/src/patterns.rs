//! Named pattern graphs and the shorthand parser used by the CLI.

use crate::error::GraphError;
use crate::graph::Graph;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("static pattern edges are valid")
}

/// Path on `k` vertices.
pub fn path(k: usize) -> Graph {
    let mut g = Graph::new(k);
    for i in 1..k {
        g.add_edge(i - 1, i);
    }
    g
}

/// Cycle on `k >= 3` vertices.
pub fn cycle(k: usize) -> Graph {
    assert!(k >= 3, "cycle needs at least 3 vertices");
    let mut g = path(k);
    g.add_edge(0, k - 1);
    g
}

/// Star with centre 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::new(leaves + 1);
    for i in 1..=leaves {
        g.add_edge(0, i);
    }
    g
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    complete_multipartite(&[a, b])
}

pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n = parts.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, p));
    }
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if part[u] != part[v] {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Hub 0 joined to a cycle on `1..=k`.
pub fn wheel(k: usize) -> Graph {
    let mut g = Graph::new(k + 1);
    for i in 1..=k {
        g.add_edge(0, i);
        g.add_edge(i, if i == k { 1 } else { i + 1 });
    }
    g
}

pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    g
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> Graph {
    build(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
}

/// `K4` on `0..4` with the edge `01` subdivided by vertex 4.
pub fn k4_star() -> Graph {
    build(5, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 1)])
}

/// `K4` with the adjacent edges `01` and `02` each subdivided once.
pub fn h1() -> Graph {
    build(6, &[(0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 1), (0, 5), (5, 2)])
}

/// `K4` with the disjoint edges `01` and `23` each subdivided once.
pub fn h2() -> Graph {
    build(6, &[(0, 2), (0, 3), (1, 2), (1, 3), (0, 4), (4, 1), (2, 5), (5, 3)])
}

/// `K4` with the edge `01` subdivided twice.
pub fn h3() -> Graph {
    build(6, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5), (5, 1)])
}

pub fn k5_minus_edge() -> Graph {
    let mut g = Graph::complete(5);
    g.remove_edge(0, 1);
    g
}

/// Parses a pattern shorthand: `K<k>`, `K4STAR`, `H1`, `H2`, `H3`, `P<k>`,
/// `C<k>`, `S<k>` (star with k leaves), `W<k>` (wheel), `Knn:<n>`,
/// `K<a>,<b>`, `PETERSEN`, `BOWTIE`, `E<k>` (edgeless).
pub fn parse_named(name: &str) -> Result<Graph, GraphError> {
    let up = name.trim().to_ascii_uppercase();
    let bad = || GraphError::Parse {
        line: 0,
        msg: format!("unknown pattern {name:?}"),
    };
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    match up.as_str() {
        "K4STAR" | "K4*" => return Ok(k4_star()),
        "H1" => return Ok(h1()),
        "H2" => return Ok(h2()),
        "H3" => return Ok(h3()),
        "PETERSEN" => return Ok(petersen()),
        "BOWTIE" => return Ok(bowtie()),
        _ => {}
    }
    if let Some(rest) = up.strip_prefix("KNN:") {
        let n = num(rest)?;
        return Ok(complete_bipartite(n, n));
    }
    let (head, rest) = up.split_at(1.min(up.len()));
    match head {
        "K" => {
            if let Some((a, b)) = rest.split_once(',') {
                Ok(complete_bipartite(num(a)?, num(b)?))
            } else {
                Ok(Graph::complete(num(rest)?))
            }
        }
        "P" => Ok(path(num(rest)?)),
        "C" => {
            let k = num(rest)?;
            if k < 3 {
                return Err(bad());
            }
            Ok(cycle(k))
        }
        "S" => Ok(star(num(rest)?)),
        "W" => {
            let k = num(rest)?;
            if k < 3 {
                return Err(bad());
            }
            Ok(wheel(k))
        }
        "E" => Ok(Graph::new(num(rest)?)),
        _ => Err(bad()),
    }
}

/// Resolves a pattern argument: shorthand first, then graph6.
pub fn resolve(spec: &str) -> Result<Graph, GraphError> {
    parse_named(spec).or_else(|_| crate::graph::io::parse_graph6(spec))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_sizes() {
        assert_eq!(k4_star().edge_count(), 7);
        for h in [h1(), h2(), h3()] {
            assert_eq!(h.n(), 6);
            assert_eq!(h.edge_count(), 8);
            assert_eq!(h.degrees().iter().filter(|&&d| d == 3).count(), 4);
        }
        assert_eq!(petersen().edge_count(), 15);
        assert!(petersen().degrees().iter().all(|&d| d == 3));
        assert_eq!(wheel(4).edge_count(), 8);
    }

    #[test]
    fn shorthands() {
        assert_eq!(parse_named("K3").unwrap(), Graph::complete(3));
        assert_eq!(parse_named("knn:2").unwrap(), cycle(4).permute(&[0, 2, 1, 3]));
        assert_eq!(parse_named("P4").unwrap(), path(4));
        assert_eq!(parse_named("C5").unwrap(), cycle(5));
        assert_eq!(parse_named("K4STAR").unwrap(), k4_star());
        assert_eq!(parse_named("K2,3").unwrap().edge_count(), 6);
        assert!(parse_named("C2").is_err());
        assert!(parse_named("Q7").is_err());
        assert_eq!(resolve("C~").unwrap(), Graph::complete(4));
    }
}
