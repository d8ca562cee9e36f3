//! Recognising subdivisions of `K4` and laying them out over a base graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_connected, Graph};
use crate::oracle::canon::permutations;
use crate::patterns;

/// Edges of `K4` in index order.
pub const K4_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn k4_index(a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    K4_EDGES.iter().position(|&e| e == (a, b)).expect("K4 pair")
}

/// Small subdivisions of `K4` used as cores.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Base {
    K4,
    /// One edge subdivided once.
    K4Star,
    /// Two adjacent edges subdivided once.
    H1,
    /// Two disjoint edges subdivided once.
    H2,
    /// One edge subdivided twice.
    H3,
}

impl Base {
    pub fn graph(self) -> Graph {
        match self {
            Base::K4 => Graph::complete(4),
            Base::K4Star => patterns::k4_star(),
            Base::H1 => patterns::h1(),
            Base::H2 => patterns::h2(),
            Base::H3 => patterns::h3(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Base::K4 => "K4",
            Base::K4Star => "K4STAR",
            Base::H1 => "H1",
            Base::H2 => "H2",
            Base::H3 => "H3",
        }
    }
}

impl std::fmt::Display for Base {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A subdivision `H` of `K4`: its branch vertices and the six paths
/// between them, ordered so that the subdivided edges sit where `base`
/// expects them (`01` for `K4STAR`/`H3`, `01`,`02` for `H1`, `01`,`23`
/// for `H2`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubdivisionPattern {
    pub base: Base,
    pub branch: [usize; 4],
    /// Path in `H` for each edge of [`K4_EDGES`], from `branch[a]` to
    /// `branch[b]`.
    pub paths: [Vec<usize>; 6],
    pub order: usize,
}

/// `H` written as a subdivision of a base graph: which `H` vertex plays
/// each base vertex and which `H` path replaces each base edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    pub base: Base,
    pub graph: Graph,
    pub vertices: Vec<usize>,
    /// `(a, b, path)` with `path` running from `vertices[a]` to
    /// `vertices[b]`.
    pub segments: Vec<(usize, usize, Vec<usize>)>,
    pub order: usize,
}

impl Layout {
    /// Base edges whose path has length at least two.
    pub fn subdivided(&self) -> Vec<(usize, usize)> {
        self.segments
            .iter()
            .filter(|s| s.2.len() > 2)
            .map(|s| (s.0, s.1))
            .collect()
    }

    /// Rebuilds `H` (with its own labelling) from the base and paths.
    pub fn to_graph(&self) -> Graph {
        let mut h = Graph::new(self.order);
        for (_, _, p) in &self.segments {
            for w in p.windows(2) {
                h.add_edge(w[0], w[1]);
            }
        }
        h
    }
}

impl SubdivisionPattern {
    pub fn lengths(&self) -> [usize; 6] {
        std::array::from_fn(|i| self.paths[i].len() - 1)
    }

    /// `K4` edge indices whose path has length at least two.
    pub fn subdivided(&self) -> Vec<usize> {
        (0..6).filter(|&i| self.paths[i].len() > 2).collect()
    }

    pub fn layout(&self) -> Layout {
        self.layout_as(self.base, 0).expect("own base fits")
    }

    /// Lays `H` out over `base`, if its subdivided edges allow it.
    /// `carrier` picks which piece of a split path keeps the extra length
    /// (`0` is the piece at branch vertex 0; for `H3`, `0..3` along the
    /// path).
    pub fn layout_as(&self, base: Base, carrier: usize) -> Option<Layout> {
        let p = &self.paths;
        let len01 = p[0].len() - 1;
        let mut vertices: Vec<usize> = self.branch.to_vec();
        let mut segments = Vec::new();
        let keep = |skip: &[usize], segments: &mut Vec<(usize, usize, Vec<usize>)>| {
            for (i, &(a, b)) in K4_EDGES.iter().enumerate() {
                if !skip.contains(&i) {
                    segments.push((a, b, p[i].clone()));
                }
            }
        };
        // splits path `i` (a -> b) at one interior index, new base vertex `mid`
        let split1 = |i: usize, mid: usize, at: usize, segs: &mut Vec<(usize, usize, Vec<usize>)>| {
            let (a, b) = K4_EDGES[i];
            segs.push((a, mid, p[i][..=at].to_vec()));
            segs.push((mid, b, p[i][at..].to_vec()));
            p[i][at]
        };
        let at_for = |i: usize| if carrier == 0 { p[i].len() - 2 } else { 1 };
        match base {
            Base::K4 => keep(&[], &mut segments),
            Base::K4Star => {
                if len01 < 2 {
                    return None;
                }
                keep(&[0], &mut segments);
                vertices.push(split1(0, 4, at_for(0), &mut segments));
            }
            Base::H1 | Base::H2 => {
                let other = if base == Base::H1 { 1 } else { 5 };
                if len01 < 2 || p[other].len() < 3 {
                    return None;
                }
                keep(&[0, other], &mut segments);
                vertices.push(split1(0, 4, at_for(0), &mut segments));
                vertices.push(split1(other, 5, at_for(other), &mut segments));
            }
            Base::H3 => {
                if len01 < 3 {
                    return None;
                }
                keep(&[0], &mut segments);
                let (i, j) = match carrier {
                    0 => (len01 - 2, len01 - 1),
                    1 => (1, len01 - 1),
                    _ => (1, 2),
                };
                let path = &p[0];
                segments.push((0, 4, path[..=i].to_vec()));
                segments.push((4, 5, path[i..=j].to_vec()));
                segments.push((5, 1, path[j..].to_vec()));
                vertices.push(path[i]);
                vertices.push(path[j]);
            }
        }
        Some(Layout {
            base,
            graph: base.graph(),
            vertices,
            segments,
            order: self.order,
        })
    }
}

/// The subdivision of `K4` with the given path lengths (indexed as
/// [`K4_EDGES`]). Branch vertices are `0..4`; interior vertices follow
/// edge by edge.
pub fn build_subdivision(lengths: [usize; 6]) -> Result<Graph> {
    if lengths.contains(&0) {
        return Err(Error::Precondition("path lengths must be positive".into()));
    }
    let n = 4 + lengths.iter().map(|l| l - 1).sum::<usize>();
    let mut g = Graph::new(n);
    let mut next = 4;
    for (i, &(a, b)) in K4_EDGES.iter().enumerate() {
        let mut prev = a;
        for _ in 1..lengths[i] {
            g.add_edge(prev, next);
            prev = next;
            next += 1;
        }
        g.add_edge(prev, b);
    }
    Ok(g)
}

/// Branch vertices, paths and base of a subdivision of `K4`.
pub fn classify_subdivision(h: &Graph) -> Result<SubdivisionPattern> {
    let bad = |why: &str| Error::NotK4Subdivision(why.to_string());
    let n = h.n();
    let branch: Vec<usize> = (0..n).filter(|&v| h.degree(v) == 3).collect();
    if branch.len() != 4 {
        return Err(bad("need exactly four vertices of degree 3"));
    }
    if (0..n).any(|v| h.degree(v) != 3 && h.degree(v) != 2) {
        return Err(bad("other vertices must have degree 2"));
    }
    if !is_connected(h) {
        return Err(bad("graph is disconnected"));
    }
    let idx = |v: usize| branch.iter().position(|&b| b == v);
    let mut paths: [Option<Vec<usize>>; 6] = Default::default();
    for (bi, &b) in branch.iter().enumerate() {
        for first in h.neighbors(b) {
            let mut path = vec![b, first];
            while idx(*path.last().unwrap()).is_none() {
                let cur = *path.last().unwrap();
                let prev = path[path.len() - 2];
                let next = h.neighbors(cur).find(|&w| w != prev).expect("degree 2");
                path.push(next);
            }
            let bj = idx(*path.last().unwrap()).unwrap();
            if bj == bi {
                return Err(bad("a chain returns to its start"));
            }
            if bi < bj {
                let slot = &mut paths[k4_index(bi, bj)];
                if slot.is_some() {
                    return Err(bad("two chains join the same pair"));
                }
                *slot = Some(path);
            }
        }
    }
    let paths: Vec<Vec<usize>> = paths
        .into_iter()
        .map(|p| p.ok_or_else(|| bad("a pair of branch vertices is not joined")))
        .collect::<Result<_>>()?;
    let lens: Vec<usize> = paths.iter().map(|p| p.len() - 1).collect();
    let sub: Vec<usize> = (0..6).filter(|&i| lens[i] >= 2).collect();
    let adjacent = |i: usize, j: usize| {
        let (a, b) = K4_EDGES[i];
        let (c, d) = K4_EDGES[j];
        a == c || a == d || b == c || b == d
    };
    let base = match sub.len() {
        0 => Base::K4,
        1 if lens[sub[0]] == 2 => Base::K4Star,
        1 => Base::H3,
        _ if sub.iter().any(|&i| sub.iter().any(|&j| i != j && adjacent(i, j))) => Base::H1,
        _ => Base::H2,
    };
    // first relabelling of the branch vertices that puts the subdivided
    // edges in the base's positions
    for perm in permutations(4) {
        let len = |a: usize, b: usize| lens[k4_index(perm[a], perm[b])];
        let fits = match base {
            Base::K4 => true,
            Base::K4Star | Base::H3 => len(0, 1) >= 2,
            Base::H1 => len(0, 1) >= 2 && len(0, 2) >= 2,
            Base::H2 => len(0, 1) >= 2 && len(2, 3) >= 2,
        };
        if !fits {
            continue;
        }
        let new_paths: [Vec<usize>; 6] = std::array::from_fn(|i| {
            let (a, b) = K4_EDGES[i];
            let (pa, pb) = (perm[a], perm[b]);
            let mut p = paths[k4_index(pa, pb)].clone();
            if pa > pb {
                p.reverse();
            }
            p
        });
        return Ok(SubdivisionPattern {
            base,
            branch: std::array::from_fn(|i| branch[perm[i]]),
            paths: new_paths,
            order: n,
        });
    }
    unreachable!("some relabelling fits the chosen base")
}
