use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, InducedSubgraph};

/// Whether pattern edges must land on host edges or host non-edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    Host,
    Complement,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("map has {got} entries, pattern has {want} vertices")]
    WrongLength { got: usize, want: usize },
    #[error("image {image} of pattern vertex {vertex} is not a host vertex")]
    OutOfRange { vertex: usize, image: usize },
    #[error("pattern vertices {0} and {1} share an image")]
    NotInjective(usize, usize),
    #[error("pattern edge ({0}, {1}) is not mapped correctly for mode {2:?}")]
    BadEdge(usize, usize, Mode),
}

/// Injective map from pattern vertices (by index) to host vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
    pub mode: Mode,
}

impl Embedding {
    pub fn new(map: Vec<usize>, mode: Mode) -> Self {
        Self { map, mode }
    }

    pub fn host(map: Vec<usize>) -> Self {
        Self::new(map, Mode::Host)
    }

    pub fn complement(map: Vec<usize>) -> Self {
        Self::new(map, Mode::Complement)
    }

    /// Definitional check: injective, and every pattern edge maps to a host
    /// edge (`Host`) or a host non-edge (`Complement`).
    pub fn check(&self, pattern: &Graph, host: &Graph) -> Result<(), EmbeddingError> {
        check_map(&self.map, self.mode, pattern, host)
    }

    pub fn is_valid(&self, pattern: &Graph, host: &Graph) -> bool {
        self.check(pattern, host).is_ok()
    }

    /// Re-expresses an embedding into an induced subgraph in parent ids.
    pub fn lift(&self, sub: &InducedSubgraph) -> Embedding {
        Embedding::new(sub.lift_all(&self.map), self.mode)
    }
}

/// Checks a (possibly partial) map given as `Option` images; unmapped
/// pattern vertices are ignored.
pub fn check_partial(map: &[Option<usize>], mode: Mode, pattern: &Graph, host: &Graph) -> Result<(), EmbeddingError> {
    if map.len() != pattern.n() {
        return Err(EmbeddingError::WrongLength {
            got: map.len(),
            want: pattern.n(),
        });
    }
    let mut owner = std::collections::HashMap::new();
    for (x, img) in map.iter().enumerate() {
        let Some(img) = *img else { continue };
        if img >= host.n() {
            return Err(EmbeddingError::OutOfRange { vertex: x, image: img });
        }
        if let Some(&y) = owner.get(&img) {
            return Err(EmbeddingError::NotInjective(y, x));
        }
        owner.insert(img, x);
    }
    for (a, b) in pattern.edges() {
        if let (Some(ia), Some(ib)) = (map[a], map[b]) {
            let ok = match mode {
                Mode::Host => host.has_edge(ia, ib),
                Mode::Complement => !host.has_edge(ia, ib),
            };
            if !ok {
                return Err(EmbeddingError::BadEdge(a, b, mode));
            }
        }
    }
    Ok(())
}

fn check_map(map: &[usize], mode: Mode, pattern: &Graph, host: &Graph) -> Result<(), EmbeddingError> {
    let opt: Vec<Option<usize>> = map.iter().map(|&v| Some(v)).collect();
    check_partial(&opt, mode, pattern, host)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns;

    #[test]
    fn host_and_complement_modes() {
        let k3 = Graph::complete(3);
        let c5 = patterns::cycle(5);
        assert!(!Embedding::host(vec![0, 1, 2]).is_valid(&k3, &c5));
        let p3 = patterns::path(3);
        assert!(Embedding::host(vec![0, 1, 2]).is_valid(&p3, &c5));
        // 0, 2, 4 in C5: 0-2 and 2-4 are non-edges, 0-4 is an edge
        assert!(Embedding::complement(vec![0, 2, 4]).is_valid(&p3, &c5));
        assert_eq!(
            Embedding::complement(vec![0, 2, 4]).check(&k3, &c5),
            Err(EmbeddingError::BadEdge(0, 2, Mode::Complement))
        );
    }

    #[test]
    fn rejects_duplicates_and_bad_length() {
        let p2 = Graph::new(2);
        let g = Graph::new(4);
        assert_eq!(
            Embedding::host(vec![1, 1]).check(&p2, &g),
            Err(EmbeddingError::NotInjective(0, 1))
        );
        assert!(matches!(
            Embedding::host(vec![1]).check(&p2, &g),
            Err(EmbeddingError::WrongLength { .. })
        ));
        assert!(matches!(
            Embedding::host(vec![1, 9]).check(&p2, &g),
            Err(EmbeddingError::OutOfRange { .. })
        ));
    }
}
