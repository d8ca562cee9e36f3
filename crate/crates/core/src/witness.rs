use std::fmt;

use serde::Serialize;

use crate::embedding::{Embedding, Mode};
use crate::graph::{Graph, VertexSet};

/// Kind of object a dichotomy driver returned.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Tag {
    PatternCopy,
    ComplementEmbedding,
    IndependentSet,
    BicliqueHole,
    Failure,
}

impl Tag {
    pub const ALL: [Tag; 5] = [
        Tag::PatternCopy,
        Tag::ComplementEmbedding,
        Tag::IndependentSet,
        Tag::BicliqueHole,
        Tag::Failure,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Tag::PatternCopy => "PATTERN_COPY",
            Tag::ComplementEmbedding => "COMPLEMENT_EMBEDDING",
            Tag::IndependentSet => "INDEPENDENT_SET",
            Tag::BicliqueHole => "BICLIQUE_HOLE",
            Tag::Failure => "FAILURE",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Output of a dichotomy driver: one side of a Ramsey statement, or an
/// explained failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum DichotomyResult {
    /// Copy of the forbidden pattern in the host.
    PatternCopy(Embedding),
    /// Copy of the target graph in the host's complement.
    ComplementEmbedding(Embedding),
    IndependentSet(VertexSet),
    /// Two disjoint vertex sets with no host edges between them.
    BicliqueHole {
        left: VertexSet,
        right: VertexSet,
    },
    Failure(String),
}

impl DichotomyResult {
    pub fn tag(&self) -> Tag {
        match self {
            DichotomyResult::PatternCopy(_) => Tag::PatternCopy,
            DichotomyResult::ComplementEmbedding(_) => Tag::ComplementEmbedding,
            DichotomyResult::IndependentSet(_) => Tag::IndependentSet,
            DichotomyResult::BicliqueHole { .. } => Tag::BicliqueHole,
            DichotomyResult::Failure(_) => Tag::Failure,
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, DichotomyResult::Failure(_))
    }

    pub fn failure(reason: impl Into<String>) -> Self {
        DichotomyResult::Failure(reason.into())
    }

    /// Maps vertex ids through `parent` (local id -> parent id).
    pub fn lift(self, parent: &[usize]) -> Self {
        let lift_set = |s: VertexSet| -> VertexSet { s.iter().map(|&v| parent[v]).collect() };
        match self {
            DichotomyResult::PatternCopy(e) => {
                DichotomyResult::PatternCopy(Embedding::new(e.map.iter().map(|&v| parent[v]).collect(), e.mode))
            }
            DichotomyResult::ComplementEmbedding(e) => {
                DichotomyResult::ComplementEmbedding(Embedding::new(e.map.iter().map(|&v| parent[v]).collect(), e.mode))
            }
            DichotomyResult::IndependentSet(s) => DichotomyResult::IndependentSet(lift_set(s)),
            DichotomyResult::BicliqueHole { left, right } => DichotomyResult::BicliqueHole {
                left: lift_set(left),
                right: lift_set(right),
            },
            f @ DichotomyResult::Failure(_) => f,
        }
    }
}

impl fmt::Display for DichotomyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tag: {}", self.tag())?;
        let list = |s: &VertexSet| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        match self {
            DichotomyResult::PatternCopy(e) | DichotomyResult::ComplementEmbedding(e) => {
                let mode = match e.mode {
                    Mode::Host => "host",
                    Mode::Complement => "complement",
                };
                writeln!(f, "mode: {mode}")?;
                let pairs: Vec<String> = e.map.iter().enumerate().map(|(x, v)| format!("{x}->{v}")).collect();
                writeln!(f, "map: {}", pairs.join(" "))
            }
            DichotomyResult::IndependentSet(s) => writeln!(f, "set: {}", list(s)),
            DichotomyResult::BicliqueHole { left, right } => {
                writeln!(f, "left: {}", list(left))?;
                writeln!(f, "right: {}", list(right))
            }
            DichotomyResult::Failure(reason) => writeln!(f, "reason: {reason}"),
        }
    }
}

/// What a witness is checked against.
#[derive(Clone, Copy, Debug)]
pub struct WitnessContext<'a> {
    pub host: &'a Graph,
    /// Pattern that a `PatternCopy` must embed into the host.
    pub pattern: Option<&'a Graph>,
    /// Graph that a `ComplementEmbedding` must embed into the complement.
    pub target: Option<&'a Graph>,
    /// Required size of an independent set, or of each side of a hole.
    pub size: Option<usize>,
}

impl<'a> WitnessContext<'a> {
    pub fn new(host: &'a Graph) -> Self {
        Self {
            host,
            pattern: None,
            target: None,
            size: None,
        }
    }

    pub fn pattern(mut self, h: &'a Graph) -> Self {
        self.pattern = Some(h);
        self
    }

    pub fn target(mut self, f: &'a Graph) -> Self {
        self.target = Some(f);
        self
    }

    pub fn size(mut self, n: usize) -> Self {
        self.size = Some(n);
        self
    }
}

/// Definitional witness check. `Failure` never verifies.
///
/// An independent set is accepted if it reaches `ctx.size`, or, when no size
/// is given, if it has at least `v(target)` vertices (which also places the
/// target in the complement).
pub fn verify_witness(result: &DichotomyResult, ctx: &WitnessContext<'_>) -> bool {
    let host = ctx.host;
    match result {
        DichotomyResult::PatternCopy(e) => e.mode == Mode::Host && ctx.pattern.is_some_and(|h| e.is_valid(h, host)),
        DichotomyResult::ComplementEmbedding(e) => {
            e.mode == Mode::Complement && ctx.target.is_some_and(|f| e.is_valid(f, host))
        }
        DichotomyResult::IndependentSet(s) => {
            let need = match (ctx.size, ctx.target) {
                (Some(n), _) => n,
                (None, Some(f)) => f.n(),
                (None, None) => return false,
            };
            s.len() >= need && s.iter().all(|&v| v < host.n()) && host.is_independent(s.as_slice())
        }
        DichotomyResult::BicliqueHole { left, right } => {
            let Some(n) = ctx.size else { return false };
            left.len() == n
                && right.len() == n
                && left.iter().chain(right.iter()).all(|&v| v < host.n())
                && left.iter().all(|&v| !right.contains(v))
                && host.edges_between(left.as_slice(), right.as_slice()) == 0
        }
        DichotomyResult::Failure(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns;

    #[test]
    fn pattern_copy_with_non_edge_image_is_rejected() {
        let c5 = patterns::cycle(5);
        let k3 = Graph::complete(3);
        let ctx = WitnessContext::new(&c5).pattern(&k3);
        let bad = DichotomyResult::PatternCopy(Embedding::host(vec![0, 1, 2]));
        assert!(!verify_witness(&bad, &ctx));
    }

    #[test]
    fn independent_set_and_duplicates() {
        let c5 = patterns::cycle(5);
        let ctx = WitnessContext::new(&c5).size(2);
        let ok = DichotomyResult::IndependentSet(VertexSet::from(vec![0, 2]));
        assert!(verify_witness(&ok, &ctx));
        let small = DichotomyResult::IndependentSet(VertexSet::from(vec![0]));
        assert!(!verify_witness(&small, &ctx));

        let p3 = patterns::path(3);
        let ctx = WitnessContext::new(&c5).pattern(&p3);
        let dup = DichotomyResult::PatternCopy(Embedding::host(vec![0, 1, 0]));
        assert!(!verify_witness(&dup, &ctx));
    }

    #[test]
    fn biclique_hole() {
        let g = patterns::cycle(6);
        let ctx = WitnessContext::new(&g).size(2);
        let hole = DichotomyResult::BicliqueHole {
            left: VertexSet::from(vec![0, 1]),
            right: VertexSet::from(vec![3, 4]),
        };
        assert!(verify_witness(&hole, &ctx));
        let touching = DichotomyResult::BicliqueHole {
            left: VertexSet::from(vec![0, 1]),
            right: VertexSet::from(vec![2, 4]),
        };
        assert!(!verify_witness(&touching, &ctx));
    }

    #[test]
    fn failure_never_verifies_and_text_format() {
        let g = Graph::new(3);
        let f = DichotomyResult::failure("below threshold");
        assert!(!verify_witness(&f, &WitnessContext::new(&g).size(1)));
        let text = DichotomyResult::PatternCopy(Embedding::host(vec![2, 0])).to_string();
        assert_eq!(text, "tag: PATTERN_COPY\nmode: host\nmap: 0->2 1->0\n");
    }
}
