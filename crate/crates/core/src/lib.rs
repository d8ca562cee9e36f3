//! Witness-producing algorithms for graph Ramsey problems.
//!
//! Every driver takes a host graph and returns a [`DichotomyResult`]: a
//! copy of the forbidden pattern, an embedding of the target into the
//! complement, an independent set, an empty biclique, or an explained
//! failure. [`verify_witness`] checks any of these definitionally.

pub mod biclique;
pub mod bitset;
pub mod config;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod k4star;
pub mod lemmas;
pub mod oracle;
pub mod patterns;
pub mod subdivision;
pub mod treewidth;
pub mod witness;

pub use config::Config;
pub use embedding::{Embedding, Mode};
pub use error::{Error, GraphError, Result};
pub use graph::{Graph, InducedSubgraph, VertexSet};
pub use witness::{verify_witness, DichotomyResult, Tag, WitnessContext};
