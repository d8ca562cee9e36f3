//! Bounded-treewidth patterns: exact treewidth, smooth decompositions,
//! the clique pruning process and the drivers built on it.

mod cliques;
mod decomposition;
mod driver;
mod embed;

pub use cliques::{clique_process, clique_ratio_constant, clique_ratio_witness, CliqueFamilyPair, CliqueRatioReport};
pub use decomposition::{
    optimal_elimination_order, smooth_tree_decomposition, treewidth_exact, TreeDecomposition, MAX_TREEWIDTH_VERTICES,
};
pub use driver::{is_sparse_connected, sparse_pattern_vs_clique, MAX_EXCESS};
pub use embed::{embed_via_treewidth, EXACT_ALPHA_HOST, EXACT_ALPHA_SIZE, MAX_WINDOW_CLIQUES};
