//! Preliminary embedding lemmas: empty bipartite splits, regularization,
//! greedy completion into the complement, independent sets in graphs with
//! few triangles, and gluing along a vertex.

mod few_triangles;
mod glue;
mod greedy;
mod regularize;
mod split;

pub use few_triangles::{
    few_triangle_independent_set, few_triangle_independent_set_with, triangle_target, FewTriangleOutcome,
    DEFAULT_RESTARTS, DEFAULT_SWAP_BUDGET,
};
pub use glue::{glue_embedding, one_point_amalgam, split_leaf_block, CutSplit, GlueOutcome, InnerOutcome};
pub use greedy::{
    bipartite_greedy_extend, bipartite_items, degeneracy_condition, degree_order, embed_by_degeneracy, greedy_extend,
    low_degree_set, top_k, try_bipartite_greedy_extend, try_embed_by_degeneracy, try_greedy_extend, BipartiteItem,
    BipartitePattern, GreedyCondition, PartialMap,
};
pub use regularize::{certainly_le_times_ln, regularize, Regularized};
pub use split::empty_bipartite_split;
