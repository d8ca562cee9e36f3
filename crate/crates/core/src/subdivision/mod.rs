//! Subdivisions of `K4` against arbitrary targets: triangle elimination,
//! path insertion inside `G+` neighbourhoods and the per-base cases.

mod assembly;
mod driver;
mod elimination;
mod pattern;

pub use assembly::{assemble_subdivision, subdivision_paths, PATH_BUDGET};
pub use driver::{
    degenerate_independent_set, h2_expectation_holds, h2_pairs, minus_edges_in_neighbourhoods, sparse_plus_witness,
    subdivision_vs_graph, SparsePlusWitness,
};
pub use elimination::{eliminate_triangles, replay, EliminationStep, EliminationTrace, MAX_TRIANGLES};
pub use pattern::{build_subdivision, classify_subdivision, Base, Layout, SubdivisionPattern, K4_EDGES};
