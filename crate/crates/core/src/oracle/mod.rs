//! Ground truth: exact searches, canonical forms, instance generators and
//! witness checking.

pub mod alpha;
pub mod canon;
pub mod instances;
pub mod ramsey;
pub mod search;
pub mod stress;

pub use crate::witness::{verify_witness, WitnessContext};
pub use search::{subgraph_find, SearchOutcome};
