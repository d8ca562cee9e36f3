use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::DEFAULT_VERTEX_LIMIT;

/// Tunable constants and limits shared by the drivers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Config {
    /// Host-size multiplier (`N = C * size`).
    pub c: u64,
    /// Triangle threshold of the elimination process.
    pub c0: usize,
    /// Independent-set ratio used by the subdivision driver.
    pub c1: u64,
    pub seed: u64,
    /// Node budget for exact backtracking searches inside drivers.
    pub search_budget: u64,
    pub vertex_limit: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            c: 64,
            c0: 3,
            c1: 32,
            seed: 0,
            search_budget: 200_000,
            vertex_limit: DEFAULT_VERTEX_LIMIT,
        }
    }
}

impl Config {
    /// Requires `1 <= C0 <= C1 <= C`.
    pub fn validate(&self) -> Result<()> {
        if self.c0 < 1 {
            return Err(Error::Precondition("C0 must be at least 1".into()));
        }
        if self.c1 < self.c0 as u64 {
            return Err(Error::Precondition(format!(
                "C1 = {} must be at least C0 = {}",
                self.c1, self.c0
            )));
        }
        if self.c < self.c1 {
            return Err(Error::Precondition(format!(
                "C = {} must be at least C1 = {}",
                self.c, self.c1
            )));
        }
        Ok(())
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_c0(mut self, c0: usize) -> Self {
        self.c0 = c0;
        self
    }
}
