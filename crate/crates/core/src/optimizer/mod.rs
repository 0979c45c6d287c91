//! Max-min search for the `GL(2)` and `GL(n)` density bounds.
//!
//! The inner problem (adversarial allocation under a mass budget) is convex
//! and separable, and is solved to stationarity. The outer problem (choice of
//! threshold ladder) is a heuristic search: any ladder yields a valid bound,
//! so the reported value is always a lower bound even when it is not the
//! global maximum.

mod allocation;
mod gln;
mod ladder;
mod scalar;
mod threshold;

use serde::{Deserialize, Serialize};

use crate::combination::{Allocation, ThresholdLadder};
use crate::error::{Error, Result};

pub use allocation::{minimize_allocation, minimize_allocation_with_budget, AllocationSolution};
pub use gln::gln_bound;
pub use ladder::{evaluate_ladder, maximize_ladder, PUBLISHED_LADDERS};
pub use scalar::{golden_section_max, golden_section_min};
pub use threshold::{positivity_threshold, ThresholdFamily};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Number of ladder cells `m`; the ladder has `m + 1` cutoffs.
    pub ladder_length: usize,
    pub x_min: f64,
    pub x_max: f64,
    /// Cap on coordinate-ascent sweeps per start.
    pub outer_iterations: usize,
    /// Stationarity tolerance for the inner solver.
    pub inner_tolerance: f64,
    pub seed: u64,
    /// Random starts on top of the deterministic seeds.
    pub starts: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            ladder_length: 7,
            x_min: 1.01,
            x_max: 1.0e4,
            outer_iterations: 500,
            inner_tolerance: 1e-10,
            seed: 0,
            starts: 8,
        }
    }
}

impl SearchConfig {
    pub fn with_ladder_length(mut self, m: usize) -> Self {
        self.ladder_length = m;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.x_min > 1.0) || !(self.x_max > self.x_min) || !self.x_max.is_finite() {
            return Err(Error::Domain {
                name: "x_min",
                value: self.x_min,
                domain: "1 < x_min < x_max < inf",
            });
        }
        if !(self.inner_tolerance > 0.0) {
            return Err(Error::Domain {
                name: "inner_tolerance",
                value: self.inner_tolerance,
                domain: "> 0",
            });
        }
        if self.outer_iterations == 0 {
            return Err(Error::Domain {
                name: "outer_iterations",
                value: 0.0,
                domain: ">= 1",
            });
        }
        Ok(())
    }
}

/// An evaluated or optimized bound with the ladder and allocation that
/// witness it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundResult {
    pub value: f64,
    pub ladder: ThresholdLadder,
    pub allocation: Allocation,
    pub converged: bool,
    pub inner_residual: f64,
}
