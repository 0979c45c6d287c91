//! Lower bounds for the Dirichlet density of sign and magnitude events of
//! Hecke coefficients, the optimizers that produce them, and exact
//! coefficient data to compare them against.
//!
//! ```
//! use hecke_bounds::{evaluate_ladder, CombinationSpec, ThresholdLadder};
//!
//! let spec = CombinationSpec::real(&[1.0]);
//! let ladder = ThresholdLadder::new(vec![3.0, 5.0, 8.0, 17.0, 27.0, 38.0, 49.0, 61.0]).unwrap();
//! let bound = evaluate_ladder(&spec, &ladder).unwrap();
//! assert!((bound.value - 0.1118).abs() < 5e-4);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod combination;
pub mod empirical;
pub mod error;
pub mod optimizer;

pub use bounds::DerivedConstants;
pub use combination::{Allocation, CombinationSpec, ThresholdLadder};
pub use error::{Error, Result};
pub use optimizer::{
    evaluate_ladder, gln_bound, maximize_ladder, minimize_allocation, BoundResult, SearchConfig,
};
