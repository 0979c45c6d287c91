//! Exact coefficient data for level-one eigenforms, prime-density
//! estimators, and Sato-Tate sampling.

mod density;
mod forms;
mod sato_tate;
pub mod series;
mod table;

pub use density::{
    sign_density, DensityEstimate, Predicate, PrimeFilter, WeightedRatio, DIRICHLET_EXPONENTS,
};
pub use forms::{
    delta_coefficients, delta_coefficients_in, second_form_coefficients,
    second_form_coefficients_in, Arithmetic, MAX_LIMIT,
};
pub use sato_tate::{
    monte_carlo_bound_check, sato_tate_cdf, sato_tate_quantile, sato_tate_sample, MonteCarloCheck,
    MonteCarloEvent, SatakeSampleBatch, RNG_ID,
};
pub use table::CoefficientTable;
