//! Natural and Dirichlet-weighted densities of prime sets cut out by Hecke
//! coefficients.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::series::to_f64;
use super::table::CoefficientTable;
use crate::error::{Error, Result};

/// Exponents `s` at which the Dirichlet-weighted ratio is reported.
pub const DIRICHLET_EXPONENTS: [f64; 3] = [1.1, 1.05, 1.01];

/// Which primes enter the count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum PrimeFilter {
    All,
    /// `p = class (mod modulus)`.
    Congruence {
        modulus: u64,
        class: u64,
    },
    /// `p = 1 (mod 3)` and `2` is a cube mod `p`: the primes `m^2 + 27 n^2`.
    CubicSplit,
}

impl PrimeFilter {
    pub fn accepts(&self, p: u64) -> bool {
        match *self {
            Self::All => true,
            Self::Congruence { modulus, class } => p % modulus == class % modulus,
            Self::CubicSplit => p % 3 == 1 && pow_mod(2, (p - 1) / 3, p) == 1,
        }
    }

    fn validate(&self) -> Result<()> {
        if let Self::Congruence { modulus: 0, .. } = self {
            return Err(Error::Domain {
                name: "modulus",
                value: 0.0,
                domain: ">= 1",
            });
        }
        Ok(())
    }
}

impl fmt::Display for PrimeFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::All => write!(f, "all primes"),
            Self::Congruence { modulus, class } => write!(f, "p = {class} mod {modulus}"),
            Self::CubicSplit => write!(f, "p = m^2 + 27 n^2"),
        }
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m = u128::from(m);
    let mut b = u128::from(base) % m;
    let mut acc = 1u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// The event tested on `x = sum_i w_i a_p(f_i)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Predicate {
    /// `x < t`.
    Below { t: f64 },
    /// `|x| > c`.
    AbsAbove { c: f64 },
}

impl Predicate {
    pub fn holds(&self, x: f64) -> bool {
        match *self {
            Self::Below { t } => x < t,
            Self::AbsAbove { c } => x.abs() > c,
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Below { t } => write!(f, "x < {t}"),
            Self::AbsAbove { c } => write!(f, "|x| > {c}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightedRatio {
    pub s: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityEstimate {
    pub hits: u64,
    pub total: u64,
    pub proportion: f64,
    /// `sum_{hits} p^{-s} / sum_{filtered} p^{-s}`.
    pub dirichlet_weighted: Vec<WeightedRatio>,
    pub limit: u64,
    pub predicate: String,
    pub filter: String,
}

/// Counts primes `p <= limit` passing `filter` at which
/// `sum_i weights[i] * a_p(tables[i])` satisfies `predicate`.
pub fn sign_density(
    tables: &[&CoefficientTable],
    weights: &[f64],
    predicate: Predicate,
    filter: PrimeFilter,
    limit: usize,
) -> Result<DensityEstimate> {
    if tables.is_empty() || tables.len() != weights.len() {
        return Err(Error::DimensionMismatch {
            expected: tables.len(),
            got: weights.len(),
        });
    }
    filter.validate()?;
    if let Some(t) = tables.iter().find(|t| t.limit() < limit) {
        return Err(Error::Domain {
            name: "limit",
            value: limit as f64,
            domain: if t.limit() == 0 {
                "table is empty"
            } else {
                "limit <= every table's limit"
            },
        });
    }

    let primes: Vec<usize> = primal::Sieve::new(limit.max(2))
        .primes_from(2)
        .take_while(|&p| p <= limit)
        .filter(|&p| filter.accepts(p as u64))
        .collect();
    if primes.is_empty() {
        return Err(Error::EmptyFilter {
            limit: limit as u64,
            filter: filter.to_string(),
        });
    }

    let flags: Vec<bool> = primes
        .par_iter()
        .map(|&p| {
            let x: f64 = tables
                .iter()
                .zip(weights)
                .map(|(t, w)| w * t.normalizer(p) * to_f64(t.get(p).unwrap()))
                .sum();
            predicate.holds(x)
        })
        .collect();

    let hits = flags.iter().filter(|&&h| h).count() as u64;
    let total = primes.len() as u64;
    let dirichlet_weighted = DIRICHLET_EXPONENTS
        .iter()
        .map(|&s| {
            let (mut hit_sum, mut all_sum) = (0.0, 0.0);
            for (&p, &h) in primes.iter().zip(&flags) {
                let w = (p as f64).powf(-s);
                all_sum += w;
                if h {
                    hit_sum += w;
                }
            }
            WeightedRatio {
                s,
                ratio: hit_sum / all_sum,
            }
        })
        .collect();

    Ok(DensityEstimate {
        hits,
        total,
        proportion: hits as f64 / total as f64,
        dirichlet_weighted,
        limit: limit as u64,
        predicate: predicate.to_string(),
        filter: filter.to_string(),
    })
}
