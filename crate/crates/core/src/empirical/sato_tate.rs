//! Sato-Tate sampling and Monte-Carlo checks of the Ramanujan-case bounds.
//!
//! Samples are drawn in fixed-size chunks; chunk `i` uses ChaCha8 seeded with
//! the user seed on stream `i`, so output is identical for any thread count.

use std::f64::consts::PI;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{interval_bound, rc_real_bound};
use crate::combination::CombinationSpec;
use crate::error::{Error, Result};

/// Algorithm identifier recorded alongside every seed.
pub const RNG_ID: &str = "chacha8";

const CHUNK: usize = 1 << 14;

/// `F(theta) = (theta - sin theta cos theta) / pi`, the distribution function
/// of `(2/pi) sin^2 theta` on `[0, pi]`.
pub fn sato_tate_cdf(theta: f64) -> f64 {
    (theta - theta.sin() * theta.cos()) / PI
}

/// `F^{-1}(u)` by bisection.
pub fn sato_tate_quantile(u: f64) -> f64 {
    let (mut lo, mut hi) = (0.0, PI);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if sato_tate_cdf(mid) < u {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn chunk_rng(seed: u64, chunk: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk as u64);
    rng
}

fn draw(rng: &mut ChaCha8Rng) -> f64 {
    2.0 * sato_tate_quantile(rng.random::<f64>()).cos()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SatakeSampleBatch {
    pub count: usize,
    pub seed: u64,
    pub rng: String,
    /// `a = 2 cos theta`, each in `[-2, 2]`.
    pub values: Vec<f64>,
}

/// `count` independent Sato-Tate distributed traces `2 cos theta`.
pub fn sato_tate_sample(count: usize, seed: u64) -> SatakeSampleBatch {
    let mut values = vec![0.0; count];
    values
        .par_chunks_mut(CHUNK)
        .enumerate()
        .for_each(|(i, out)| {
            let mut rng = chunk_rng(seed, i);
            for v in out {
                *v = draw(&mut rng);
            }
        });
    SatakeSampleBatch {
        count,
        seed,
        rng: RNG_ID.to_string(),
        values,
    }
}

/// Event on `x = sum lambda_i a_i` with independent Sato-Tate `a_i`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum MonteCarloEvent {
    /// `x < t`, `t <= 0`, compared with `rc_real_bound`.
    Below { t: f64 },
    /// `a < x < b` for two coefficients, compared with `interval_bound`.
    Interval { a: f64, b: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloCheck {
    pub event: MonteCarloEvent,
    pub count: usize,
    pub seed: u64,
    pub rng: String,
    pub hits: u64,
    pub empirical: f64,
    pub bound: f64,
    /// Binomial standard error of `empirical`.
    pub sigma: f64,
    /// `empirical >= bound - 3 sigma`.
    pub pass: bool,
}

/// Estimates the probability of `event` under independent Sato-Tate
/// coefficients and compares it with the closed-form bound.
pub fn monte_carlo_bound_check(
    spec: &CombinationSpec,
    event: MonteCarloEvent,
    count: usize,
    seed: u64,
) -> Result<MonteCarloCheck> {
    spec.validate()?;
    if count == 0 {
        return Err(Error::Domain {
            name: "count",
            value: 0.0,
            domain: ">= 1",
        });
    }
    if spec.dims.iter().any(|&n| n != 2) {
        return Err(Error::InvalidSpec(
            "Sato-Tate sampling needs n_i = 2 for all i".into(),
        ));
    }
    if spec.lambdas.iter().any(|l| l.im != 0.0) {
        return Err(Error::InvalidSpec(
            "Sato-Tate sampling needs real coefficients".into(),
        ));
    }
    let lambdas: Vec<f64> = spec.lambdas.iter().map(|l| l.re).collect();

    let bound = match event {
        MonteCarloEvent::Below { t } => rc_real_bound(&spec.clone().with_shift(t))?,
        MonteCarloEvent::Interval { a, b } => {
            let [l1, l2] = lambdas[..] else {
                return Err(Error::InvalidSpec(
                    "the interval event takes exactly two coefficients".into(),
                ));
            };
            interval_bound(l1, l2, a, b)?
        }
    };
    let holds = |x: f64| match event {
        MonteCarloEvent::Below { t } => x < t,
        MonteCarloEvent::Interval { a, b } => a < x && x < b,
    };

    let chunks = count.div_ceil(CHUNK);
    let hits: u64 = (0..chunks)
        .into_par_iter()
        .map(|i| {
            let mut rng = chunk_rng(seed, i);
            let n = CHUNK.min(count - i * CHUNK);
            let mut h = 0u64;
            for _ in 0..n {
                let x: f64 = lambdas.iter().map(|l| l * draw(&mut rng)).sum();
                h += u64::from(holds(x));
            }
            h
        })
        .sum();

    let empirical = hits as f64 / count as f64;
    let sigma = (empirical * (1.0 - empirical) / count as f64).sqrt();
    Ok(MonteCarloCheck {
        event,
        count,
        seed,
        rng: RNG_ID.to_string(),
        hits,
        empirical,
        bound,
        sigma,
        pass: empirical >= bound - 3.0 * sigma,
    })
}
