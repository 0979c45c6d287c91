//! Outer maximization over threshold ladders.
//!
//! A ladder `X_0 < ... < X_m` is encoded as `theta_0 = ln(X_0 - 1)` and
//! `theta_k = ln(ln X_k - ln X_{k-1})`, so every real vector decodes to a
//! strictly increasing ladder above 1. Each start runs a coordinate pattern
//! search in `theta` followed by a Nelder-Mead polish. Starts run in
//! parallel and are reduced by value, then by the lexicographically smaller
//! ladder.

use std::cmp::Ordering;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::allocation::{Separable, DEFAULT_TOLERANCE};
use super::{BoundResult, SearchConfig};
use crate::bounds::DerivedConstants;
use crate::combination::{CombinationSpec, ThresholdLadder};
use crate::error::Result;

/// Ladders quoted alongside the published `GL(2)` constants. Used as seeds
/// whenever their length matches the requested `m`.
pub const PUBLISHED_LADDERS: [&[f64]; 3] = [
    &[3.0, 5.0, 8.0, 17.0, 27.0, 38.0, 49.0, 61.0],
    &[10.0, 23.0, 30.0, 36.0, 45.0, 54.0, 72.0, 81.0, 90.0],
    &[19.0, 40.0, 69.0, 98.0, 127.0, 156.0, 185.0, 214.0, 243.0],
];

const MIN_STEP: f64 = 1e-4;
const MIN_GAIN: f64 = 1e-7;

/// Bound at a user-supplied ladder: the inner minimum only.
pub fn evaluate_ladder(spec: &CombinationSpec, ladder: &ThresholdLadder) -> Result<BoundResult> {
    evaluate_with(spec, ladder, DEFAULT_TOLERANCE)
}

fn evaluate_with(
    spec: &CombinationSpec,
    ladder: &ThresholdLadder,
    tol: f64,
) -> Result<BoundResult> {
    let k = DerivedConstants::new(spec)?;
    let sol = Separable::new(&k, ladder).minimize(spec.budget(), tol);
    Ok(BoundResult {
        value: sol.value,
        ladder: ladder.clone(),
        allocation: sol.allocation,
        converged: sol.converged,
        inner_residual: sol.residual,
    })
}

/// Best ladder with `config.ladder_length + 1` cutoffs found by multi-start
/// local search.
pub fn maximize_ladder(spec: &CombinationSpec, config: &SearchConfig) -> Result<BoundResult> {
    config.validate()?;
    let k = DerivedConstants::new(spec)?;
    let search = Search {
        k,
        budget: spec.budget(),
        config,
    };

    let starts = search.starts();
    let locals: Vec<(Vec<f64>, f64, bool)> = starts
        .par_iter()
        .map(|theta| search.local(theta.clone()))
        .collect();

    let (theta, _, local_ok) = locals
        .into_iter()
        .reduce(|best, cand| match cand.1.partial_cmp(&best.1) {
            Some(Ordering::Greater) => cand,
            Some(Ordering::Equal) if search.decode(&cand.0) < search.decode(&best.0) => cand,
            _ => best,
        })
        .expect("at least one start");

    let ladder = ThresholdLadder::new(search.decode(&theta))?;
    let mut result = evaluate_with(spec, &ladder, config.inner_tolerance)?;
    result.converged &= local_ok;
    Ok(result)
}

struct Search<'a> {
    k: DerivedConstants,
    budget: f64,
    config: &'a SearchConfig,
}

impl Search<'_> {
    fn dim(&self) -> usize {
        self.config.ladder_length + 1
    }

    fn decode(&self, theta: &[f64]) -> Vec<f64> {
        let mut out = Vec::with_capacity(theta.len());
        let mut log_x = (1.0 + theta[0].exp()).ln();
        out.push(log_x.exp());
        for g in &theta[1..] {
            log_x += g.exp();
            out.push(log_x.exp());
        }
        out
    }

    fn encode(&self, cutoffs: &[f64]) -> Vec<f64> {
        let mut theta = vec![(cutoffs[0] - 1.0).ln()];
        theta.extend(cutoffs.windows(2).map(|w| (w[1].ln() - w[0].ln()).ln()));
        theta
    }

    fn value(&self, theta: &[f64]) -> f64 {
        if theta.iter().any(|t| !t.is_finite()) {
            return f64::NEG_INFINITY;
        }
        let cut = self.decode(theta);
        let ok = cut[0] >= self.config.x_min
            && cut[cut.len() - 1] <= self.config.x_max
            && cut.windows(2).all(|w| w[1] > w[0]);
        if !ok {
            return f64::NEG_INFINITY;
        }
        match ThresholdLadder::new(cut) {
            Ok(ladder) => Separable::new(&self.k, &ladder).min_value(self.budget),
            Err(_) => f64::NEG_INFINITY,
        }
    }

    /// Sorts, clamps, and spreads a candidate so it is a feasible ladder.
    fn repair(&self, mut cut: Vec<f64>) -> Option<Vec<f64>> {
        cut.sort_by(|a, b| a.total_cmp(b));
        let lo = self.config.x_min.max(1.0 + 1e-9);
        let mut prev = f64::NEG_INFINITY;
        for x in cut.iter_mut() {
            *x = x.max(lo).max(prev * (1.0 + 1e-6));
            prev = *x;
        }
        (prev <= self.config.x_max).then_some(cut)
    }

    fn starts(&self) -> Vec<Vec<f64>> {
        let n = self.dim();
        let mut seeds: Vec<Vec<f64>> = PUBLISHED_LADDERS
            .iter()
            .filter(|l| l.len() == n)
            .map(|l| l.to_vec())
            .collect();
        for (x0, ratio) in [(2.0, 1.3), (3.0, 1.5), (6.0, 1.4), (12.0, 1.25)] {
            seeds.push((0..n).map(|k| x0 * f64::powi(ratio, k as i32)).collect());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
        for _ in 0..self.config.starts {
            let mut x = rng.random_range(2f64.ln()..30f64.ln()).exp();
            let mut cut = vec![x];
            for _ in 1..n {
                x *= rng.random_range(0.05f64..1.0).exp();
                cut.push(x);
            }
            seeds.push(cut);
        }
        seeds
            .into_iter()
            .filter_map(|c| self.repair(c))
            .map(|c| self.encode(&c))
            .collect()
    }

    /// Pattern search then Nelder-Mead from one start. Returns the final
    /// point, its value, and whether the pattern search met its stopping rule
    /// before the sweep cap.
    fn local(&self, mut theta: Vec<f64>) -> (Vec<f64>, f64, bool) {
        let mut best = self.value(&theta);
        let mut step = 0.5;
        let mut sweeps = 0;
        while step >= MIN_STEP && sweeps < self.config.outer_iterations {
            sweeps += 1;
            let start = best;
            for j in 0..theta.len() {
                for dir in [1.0, -1.0] {
                    let mut cand = theta.clone();
                    cand[j] += dir * step;
                    let v = self.value(&cand);
                    if v > best {
                        best = v;
                        theta = cand;
                        break;
                    }
                }
            }
            if best - start < MIN_GAIN {
                step *= 0.5;
            }
        }
        let converged = step < MIN_STEP;
        let (theta, best) = self.nelder_mead(theta, best);
        (theta, best, converged)
    }

    fn nelder_mead(&self, start: Vec<f64>, f_start: f64) -> (Vec<f64>, f64) {
        let n = start.len();
        let f = |x: &[f64]| -self.value(x);
        let mut simplex: Vec<(Vec<f64>, f64)> = vec![(start.clone(), -f_start)];
        for j in 0..n {
            let mut p = start.clone();
            p[j] += 0.05;
            let fp = f(&p);
            simplex.push((p, fp));
        }
        let max_iter = 200 * n;
        for _ in 0..max_iter {
            simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
            let spread = simplex[n].1 - simplex[0].1;
            if spread.is_finite() && spread < 1e-14 {
                break;
            }
            let centroid: Vec<f64> = (0..n)
                .map(|j| simplex[..n].iter().map(|p| p.0[j]).sum::<f64>() / n as f64)
                .collect();
            let worst = simplex[n].clone();
            let along = |s: f64| -> Vec<f64> {
                centroid
                    .iter()
                    .zip(&worst.0)
                    .map(|(c, w)| c + s * (c - w))
                    .collect()
            };
            let refl = along(1.0);
            let fr = f(&refl);
            if fr < simplex[0].1 {
                let exp = along(2.0);
                let fe = f(&exp);
                simplex[n] = if fe < fr { (exp, fe) } else { (refl, fr) };
            } else if fr < simplex[n - 1].1 {
                simplex[n] = (refl, fr);
            } else {
                let con = if fr < worst.1 {
                    along(0.5)
                } else {
                    along(-0.5)
                };
                let fc = f(&con);
                if fc < worst.1.min(fr) {
                    simplex[n] = (con, fc);
                } else {
                    let best = simplex[0].0.clone();
                    for p in simplex.iter_mut().skip(1) {
                        for (x, b) in p.0.iter_mut().zip(&best) {
                            *x = b + 0.5 * (*x - b);
                        }
                        p.1 = f(&p.0);
                    }
                }
            }
        }
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let (theta, neg) = simplex.swap_remove(0);
        if -neg >= f_start {
            (theta, -neg)
        } else {
            (start, f_start)
        }
    }
}
