//! Inner minimization of the `GL(2)` objective over allocations.
//!
//! The objective splits into one term per coordinate,
//! `-(lin * y + tq * y^{3/4} + half * y^{1/2}) / (2 B(X)^2)`, each convex and
//! strictly decreasing. The minimum therefore spends the whole budget and
//! satisfies `lin + 3/4 tq y^{-1/4} + 1/2 half y^{-1/2} = kappa` on every
//! coordinate for a common multiplier `kappa`. With `u = y^{-1/4}` that is a
//! quadratic in `u`, so each `y_i(kappa)` is explicit and only the scalar
//! `kappa` with `sum y_i(kappa) = budget` needs a root finder.

use crate::bounds::DerivedConstants;
use crate::combination::{Allocation, CombinationSpec, ThresholdLadder};
use crate::error::{Error, Result};

/// Minimizer of the `GL(2)` objective at a fixed ladder.
#[derive(Debug, Clone, PartialEq)]
pub struct AllocationSolution {
    pub allocation: Allocation,
    pub value: f64,
    /// Euclidean norm of the gradient projected onto the budget face.
    pub residual: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy)]
struct Coord {
    lin: f64,
    tq: f64,
    half: f64,
}

impl Coord {
    fn gain(&self, y: f64) -> f64 {
        self.lin * y + self.tq * y.powf(0.75) + self.half * y.sqrt()
    }

    fn marginal(&self, y: f64) -> f64 {
        self.lin + 0.75 * self.tq / y.powf(0.25) + 0.5 * self.half / y.sqrt()
    }

    fn is_flat(&self) -> bool {
        self.tq == 0.0 && self.half == 0.0
    }

    /// The mass at which the marginal gain drops to `lin + excess`.
    fn mass_at(&self, excess: f64) -> f64 {
        if self.is_flat() {
            return 0.0;
        }
        let b = 0.75 * self.tq;
        let u = 2.0 * excess / (b + (b * b + 2.0 * self.half * excess).sqrt());
        u.powi(-4)
    }
}

/// The objective at a fixed ladder, split by coordinate. Index 0 is the tail
/// mass, index `k` the mass in cell `k`.
pub(crate) struct Separable {
    a: f64,
    denom: f64,
    coords: Vec<Coord>,
}

impl Separable {
    pub(crate) fn new(k: &DerivedConstants, ladder: &ThresholdLadder) -> Self {
        let cut = ladder.cutoffs();
        let b0 = k.envelope(ladder.base());
        let top = ladder.top();
        let t4 = k.t.powf(0.25);
        let mut coords = Vec::with_capacity(cut.len());
        coords.push(Coord {
            lin: 0.0,
            tq: t4 * b0 / top.powf(1.5),
            half: k.t.sqrt() / top,
        });
        for w in cut.windows(2) {
            let (floor, bk) = (w[0], k.envelope(w[1]));
            coords.push(Coord {
                lin: 2.0 * (bk * bk - b0 * b0) / (floor * floor),
                tq: t4 * (bk - b0) / floor.powf(1.5),
                half: 0.0,
            });
        }
        Self {
            a: k.a,
            denom: 2.0 * b0 * b0,
            coords,
        }
    }

    fn value(&self, ys: &[f64]) -> f64 {
        let spent: f64 = self.coords.iter().zip(ys).map(|(c, &y)| c.gain(y)).sum();
        (self.a - spent) / self.denom
    }

    fn mass(&self, floor: f64, excess: f64) -> f64 {
        self.coords
            .iter()
            .map(|c| c.mass_at(floor + excess - c.lin))
            .sum()
    }

    fn solve(&self, budget: f64) -> Vec<f64> {
        let n = self.coords.len();
        if budget == 0.0 {
            return vec![0.0; n];
        }
        debug_assert!(self.coords.iter().all(|c| !c.is_flat() || c.lin == 0.0));
        let floor = self
            .coords
            .iter()
            .filter(|c| !c.is_flat())
            .map(|c| c.lin)
            .fold(0.0, f64::max);

        // mass(excess) decreases from +inf at 0+ to 0 at +inf.
        let mut hi = 1.0;
        while self.mass(floor, hi) > budget {
            hi *= 2.0;
        }
        let mut lo = hi / 2.0;
        while self.mass(floor, lo) <= budget {
            hi = lo;
            lo /= 2.0;
            if lo == 0.0 {
                break;
            }
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.mass(floor, mid) > budget {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        self.coords
            .iter()
            .map(|c| c.mass_at(floor + hi - c.lin))
            .collect()
    }

    fn projected_gradient_norm(&self, ys: &[f64]) -> f64 {
        let grads: Vec<f64> = self
            .coords
            .iter()
            .zip(ys)
            .filter(|(c, &y)| y > 0.0 && !c.is_flat())
            .map(|(c, &y)| -c.marginal(y) / self.denom)
            .collect();
        if grads.is_empty() {
            return 0.0;
        }
        let mean = grads.iter().sum::<f64>() / grads.len() as f64;
        grads.iter().map(|g| (g - mean).powi(2)).sum::<f64>().sqrt()
    }

    /// Solve at `budget` and package with the stationarity certificate.
    pub(crate) fn minimize(&self, budget: f64, tolerance: f64) -> AllocationSolution {
        let ys = self.solve(budget);
        let value = self.value(&ys);
        let residual = self.projected_gradient_norm(&ys);
        let spent: f64 = ys.iter().sum();
        let budget_active = (spent - budget).abs() <= 1e-12 * budget.max(1.0);
        debug_assert!(budget_active, "mass {spent} vs budget {budget}");
        AllocationSolution {
            allocation: Allocation {
                tail_y: ys[0],
                ladder_y: ys[1..].to_vec(),
            },
            value,
            residual,
            converged: residual <= tolerance && budget_active,
        }
    }

    /// Minimum value only, for the outer search.
    pub(crate) fn min_value(&self, budget: f64) -> f64 {
        self.value(&self.solve(budget))
    }
}

pub(crate) const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Minimizes the `GL(2)` objective over `y, y_1, ..., y_m >= 0` with
/// `y + sum y_k <= r`.
pub fn minimize_allocation(
    spec: &CombinationSpec,
    ladder: &ThresholdLadder,
) -> Result<AllocationSolution> {
    minimize_allocation_with_budget(spec, ladder, spec.budget())
}

/// [`minimize_allocation`] with the budget overridden.
pub fn minimize_allocation_with_budget(
    spec: &CombinationSpec,
    ladder: &ThresholdLadder,
    budget: f64,
) -> Result<AllocationSolution> {
    if !(budget >= 0.0) || !budget.is_finite() {
        return Err(Error::Domain {
            name: "budget",
            value: budget,
            domain: "finite and >= 0",
        });
    }
    let k = DerivedConstants::new(spec)?;
    Ok(Separable::new(&k, ladder).minimize(budget, DEFAULT_TOLERANCE))
}
