//! Max over `X > 1` of the min over `0 <= y <= r/X^2` of the `GL(n)`
//! objective.

use super::scalar::{golden_section_max, golden_section_min};
use super::{BoundResult, SearchConfig};
use crate::bounds::{gln_quotient, DerivedConstants};
use crate::combination::{Allocation, CombinationSpec, ThresholdLadder};
use crate::error::{Error, Result};

const GRID_POINTS: usize = 512;

struct Inner {
    k: DerivedConstants,
    t: f64,
    r: f64,
    tol: f64,
}

impl Inner {
    /// Minimizing `y` and the value at `X`.
    fn solve(&self, x: f64) -> (f64, f64) {
        let y_max = self.r / (x * x);
        let f = |y: f64| gln_quotient(self.k.a, self.k.sum_abs, self.k.c, self.k.d, self.t, x, y);
        golden_section_min(f, 0.0, y_max, self.tol)
    }
}

/// Optimizes the `GL(n)` bound for the event `sum lambda_i a_v < -t`,
/// `t = spec.shift_t >= 0`. The returned ladder is the single cutoff `[X]`
/// and `allocation.tail_y` the minimizing `y`.
pub fn gln_bound(spec: &CombinationSpec, config: &SearchConfig) -> Result<BoundResult> {
    config.validate()?;
    let k = DerivedConstants::new(spec)?;
    let t = spec.real_shift()?;
    if !(t >= 0.0) {
        return Err(Error::ShiftSign {
            value: t,
            required: "t >= 0 (event sum < -t)",
        });
    }
    let inner = Inner {
        k,
        t,
        r: spec.budget(),
        tol: config.inner_tolerance,
    };

    let (lo, hi) = (config.x_min.ln(), config.x_max.ln());
    let grid: Vec<f64> = (0..GRID_POINTS)
        .map(|i| (lo + (hi - lo) * i as f64 / (GRID_POINTS - 1) as f64).exp())
        .collect();
    let values: Vec<f64> = grid.iter().map(|&x| inner.solve(x).1).collect();
    let best = values
        .iter()
        .enumerate()
        .fold(0, |b, (i, v)| if *v > values[b] { i } else { b });

    let a = grid[best.saturating_sub(1)];
    let b = grid[(best + 1).min(GRID_POINTS - 1)];
    let (mut x, mut value) = golden_section_max(|x| inner.solve(x).1, a, b, 1e-10 * b);
    if values[best] > value {
        (x, value) = (grid[best], values[best]);
    }

    let (y, inner_value) = inner.solve(x);
    debug_assert_eq!(inner_value, value);
    let y_max = inner.r / (x * x);
    let at_cap = (y - y_max).abs() <= inner.tol;
    debug_assert!(t > 0.0 || at_cap, "t = 0 but min at y = {y}, cap {y_max}");

    Ok(BoundResult {
        value,
        ladder: ThresholdLadder::new(vec![x])?,
        allocation: Allocation {
            tail_y: y,
            ladder_y: vec![],
        },
        converged: t > 0.0 || at_cap,
        inner_residual: 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::gln_objective;

    fn single(m: u32) -> CombinationSpec {
        CombinationSpec::real(&[1.0]).with_pole_orders(vec![m])
    }

    #[test]
    fn walji_constant() {
        let r = gln_bound(&single(3), &SearchConfig::default()).unwrap();
        assert!(r.value >= 0.001355 - 1e-5, "{}", r.value);
        let x = r.ladder.base();
        assert!((9.0..=10.0).contains(&x), "{x}");
        assert!(r.converged);
        assert!((r.allocation.tail_y - 1.0 / (x * x)).abs() < 1e-10);
        let direct = gln_objective(&single(3), x, r.allocation.tail_y).unwrap();
        assert!((direct - r.value).abs() < 1e-12);
    }

    #[test]
    fn conjugates_constant() {
        let r = gln_bound(&single(7), &SearchConfig::default()).unwrap();
        assert!(r.value >= 3.49e-4 - 1e-5, "{}", r.value);
        assert!((17.0..=19.0).contains(&r.ladder.base()));
    }

    #[test]
    fn positive_shift_still_searches() {
        let spec = single(3).with_shift(0.5);
        let r = gln_bound(&spec, &SearchConfig::default()).unwrap();
        let x = r.ladder.base();
        let y = r.allocation.tail_y;
        assert!(y >= 0.0 && y <= 1.0 / (x * x) + 1e-15);
        let direct = gln_objective(&spec, x, y).unwrap();
        assert!((direct - r.value).abs() < 1e-12);
        for yy in [0.0, 0.5 / (x * x), 1.0 / (x * x)] {
            assert!(gln_objective(&spec, x, yy).unwrap() >= r.value - 1e-12);
        }
    }

    #[test]
    fn rejects_negative_shift() {
        let spec = single(3).with_shift(-0.1);
        assert!(matches!(
            gln_bound(&spec, &SearchConfig::default()),
            Err(Error::ShiftSign { .. })
        ));
    }
}
