//! Sign changes of scalar bound families.

use serde::{Deserialize, Serialize};

use crate::bounds::{gln_objective, interval_bound, walji_shifted_bound};
use crate::combination::CombinationSpec;
use crate::error::{Error, Result};

const BISECTION_TOL: f64 = 1e-6;

/// A bound that depends on one real parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum ThresholdFamily {
    /// `interval_bound(1, -1, -b, b)` as a function of `b`.
    IntervalRemark,
    /// `gln_objective` for one representation with pole order `M`, `t = 0`,
    /// `y = 1/X^2`, as a function of `X`.
    SingleRepGln { pole_order: u32 },
    /// `walji_shifted_bound(lambda, X)` as a function of `X`.
    WaljiShifted { lambda: f64 },
}

impl ThresholdFamily {
    pub fn eval(&self, p: f64) -> Result<f64> {
        match *self {
            Self::IntervalRemark => interval_bound(1.0, -1.0, -p, p),
            Self::SingleRepGln { pole_order } => {
                let spec = CombinationSpec::real(&[1.0]).with_pole_orders(vec![pole_order]);
                gln_objective(&spec, p, 1.0 / (p * p))
            }
            Self::WaljiShifted { lambda } => walji_shifted_bound(lambda, p),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Self::IntervalRemark => "interval(1, -1, -b, b)".into(),
            Self::SingleRepGln { pole_order } => format!("single-rep GL(n), M = {pole_order}"),
            Self::WaljiShifted { lambda } => format!("shifted GL(2), lambda = {lambda}"),
        }
    }
}

/// Locates the sign change of `family` on `[lo, hi]` by bisection to
/// `1e-6`. The endpoints must have opposite signs.
pub fn positivity_threshold(family: ThresholdFamily, lo: f64, hi: f64) -> Result<f64> {
    if !(lo < hi) {
        return Err(Error::Domain {
            name: "lo",
            value: lo,
            domain: "lo < hi",
        });
    }
    let no_change = || Error::NoSignChange {
        family: family.name(),
        lo,
        hi,
    };
    let (flo, fhi) = (family.eval(lo)?, family.eval(hi)?);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(no_change());
    }
    let (mut a, mut b) = (lo, hi);
    while b - a > BISECTION_TOL {
        let mid = 0.5 * (a + b);
        let fm = family.eval(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == flo.signum() {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}
