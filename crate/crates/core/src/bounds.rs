//! Closed-form lower bounds on densities of places where a combination of
//! Hecke coefficients is negative, large, or confined to an interval.
//!
//! Every function here is a pure evaluation of a displayed formula. The
//! coefficients enter only through `|lambda_i|` and `|lambda_i|^2`, except
//! [`rc_sector_bound`], which also reads `Re t`.
//!
//! Two sign conventions for the shift coexist. The `GL(n)` bound without
//! Ramanujan counts `sum lambda_i a_v < -t` with `t >= 0`; the bounds under
//! Ramanujan count `sum lambda_i a_v < t` with `t <= 0`. Each function
//! rejects the wrong sign instead of negating it.

use std::f64::consts::FRAC_PI_2;

use crate::combination::{Allocation, CombinationSpec, ThresholdLadder};
use crate::error::{Error, Result};

/// `A = sum |lambda_i|^2`.
pub fn coef_a(spec: &CombinationSpec) -> Result<f64> {
    spec.validate()?;
    Ok(spec.abs_lambdas().map(|a| a * a).sum())
}

/// Fourth-moment constant `T`.
///
/// For pairwise twist-inequivalent representations
/// `T = 2 sum |l_i|^4 + 6 sum_{i<j} |l_i l_j|^2 + 24 sum_{i<j<k<l} |l_i l_j l_k l_l|`,
/// otherwise `T = 2 (sum |l_i|)^4`.
pub fn coef_t(spec: &CombinationSpec) -> Result<f64> {
    spec.validate()?;
    let abs: Vec<f64> = spec.abs_lambdas().collect();
    let general = t_general(&abs);
    if !spec.twist_inequivalent {
        return Ok(general);
    }
    let twisted = t_twist_inequivalent(&abs);
    assert!(
        twisted <= general * (1.0 + 1e-12),
        "twist-inequivalent T = {twisted} exceeds 2(sum|l|)^4 = {general}"
    );
    Ok(twisted)
}

fn t_general(abs: &[f64]) -> f64 {
    2.0 * abs.iter().sum::<f64>().powi(4)
}

fn t_twist_inequivalent(abs: &[f64]) -> f64 {
    let r = abs.len();
    let quartic: f64 = abs.iter().map(|a| a.powi(4)).sum();
    let mut pairs = 0.0;
    let mut quads = 0.0;
    for i in 0..r {
        for j in i + 1..r {
            pairs += (abs[i] * abs[j]).powi(2);
            for k in j + 1..r {
                for l in k + 1..r {
                    quads += abs[i] * abs[j] * abs[k] * abs[l];
                }
            }
        }
    }
    2.0 * quartic + 6.0 * pairs + 24.0 * quads
}

/// Which power of `M_i` enters `C = sum |lambda_i| M_i^p`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PoleExponent {
    /// `sqrt(M_i)`, the constant used for every published value.
    #[default]
    Sqrt,
    /// `M_i^{1/4}`, which the fourth-moment estimate also supports.
    Quarter,
}

/// `C = sum |lambda_i| sqrt(M_i)` (or `M_i^{1/4}` in the sharp mode).
pub fn coef_c(spec: &CombinationSpec, exponent: PoleExponent) -> Result<f64> {
    spec.validate()?;
    let p = match exponent {
        PoleExponent::Sqrt => 0.5,
        PoleExponent::Quarter => 0.25,
    };
    Ok(spec
        .abs_lambdas()
        .zip(&spec.pole_orders)
        .map(|(a, &m)| a * f64::from(m).powf(p))
        .sum())
}

/// `D = sum sqrt(M_i)`.
pub fn coef_d(spec: &CombinationSpec) -> Result<f64> {
    spec.validate()?;
    Ok(spec.pole_orders.iter().map(|&m| f64::from(m).sqrt()).sum())
}

/// Largest root of `t^4 - 3t^2 - 1 - x`: if `|a_v(Sym^4 pi)| <= x` then
/// `|a_v(pi)| <= c(x)`.
pub fn ramanujan_cutoff(x: f64) -> Result<f64> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            name: "x",
            value: x,
            domain: "x >= 0",
        });
    }
    Ok(cutoff_unchecked(x))
}

#[inline]
pub(crate) fn cutoff_unchecked(x: f64) -> f64 {
    ((3.0 + (13.0 + 4.0 * x).sqrt()) / 2.0).sqrt()
}

/// The constants `A`, `T`, `C`, `D` of a combination and the envelope
/// `B(x) = c(x) sum |lambda_i|`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct DerivedConstants {
    pub a: f64,
    pub t: f64,
    pub c: f64,
    pub d: f64,
    pub sum_abs: f64,
}

impl DerivedConstants {
    pub fn new(spec: &CombinationSpec) -> Result<Self> {
        Self::with_exponent(spec, PoleExponent::Sqrt)
    }

    pub fn with_exponent(spec: &CombinationSpec, exponent: PoleExponent) -> Result<Self> {
        Ok(Self {
            a: coef_a(spec)?,
            t: coef_t(spec)?,
            c: coef_c(spec, exponent)?,
            d: coef_d(spec)?,
            sum_abs: spec.abs_lambdas().sum(),
        })
    }

    /// `B(x)`; strictly increasing in `x`.
    pub fn envelope(&self, x: f64) -> f64 {
        cutoff_unchecked(x) * self.sum_abs
    }
}

/// The `GL(2)` max-min objective at a fixed ladder and allocation:
///
/// ```text
/// A - sqrt(yT)/X_m - (T y^3)^{1/4} B(X)/X_m^{3/2}
///   - 2 sum_k (B(X_k)^2 - B(X)^2) y_k / X_{k-1}^2
///   - T^{1/4} sum_k (B(X_k) - B(X)) y_k^{3/4} / X_{k-1}^{3/2}
/// ------------------------------------------------------------
///                         2 B(X)^2
/// ```
///
/// The budget is `r`, the number of coefficients.
pub fn gl2_objective(
    spec: &CombinationSpec,
    ladder: &ThresholdLadder,
    alloc: &Allocation,
) -> Result<f64> {
    gl2_objective_with_budget(spec, ladder, alloc, spec.budget())
}

/// [`gl2_objective`] against an explicit budget instead of `r`.
pub fn gl2_objective_with_budget(
    spec: &CombinationSpec,
    ladder: &ThresholdLadder,
    alloc: &Allocation,
    budget: f64,
) -> Result<f64> {
    let k = DerivedConstants::new(spec)?;
    alloc.validate(ladder, budget)?;
    let envelope: Vec<f64> = ladder.cutoffs().iter().map(|&x| k.envelope(x)).collect();
    Ok(gl2_quotient(k.a, k.t, &envelope, ladder.cutoffs(), alloc))
}

/// The `GL(2)` quotient with the envelope values `B(X_0), ..., B(X_m)`
/// supplied directly. No validation.
pub fn gl2_quotient(a: f64, t: f64, envelope: &[f64], cutoffs: &[f64], alloc: &Allocation) -> f64 {
    let b0 = envelope[0];
    let x_top = cutoffs[cutoffs.len() - 1];
    let y = alloc.tail_y;
    let mut num = a - (y * t).sqrt() / x_top - (t * y.powi(3)).powf(0.25) * b0 / x_top.powf(1.5);
    let t4 = t.powf(0.25);
    for (k, &yk) in alloc.ladder_y.iter().enumerate() {
        let bk = envelope[k + 1];
        let floor = cutoffs[k];
        num -= 2.0 * (bk * bk - b0 * b0) * yk / (floor * floor);
        num -= t4 * (bk - b0) * yk.powf(0.75) / floor.powf(1.5);
    }
    num / (2.0 * b0 * b0)
}

fn check_base_cutoff(x: f64) -> Result<()> {
    if !(x > 1.0) || !x.is_finite() {
        return Err(Error::Domain {
            name: "X",
            value: x,
            domain: "X > 1",
        });
    }
    Ok(())
}

/// The `GL(n)` objective
/// `(t^2 + A - (t + XB)(t(1-y) + y^{3/4} C) - (t^2 + A)(y + y^{1/2} D)) / (2 (XB + t)^2)`
/// with `B = sum |lambda_i|`, for the event `sum lambda_i a_v < -t`, `t >= 0`.
pub fn gln_objective(spec: &CombinationSpec, x: f64, y: f64) -> Result<f64> {
    gln_objective_with(spec, x, y, PoleExponent::Sqrt)
}

pub fn gln_objective_with(
    spec: &CombinationSpec,
    x: f64,
    y: f64,
    exponent: PoleExponent,
) -> Result<f64> {
    let k = DerivedConstants::with_exponent(spec, exponent)?;
    let t = spec.real_shift()?;
    if t < 0.0 {
        return Err(Error::ShiftSign {
            value: t,
            required: "t >= 0 (event sum < -t)",
        });
    }
    check_base_cutoff(x)?;
    let y_max = spec.budget() / (x * x);
    if !(y >= 0.0) || y > y_max * (1.0 + 1e-12) {
        return Err(Error::Domain {
            name: "y",
            value: y,
            domain: "0 <= y <= r / X^2",
        });
    }
    Ok(gln_quotient(k.a, k.sum_abs, k.c, k.d, t, x, y))
}

pub(crate) fn gln_quotient(a: f64, b: f64, c: f64, d: f64, t: f64, x: f64, y: f64) -> f64 {
    let base = t * t + a;
    let reach = t + x * b;
    let num = base - reach * (t * (1.0 - y) + y.powf(0.75) * c) - base * (y + y.sqrt() * d);
    num / (2.0 * reach * reach)
}

/// Density bound for `|a_v(pi) - lambda| > sqrt(1 + lambda^2)`:
///
/// ```text
/// (1 + 4l^2)(1 - (2 + sqrt 6)/X - 2/X^2) - 2^{3/4}(2 l sqrt 2 + sqrt 3)(1 + 2l) X^{-1/2}
/// -----------------------------------------------------------------------------------
///                               2 (1 + 2l)^2 X^2
/// ```
pub fn walji_shifted_bound(lambda: f64, x: f64) -> Result<f64> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::Domain {
            name: "lambda",
            value: lambda,
            domain: "lambda > 0",
        });
    }
    check_base_cutoff(x)?;
    let l2 = lambda * lambda;
    let main = (1.0 + 4.0 * l2) * (1.0 - (2.0 + 6f64.sqrt()) / x - 2.0 / (x * x));
    let corr = 2f64.powf(0.75) * (2.0 * lambda * 2f64.sqrt() + 3f64.sqrt()) * (1.0 + 2.0 * lambda)
        / x.sqrt();
    Ok((main - corr) / (2.0 * (1.0 + 2.0 * lambda).powi(2) * x * x))
}

/// `sum n_i |lambda_i|`, the Ramanujan bound on `|sum lambda_i a_v|`.
fn ramanujan_scale(spec: &CombinationSpec) -> f64 {
    spec.abs_lambdas()
        .zip(&spec.dims)
        .map(|(a, &n)| a * f64::from(n))
        .sum()
}

/// Bound for `arg(sum lambda_i a_v - t)` outside `(-eps, eps)` under
/// Ramanujan. Reads the complex shift, including `Re t`.
pub fn rc_sector_bound(spec: &CombinationSpec, epsilon: f64) -> Result<f64> {
    spec.validate()?;
    if !(epsilon > 0.0 && epsilon < FRAC_PI_2) {
        return Err(Error::Domain {
            name: "epsilon",
            value: epsilon,
            domain: "0 < epsilon < pi/2",
        });
    }
    let a: f64 = spec.abs_lambdas().map(|l| l * l).sum();
    let scale = ramanujan_scale(spec);
    let t = spec.shift_t;
    let sec = 1.0 / epsilon.cos();
    let num = t.norm_sqr() + a + (t.norm() + scale) * t.re * sec;
    Ok(num / ((1.0 + sec) * (scale + t.norm()).powi(2)))
}

fn nonpositive_shift(spec: &CombinationSpec) -> Result<f64> {
    let t = spec.real_shift()?;
    if t > 0.0 {
        return Err(Error::ShiftSign {
            value: t,
            required: "t <= 0 (event sum < t)",
        });
    }
    Ok(t)
}

/// Bound for `sum lambda_i a_v < t <= 0` under Ramanujan, real combination:
/// `(sum |l_i|^2 + t sum n_i |l_i|) / (2 (sum n_i |l_i| + |t|)^2)`.
pub fn rc_real_bound(spec: &CombinationSpec) -> Result<f64> {
    spec.validate()?;
    let t = nonpositive_shift(spec)?;
    let a: f64 = spec.abs_lambdas().map(|l| l * l).sum();
    let scale = ramanujan_scale(spec);
    Ok((a + t * scale) / (2.0 * (scale + t.abs()).powi(2)))
}

/// Bound for `Re sum lambda_i a_v < t <= 0` under Ramanujan:
/// `(sum |l_i|^2 + 2t sum n_i |l_i|) / (4 (sum n_i |l_i| + |t|)^2)`.
pub fn rc_real_part_bound(spec: &CombinationSpec) -> Result<f64> {
    spec.validate()?;
    let t = nonpositive_shift(spec)?;
    let a: f64 = spec.abs_lambdas().map(|l| l * l).sum();
    let scale = ramanujan_scale(spec);
    Ok((a + 2.0 * t * scale) / (4.0 * (scale + t.abs()).powi(2)))
}

fn check_nonpositive(t: f64) -> Result<()> {
    if !(t <= 0.0) {
        return Err(Error::ShiftSign {
            value: t,
            required: "t <= 0",
        });
    }
    Ok(())
}

fn check_positive_int(name: &'static str, v: u32) -> Result<()> {
    if v == 0 {
        return Err(Error::Domain {
            name,
            value: 0.0,
            domain: ">= 1",
        });
    }
    Ok(())
}

/// `a_v(pi) < t <= 0` on a ray class mod `m` with `h` classes, `pi` on `GL(n)`:
/// `1/(2(n+|t|)^2 h) + t n/(2(n+|t|)^2)`.
pub fn congruence_bound_rc(n: u32, h: u32, t: f64) -> Result<f64> {
    check_positive_int("n", n)?;
    check_positive_int("h", h)?;
    check_nonpositive(t)?;
    let n = f64::from(n);
    let denom = 2.0 * (n + t.abs()).powi(2);
    Ok(1.0 / (denom * f64::from(h)) + t * n / denom)
}

/// `a_v(pi) < t` at places split completely in `E`, where `E/L` is abelian of
/// order `n` over a quadratic `L`, and `pi` lives on `GL(d)`, `d` in `{2, 3}`:
/// `(n + 1 + 2 t d^2 n^2) / (2 (2 + |t|)^2 d^2 n^2)`.
pub fn split_bound_quadratic(n: u32, d: u32, t: f64) -> Result<f64> {
    check_positive_int("n", n)?;
    if d != 2 && d != 3 {
        return Err(Error::Domain {
            name: "d",
            value: f64::from(d),
            domain: "d in {2, 3}",
        });
    }
    check_nonpositive(t)?;
    let n = f64::from(n);
    let d2n2 = f64::from(d * d) * n * n;
    Ok((n + 1.0 + 2.0 * t * d2n2) / (2.0 * (2.0 + t.abs()).powi(2) * d2n2))
}

/// `|a_v(pi)| > 1` at completely split places, through `Sym^2 pi` on
/// `GL(3)`: `(n + 1)/(72 n^2)`.
pub fn split_bound_quadratic_magnitude(n: u32) -> Result<f64> {
    check_positive_int("n", n)?;
    let n = f64::from(n);
    Ok((n + 1.0) / (72.0 * n * n))
}

/// The cubic analogue: `(n + 2 + 18 t n^2) / (18 (2 + |t|)^2 n^2)`.
pub fn split_bound_cubic(n: u32, t: f64) -> Result<f64> {
    check_positive_int("n", n)?;
    check_nonpositive(t)?;
    let n = f64::from(n);
    Ok((n + 2.0 + 18.0 * t * n * n) / (18.0 * (2.0 + t.abs()).powi(2) * n * n))
}

/// Bound for `sum lambda_i a_v(pi_i)^2 + nu_1 a_v(s_1)a_v(t_1) + nu_2 a_v(s_2)a_v(t_2) < t`:
///
/// ```text
/// (t-A)^2 + B + (t-A)(|t-A| + 3C + 4|nu_1| + 6|nu_2|)
/// ---------------------------------------------------
///        2 (3C + 4|nu_1| + 6|nu_2| + |t|)^2
/// ```
///
/// with `A = sum lambda_i`, `B = sum lambda_i^2 + sum nu_j^2`, `C = sum |lambda_i|`.
pub fn product_bound(lambdas: &[f64], nus: [f64; 2], t: f64) -> Result<f64> {
    if lambdas
        .iter()
        .chain(&nus)
        .chain([&t])
        .any(|v| !v.is_finite())
    {
        return Err(Error::InvalidSpec("non-finite input".into()));
    }
    if lambdas.iter().chain(&nus).all(|&v| v == 0.0) {
        return Err(Error::InvalidSpec("all coefficients are zero".into()));
    }
    let a: f64 = lambdas.iter().sum();
    let b: f64 = lambdas.iter().chain(&nus).map(|v| v * v).sum();
    let c: f64 = lambdas.iter().map(|v| v.abs()).sum();
    let reach = 3.0 * c + 4.0 * nus[0].abs() + 6.0 * nus[1].abs();
    let s = t - a;
    Ok((s * s + b + s * (s.abs() + reach)) / (2.0 * (reach + t.abs()).powi(2)))
}

/// Bound for `a < lambda_1 a_v(pi_1) + lambda_2 a_v(pi_2) < b`: `m/(2B^2) - M/(2B)` with
///
/// ```text
/// m = 2(l1^4 + l2^4) + 6 l1^2 l2^2 + (l1^2 + l2^2)((a+b)^2 + 2ab) + a^2 b^2
/// B = 4(|l1| + |l2|)^2 + 2(|a| + |b|)(|l1| + |l2|) + |ab|
/// M = l1^2 + l2^2 + ab
/// ```
pub fn interval_bound(lambda1: f64, lambda2: f64, a: f64, b: f64) -> Result<f64> {
    if ![lambda1, lambda2, a, b].iter().all(|v| v.is_finite()) {
        return Err(Error::InvalidSpec("non-finite input".into()));
    }
    if !(a < b) {
        return Err(Error::Domain {
            name: "a",
            value: a,
            domain: "a < b",
        });
    }
    if lambda1 == 0.0 && lambda2 == 0.0 {
        return Err(Error::InvalidSpec("all coefficients are zero".into()));
    }
    let (l1s, l2s) = (lambda1 * lambda1, lambda2 * lambda2);
    let sum_abs = lambda1.abs() + lambda2.abs();
    let m = 2.0 * (l1s * l1s + l2s * l2s)
        + 6.0 * l1s * l2s
        + (l1s + l2s) * ((a + b).powi(2) + 2.0 * a * b)
        + a * a * b * b;
    let big_b = 4.0 * sum_abs * sum_abs + 2.0 * (a.abs() + b.abs()) * sum_abs + (a * b).abs();
    let big_m = l1s + l2s + a * b;
    Ok(m / (2.0 * big_b * big_b) - big_m / (2.0 * big_b))
}

/// `a_v(pi) < 0` at places split completely in `E` (with `Gal(E/L)` abelian
/// of order `n` over a quadratic `L`) without assuming Ramanujan, at cutoff
/// `X`. This is the `GL(n)` objective for `n + 1` summands with
/// `A = B = n + 1`, `C = D = 2 sqrt 2 + (n - 1) sqrt 19`, `t = 0`, evaluated
/// at its minimizing mass `y = (n + 1)/X^2`.
pub fn split_gln_bound(n: u32, x: f64) -> Result<f64> {
    check_positive_int("n", n)?;
    check_base_cutoff(x)?;
    let r = f64::from(n) + 1.0;
    let cd = 2.0 * 2f64.sqrt() + (r - 2.0) * 19f64.sqrt();
    Ok(gln_quotient(r, r, cd, cd, 0.0, x, r / (x * x)))
}
