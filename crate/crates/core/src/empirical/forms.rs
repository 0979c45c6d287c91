//! The level-one eigenforms `Delta` (weight 12) and `E_4 Delta` (weight 16).

use ethnum::I256;
use num_bigint::{BigInt, Sign};
use serde::{Deserialize, Serialize};

use super::series::{euler_power, mul_by_limbs, mul_truncated, Coeff};
use super::table::CoefficientTable;
use crate::error::{Error, Result};

pub const MAX_LIMIT: usize = 1_000_000;

/// Integer width used for the series arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Arithmetic {
    /// 128-bit, then 256-bit, then arbitrary precision, moving on at the
    /// first overflow.
    #[default]
    Auto,
    Fixed128,
    Fixed256,
    Arbitrary,
}

fn check_limit(n: usize) -> Result<()> {
    if !(1..=MAX_LIMIT).contains(&n) {
        return Err(Error::Domain {
            name: "limit",
            value: n as f64,
            domain: "1 <= N <= 1000000",
        });
    }
    Ok(())
}

/// `tau(1..=n)`: `Delta = q prod (1 - q^k)^24`, so `tau(j + 1)` is the
/// `q^j` coefficient of the 24th power of the Euler product.
fn delta_series<C: Coeff>(n: usize) -> Option<Vec<C>> {
    euler_power::<C>(24, n)
}

/// `1 + 240 sum sigma_3(n) q^n`; fails only if `240 sigma_3(n)` overflows.
fn eisenstein_e4<C: Coeff>(n: usize) -> Option<Vec<C>> {
    let mut sigma3 = vec![0i64; n];
    for d in 1..n {
        let cube = (d as i64).pow(3);
        for m in (d..n).step_by(d) {
            sigma3[m] += cube;
        }
    }
    sigma3
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            if i == 0 {
                Some(C::from_i64(1))
            } else {
                C::from_i64(240).mul(&C::from_i64(s))
            }
        })
        .collect()
}

fn widen<C: Coeff>(v: &[C]) -> Vec<BigInt> {
    v.iter().map(Coeff::to_bigint).collect()
}

fn to_i128(c: &BigInt) -> Option<i128> {
    i128::try_from(c).ok()
}

fn to_i256(c: &BigInt) -> Option<I256> {
    let bytes = c.to_signed_bytes_le();
    if bytes.len() > 32 {
        return None;
    }
    let fill = if c.sign() == Sign::Minus { 0xff } else { 0 };
    let mut buf = [fill; 32];
    buf[..bytes.len()].copy_from_slice(&bytes);
    Some(I256::from_le_bytes(buf))
}

fn overflow(arithmetic: &'static str, limit: usize) -> Error {
    Error::Overflow { arithmetic, limit }
}

fn delta_exact(n: usize, arithmetic: Arithmetic) -> Result<Vec<BigInt>> {
    let fixed128 = || delta_series::<i128>(n).map(|v| widen(&v));
    let fixed256 = || delta_series::<I256>(n).map(|v| widen(&v));
    let arbitrary = || delta_series::<BigInt>(n).expect("arbitrary precision cannot overflow");
    match arithmetic {
        Arithmetic::Fixed128 => fixed128().ok_or_else(|| overflow(i128::NAME, n)),
        Arithmetic::Fixed256 => fixed256().ok_or_else(|| overflow(I256::NAME, n)),
        Arithmetic::Arbitrary => Ok(arbitrary()),
        Arithmetic::Auto => Ok(fixed128().or_else(fixed256).unwrap_or_else(arbitrary)),
    }
}

/// Limb width for the `E_4 tau` product in [`Arithmetic::Auto`]: with
/// `E_4` coefficients below `2^60` and `N <= 10^6`, each limb convolution
/// stays well inside 128 bits.
const LIMB_BITS: u32 = 24;

/// `E_4 Delta` from exact `tau` values. `Delta` starts at `q^1`, so the
/// `q^j` coefficient of `E_4 Delta / q` pairs `E_4`'s `q^i` with
/// `tau(j - i + 1)`.
fn second_exact(n: usize, arithmetic: Arithmetic) -> Result<Vec<BigInt>> {
    let tau = delta_exact(n, arithmetic)?;
    let fixed128 = || {
        let d: Vec<i128> = tau.iter().map(to_i128).collect::<Option<_>>()?;
        mul_truncated(&eisenstein_e4::<i128>(n)?, &d, n).map(|v| widen(&v))
    };
    let fixed256 = || {
        let d: Vec<I256> = tau.iter().map(to_i256).collect::<Option<_>>()?;
        mul_truncated(&eisenstein_e4::<I256>(n)?, &d, n).map(|v| widen(&v))
    };
    let arbitrary = || {
        let e4 = eisenstein_e4::<BigInt>(n).expect("arbitrary precision cannot overflow");
        mul_truncated(&e4, &tau, n).expect("arbitrary precision cannot overflow")
    };
    match arithmetic {
        Arithmetic::Fixed128 => fixed128().ok_or_else(|| overflow(i128::NAME, n)),
        Arithmetic::Fixed256 => fixed256().ok_or_else(|| overflow(I256::NAME, n)),
        Arithmetic::Arbitrary => Ok(arbitrary()),
        Arithmetic::Auto => {
            let limbs = || mul_by_limbs(&eisenstein_e4::<i128>(n)?, &tau, n, LIMB_BITS);
            Ok(limbs().or_else(fixed256).unwrap_or_else(arbitrary))
        }
    }
}

/// Ramanujan's `tau(n)` for `n <= N`, `1 <= N <= 10^6`.
pub fn delta_coefficients(n: usize) -> Result<CoefficientTable> {
    delta_coefficients_in(n, Arithmetic::Auto)
}

pub fn delta_coefficients_in(n: usize, arithmetic: Arithmetic) -> Result<CoefficientTable> {
    check_limit(n)?;
    CoefficientTable::new("delta", 12, delta_exact(n, arithmetic)?)
}

/// Coefficients of the weight-16 level-one eigenform `E_4 Delta` for
/// `n <= N`, `1 <= N <= 10^6`.
pub fn second_form_coefficients(n: usize) -> Result<CoefficientTable> {
    second_form_coefficients_in(n, Arithmetic::Auto)
}

pub fn second_form_coefficients_in(n: usize, arithmetic: Arithmetic) -> Result<CoefficientTable> {
    check_limit(n)?;
    CoefficientTable::new("e4_delta", 16, second_exact(n, arithmetic)?)
}
