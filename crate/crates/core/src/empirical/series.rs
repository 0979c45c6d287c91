//! Exact truncated power series over integer rings with overflow checks.

use ethnum::I256;
use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{ToPrimitive, Zero};

const SCHOOLBOOK_CUTOFF: usize = 32;

/// An exact integer coefficient type. Fixed-width types report overflow by
/// returning `None`.
pub trait Coeff: Clone + Send + Sync {
    const NAME: &'static str;
    fn zero() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Option<Self>;
    fn sub(&self, rhs: &Self) -> Option<Self>;
    fn mul(&self, rhs: &Self) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
}

impl Coeff for i128 {
    const NAME: &'static str = "128-bit";
    fn zero() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v.into()
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, rhs: &Self) -> Option<Self> {
        self.checked_add(*rhs)
    }
    fn sub(&self, rhs: &Self) -> Option<Self> {
        self.checked_sub(*rhs)
    }
    fn mul(&self, rhs: &Self) -> Option<Self> {
        self.checked_mul(*rhs)
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coeff for I256 {
    const NAME: &'static str = "256-bit";
    fn zero() -> Self {
        I256::ZERO
    }
    fn from_i64(v: i64) -> Self {
        I256::from(v)
    }
    fn is_zero(&self) -> bool {
        *self == I256::ZERO
    }
    fn add(&self, rhs: &Self) -> Option<Self> {
        self.checked_add(*rhs)
    }
    fn sub(&self, rhs: &Self) -> Option<Self> {
        self.checked_sub(*rhs)
    }
    fn mul(&self, rhs: &Self) -> Option<Self> {
        self.checked_mul(*rhs)
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from_signed_bytes_le(&self.to_le_bytes())
    }
}

impl Coeff for BigInt {
    const NAME: &'static str = "arbitrary-precision";
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_i64(v: i64) -> Self {
        v.into()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Option<Self> {
        Some(self + rhs)
    }
    fn sub(&self, rhs: &Self) -> Option<Self> {
        Some(self - rhs)
    }
    fn mul(&self, rhs: &Self) -> Option<Self> {
        Some(self * rhs)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Converts an exact coefficient to the nearest `f64`.
pub fn to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

fn schoolbook<C: Coeff>(a: &[C], b: &[C]) -> Option<Vec<C>> {
    let mut out = vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add(&x.mul(y)?)?;
        }
    }
    Some(out)
}

fn add_into<C: Coeff>(dst: &mut [C], src: &[C]) -> Option<()> {
    for (d, s) in dst.iter_mut().zip(src) {
        *d = d.add(s)?;
    }
    Some(())
}

/// Full product of two equal-length coefficient slices, length `2n - 1`.
fn karatsuba<C: Coeff>(a: &[C], b: &[C]) -> Option<Vec<C>> {
    let n = a.len();
    debug_assert_eq!(n, b.len());
    if n <= SCHOOLBOOK_CUTOFF {
        return schoolbook(a, b);
    }
    let h = n / 2;
    let (a0, a1) = a.split_at(h);
    let (b0, b1) = b.split_at(h);
    let z0 = karatsuba(a0, b0)?;
    let z2 = karatsuba(a1, b1)?;

    let w = n - h;
    let mut sa = a1.to_vec();
    let mut sb = b1.to_vec();
    add_into(&mut sa[..h], a0)?;
    add_into(&mut sb[..h], b0)?;
    let mut z1 = karatsuba(&sa, &sb)?;
    for (i, z) in z1.iter_mut().enumerate() {
        if i < z0.len() {
            *z = z.sub(&z0[i])?;
        }
        *z = z.sub(&z2[i])?;
    }
    debug_assert_eq!(z1.len(), 2 * w - 1);

    let mut out = vec![C::zero(); 2 * n - 1];
    add_into(&mut out, &z0)?;
    add_into(&mut out[2 * h..], &z2)?;
    add_into(&mut out[h..], &z1)?;
    Some(out)
}

/// First `len` coefficients of `a * b` when `sparse` has few nonzero terms.
fn mul_sparse<C: Coeff>(sparse: &[C], dense: &[C], len: usize) -> Option<Vec<C>> {
    let mut out = vec![C::zero(); len];
    for (i, s) in sparse.iter().enumerate().take(len) {
        if s.is_zero() {
            continue;
        }
        for (o, d) in out[i..].iter_mut().zip(dense) {
            if !d.is_zero() {
                *o = o.add(&s.mul(d)?)?;
            }
        }
    }
    Some(out)
}

fn nonzeros<C: Coeff>(v: &[C]) -> usize {
    v.iter().filter(|c| !c.is_zero()).count()
}

/// First `len` coefficients of `a * b`. Returns `None` on overflow.
pub fn mul_truncated<C: Coeff>(a: &[C], b: &[C], len: usize) -> Option<Vec<C>> {
    if len == 0 {
        return Some(Vec::new());
    }
    let (a, b) = (&a[..a.len().min(len)], &b[..b.len().min(len)]);
    let (na, nb) = (nonzeros(a), nonzeros(b));
    if na.min(nb) * 64 < len {
        return if na <= nb {
            mul_sparse(a, b, len)
        } else {
            mul_sparse(b, a, len)
        };
    }
    let pad = |s: &[C]| {
        let mut v = s.to_vec();
        v.resize(len, C::zero());
        v
    };
    let mut out = karatsuba(&pad(a), &pad(b))?;
    out.truncate(len);
    Some(out)
}

/// First `len` coefficients of `a * b` for a narrow `a` and a wide `b`:
/// `b` is cut into signed `limb_bits`-bit limbs, each limb product runs in
/// checked 128-bit arithmetic, and the partial products are recombined
/// exactly. Returns `None` if any limb product overflows.
pub fn mul_by_limbs(a: &[i128], b: &[BigInt], len: usize, limb_bits: u32) -> Option<Vec<BigInt>> {
    let mask = (BigUint::from(1u32) << limb_bits) - 1u32;
    let widest = b.iter().map(|c| c.bits()).max().unwrap_or(0);
    let limbs = widest.div_ceil(u64::from(limb_bits)).max(1) as u32;
    let mut out = vec![<BigInt as Zero>::zero(); len];
    for k in 0..limbs {
        let shift = k * limb_bits;
        let part: Vec<i128> = b
            .iter()
            .map(|c| {
                let limb = i128::try_from((c.magnitude() >> shift) & &mask).unwrap();
                if c.sign() == Sign::Minus {
                    -limb
                } else {
                    limb
                }
            })
            .collect();
        let prod = mul_truncated(a, &part, len)?;
        for (o, p) in out.iter_mut().zip(prod) {
            *o += BigInt::from(p) << shift;
        }
    }
    Some(out)
}

/// `prod_{n >= 1} (1 - q^n)` to `len` terms via the pentagonal number
/// theorem: `sum_k (-1)^k q^{k(3k-1)/2}` over all integers `k`.
pub fn euler_product<C: Coeff>(len: usize) -> Vec<C> {
    let mut out = vec![C::zero(); len];
    if len == 0 {
        return out;
    }
    out[0] = C::from_i64(1);
    for k in 1i64.. {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let g1 = (k * (3 * k - 1) / 2) as usize;
        let g2 = (k * (3 * k + 1) / 2) as usize;
        if g1 >= len {
            break;
        }
        out[g1] = C::from_i64(sign);
        if g2 < len {
            out[g2] = C::from_i64(sign);
        }
    }
    out
}

/// `euler_product^e` to `len` terms by left-to-right binary powering, so
/// every multiplication by the sparse base takes the sparse path.
pub fn euler_power<C: Coeff>(e: u32, len: usize) -> Option<Vec<C>> {
    let base = euler_product::<C>(len);
    if e == 0 {
        let mut one = vec![C::zero(); len];
        if len > 0 {
            one[0] = C::from_i64(1);
        }
        return Some(one);
    }
    let mut acc = base.clone();
    for bit in (0..31 - e.leading_zeros()).rev() {
        acc = mul_truncated(&acc, &acc, len)?;
        if e >> bit & 1 == 1 {
            acc = mul_truncated(&acc, &base, len)?;
        }
    }
    Some(acc)
}
