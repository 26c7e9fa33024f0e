//! The abc quality log(c)/log(rad(abc)) at fixed decimal precision.
//!
//! The logarithms are evaluated in pure integer arithmetic: fixed-point
//! atanh series via `ln n = 2 atanh((n - 2^k)/(n + 2^k)) + k ln 2` with
//! `k = bitlen(n) - 1`, carrying guard digits past the published precision.
//! No floating point is involved, so results are bit-stable across platforms.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use super::factor::{radical_with, FactorConfig};
use crate::error::{Error, Result};

/// Published precision of [`abc_quality`]: the ratio is rounded to exactly
/// this many fractional decimal digits.
pub const QUALITY_FRACTION_DIGITS: u32 = 50;

/// Extra working digits carried through the logarithm series.
const GUARD_DIGITS: u32 = 15;

/// An abc quality value: `scaled / 10^50`, rounded half-up from the true
/// ratio at working precision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbcQuality {
    scaled: BigInt,
}

impl AbcQuality {
    /// The ratio times `10^50`.
    pub fn scaled(&self) -> &BigInt {
        &self.scaled
    }

    /// The ratio as an exact rational with denominator dividing `10^50`.
    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.scaled.clone(), pow10(QUALITY_FRACTION_DIGITS))
    }

    /// Decimal rendering with exactly 50 fractional digits, e.g.
    /// `1.22629438553091682625950772306435824706971628108579`.
    pub fn to_decimal_string(&self) -> String {
        let denom = pow10(QUALITY_FRACTION_DIGITS);
        let (int_part, frac_part) = self.scaled.div_rem(&denom);
        // Qualities are ratios of logs of integers >= 2: always positive.
        format!(
            "{}.{:0>width$}",
            int_part,
            frac_part.magnitude().to_string(),
            width = QUALITY_FRACTION_DIGITS as usize
        )
    }
}

impl fmt::Display for AbcQuality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string())
    }
}

/// Quality of the abc triple `(a, b, a+b)`: `log(a+b) / log(rad(a*b*(a+b)))`.
///
/// Requires `a, b >= 1` and `gcd(a, b) = 1`. The radical is computed from
/// the factorizations of `a`, `b`, and `a+b` separately (they are pairwise
/// coprime), so each of the three must fit the 64-bit factorization cap.
pub fn abc_quality(a: &BigInt, b: &BigInt) -> Result<AbcQuality> {
    abc_quality_with(a, b, &FactorConfig::from_env()?)
}

pub fn abc_quality_with(a: &BigInt, b: &BigInt, cfg: &FactorConfig) -> Result<AbcQuality> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::domain("abc quality requires a, b >= 1"));
    }
    if !a.gcd(b).is_one() {
        return Err(Error::domain(format!(
            "abc quality requires coprime a, b; gcd({a}, {b}) > 1"
        )));
    }
    let c = a + b;
    // a, b, c pairwise coprime, so rad(abc) = rad(a) rad(b) rad(c).
    let rad = radical_with(a, cfg)? * radical_with(b, cfg)? * radical_with(&c, cfg)?;

    let scale = pow10(QUALITY_FRACTION_DIGITS + GUARD_DIGITS);
    let ln_c = fixed_ln(c.magnitude(), &scale);
    let ln_rad = fixed_ln(rad.magnitude(), &scale);
    // rad >= 2 always (c >= 2 contributes at least one prime).
    debug_assert!(ln_rad.is_positive());

    // Round half-up: floor((2*x*10^50 + y) / (2*y)).
    let numer = &ln_c * pow10(QUALITY_FRACTION_DIGITS);
    let scaled = (&numer * 2 + &ln_rad) / (&ln_rad * 2);
    Ok(AbcQuality { scaled })
}

fn pow10(digits: u32) -> BigInt {
    BigInt::from(10u32).pow(digits)
}

/// `ln(n) * scale`, exact integer arithmetic. Every intermediate division
/// truncates toward zero, so the result underestimates: up to ~2 ulp per
/// series term, and the `k * ln 2` reduction multiplies ln 2's own ~60-ulp
/// deficit by `k = floor(log2 n)`. Even for thousand-bit inputs that stays
/// ~5 orders below the guard digits padding the published precision.
/// `n >= 1`.
fn fixed_ln(n: &BigUint, scale: &BigInt) -> BigInt {
    if n.is_one() {
        return BigInt::zero();
    }
    let n = BigInt::from(n.clone());
    let k = n.bits() - 1; // 2^k <= n < 2^(k+1)
    let pow2 = BigInt::one() << k;
    // t = (n - 2^k) / (n + 2^k) in [0, 1/3); ln(n/2^k) = 2 atanh(t)
    let t = (&n - &pow2) * scale / (&n + &pow2);
    let ln_mantissa = fixed_atanh(&t, scale) * 2;
    ln_mantissa + BigInt::from(k) * ln2(scale)
}

/// `ln(2) * scale` via `2 atanh(1/3)`.
fn ln2(scale: &BigInt) -> BigInt {
    let third = scale / 3;
    fixed_atanh(&third, scale) * 2
}

/// `atanh(t/scale) * scale` for `0 <= t <= scale/3`, by the odd power series.
/// Terms shrink at least geometrically by 1/9, so the loop ends quickly.
fn fixed_atanh(t: &BigInt, scale: &BigInt) -> BigInt {
    let t_sq = t * t / scale;
    let mut power = t.clone();
    let mut sum = t.clone();
    let mut k = 1u64;
    loop {
        power = &power * &t_sq / scale;
        if power.is_zero() {
            return sum;
        }
        k += 2;
        sum += &power / BigInt::from(k);
    }
}
