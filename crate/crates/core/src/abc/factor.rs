//! Deterministic integer factorization with a hard 64-bit magnitude cap.
//!
//! Pipeline: trial division against a cached sieve (default bound 10^6,
//! configurable), then deterministic Miller-Rabin plus Brent's variant of
//! Pollard rho for whatever cofactor survives. Exceeding the rho work budget
//! is a capacity error — we never return a partial factorization.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Sieve always covers at least this range; larger trial bounds fall back to
/// odd-step trial division past the sieve.
const SIEVE_LIMIT: u64 = 1_000_000;

/// Environment variable overriding the trial-division bound.
pub(crate) const FACTOR_BOUND_ENV: &str = "DIOPH_FACTOR_BOUND";

/// Tuning knobs for the factorization pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorConfig {
    /// Trial-divide by primes up to this bound before switching to rho.
    pub trial_bound: u64,
    /// Total rho iterations allowed per factorization before giving up with
    /// a capacity error.
    pub rho_budget: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            trial_bound: SIEVE_LIMIT,
            rho_budget: 50_000_000,
        }
    }
}

impl FactorConfig {
    /// Default configuration with the trial bound optionally overridden by
    /// the `DIOPH_FACTOR_BOUND` environment variable.
    pub fn from_env() -> Result<Self> {
        let mut cfg = FactorConfig::default();
        if let Ok(raw) = std::env::var(FACTOR_BOUND_ENV) {
            let v: u64 = raw.trim().parse().map_err(|_| {
                Error::domain(format!(
                    "{FACTOR_BOUND_ENV} must be a positive integer, got {raw:?}"
                ))
            })?;
            if v < 2 {
                return Err(Error::domain(format!("{FACTOR_BOUND_ENV} must be >= 2")));
            }
            cfg.trial_bound = v;
        }
        Ok(cfg)
    }
}

/// Complete prime factorization of `|input|`, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    input: BigInt,
    pairs: Vec<(BigInt, u32)>,
}

impl Factorization {
    pub fn input(&self) -> &BigInt {
        &self.input
    }

    /// `(prime, exponent)` pairs with primes strictly increasing; empty for
    /// `|input| = 1`.
    pub fn pairs(&self) -> &[(BigInt, u32)] {
        &self.pairs
    }

    /// Product of `prime^exponent`; always equals `|input|`.
    pub fn reassemble(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (p, e) in &self.pairs {
            acc *= p.pow(*e);
        }
        acc
    }

    /// Product of the distinct primes (1 for `|input| = 1`).
    pub fn radical(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (p, _) in &self.pairs {
            acc *= p;
        }
        acc
    }

    pub fn all_exponents_at_least(&self, k: u32) -> bool {
        self.pairs.iter().all(|(_, e)| *e >= k)
    }
}

/// Factor `n` using the environment-derived configuration.
pub fn factorize(n: &BigInt) -> Result<Factorization> {
    factorize_with(n, &FactorConfig::from_env()?)
}

pub fn factorize_with(n: &BigInt, cfg: &FactorConfig) -> Result<Factorization> {
    let m = magnitude_u64(n)?;
    let mut counts = BTreeMap::new();
    factor_u64_into(m, cfg, &mut counts)?;
    Ok(Factorization {
        input: n.clone(),
        pairs: counts
            .into_iter()
            .map(|(p, e)| (BigInt::from(p), e))
            .collect(),
    })
}

/// Product of the distinct primes dividing `|n|`.
pub fn radical(n: &BigInt) -> Result<BigInt> {
    radical_with(n, &FactorConfig::from_env()?)
}

pub fn radical_with(n: &BigInt, cfg: &FactorConfig) -> Result<BigInt> {
    Ok(factorize_with(n, cfg)?.radical())
}

/// True iff every prime dividing `|n|` does so at least twice
/// (vacuously true for `|n| = 1`).
pub fn is_powerful(n: &BigInt) -> Result<bool> {
    is_powerful_with(n, &FactorConfig::from_env()?)
}

pub fn is_powerful_with(n: &BigInt, cfg: &FactorConfig) -> Result<bool> {
    let mut m = magnitude_u64(n)?;
    if m == 1 {
        return Ok(true);
    }
    // Trial phase with early exit: the first unit exponent settles it.
    let bound = cfg.trial_bound.max(2);
    let mut below_sqrt = true;
    for d in trial_divisors(bound) {
        if d.saturating_mul(d) > m {
            below_sqrt = false;
            break;
        }
        if m % d == 0 {
            let mut e = 0u32;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            if e == 1 {
                return Ok(false);
            }
        }
    }
    if m == 1 {
        return Ok(true);
    }
    if !below_sqrt || is_prime_u64(m) {
        // Remaining cofactor is a prime with exponent 1.
        return Ok(false);
    }
    if exact_sqrt(m).is_some() {
        // Every exponent of a perfect square is even, hence >= 2.
        return Ok(true);
    }
    let mut counts = BTreeMap::new();
    let mut budget = cfg.rho_budget;
    split_cofactor(m, &mut budget, &mut counts)?;
    Ok(counts.values().all(|&e| e >= 2))
}

/// All positive divisors of `|n|`, ascending. Inherits the factorization cap.
pub fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    divisors_with(n, &FactorConfig::from_env()?)
}

pub fn divisors_with(n: &BigInt, cfg: &FactorConfig) -> Result<Vec<BigInt>> {
    let m = magnitude_u64(n)?;
    let mut counts = BTreeMap::new();
    factor_u64_into(m, cfg, &mut counts)?;
    let mut divs: Vec<u64> = vec![1];
    for (p, e) in counts {
        let base = divs.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            divs.extend(base.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    Ok(divs.into_iter().map(BigInt::from).collect())
}

fn magnitude_u64(n: &BigInt) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::domain("factorization of 0 is undefined"));
    }
    n.abs().to_u64().ok_or_else(|| {
        Error::capacity(format!(
            "|{n}| exceeds the 64-bit factorization cap ({})",
            u64::MAX
        ))
    })
}

fn factor_u64_into(n: u64, cfg: &FactorConfig, counts: &mut BTreeMap<u64, u32>) -> Result<()> {
    let mut m = n;
    let bound = cfg.trial_bound.max(2);
    let mut below_sqrt = true;
    for d in trial_divisors(bound) {
        if d.saturating_mul(d) > m {
            below_sqrt = false;
            break;
        }
        if m % d == 0 {
            let mut e = 0u32;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            counts.insert(d, e);
        }
    }
    if m > 1 {
        if !below_sqrt {
            // No divisor up to sqrt(m): the remainder is prime.
            *counts.entry(m).or_insert(0) += 1;
        } else {
            let mut budget = cfg.rho_budget;
            split_cofactor(m, &mut budget, counts)?;
        }
    }
    Ok(())
}

/// Trial divisors up to `bound`: the sieve primes, then odd numbers past the
/// sieve. Composite odd divisors past the sieve are harmless — their prime
/// factors have already been stripped, so they can never divide.
fn trial_divisors(bound: u64) -> impl Iterator<Item = u64> {
    let sieved = small_primes()
        .iter()
        .map(|&p| p as u64)
        .take_while(move |&p| p <= bound);
    let beyond = (SIEVE_LIMIT + 1..)
        .step_by(2)
        .take_while(move |&d| d <= bound);
    sieved.chain(beyond)
}

fn small_primes() -> &'static [u32] {
    static SIEVE: OnceLock<Vec<u32>> = OnceLock::new();
    SIEVE.get_or_init(|| {
        let limit = SIEVE_LIMIT as usize;
        let mut composite = vec![false; limit + 1];
        let mut primes = Vec::with_capacity(80_000);
        for p in 2..=limit {
            if composite[p] {
                continue;
            }
            primes.push(p as u32);
            let mut q = p * p;
            while q <= limit {
                composite[q] = true;
                q += p;
            }
        }
        primes
    })
}

/// Factor a cofactor all of whose prime factors exceed the trial bound.
fn split_cofactor(n: u64, budget: &mut u64, counts: &mut BTreeMap<u64, u32>) -> Result<()> {
    if n == 1 {
        return Ok(());
    }
    if is_prime_u64(n) {
        *counts.entry(n).or_insert(0) += 1;
        return Ok(());
    }
    let d = brent_factor(n, budget)?;
    split_cofactor(d, budget, counts)?;
    split_cofactor(n / d, budget, counts)
}

/// Deterministic Miller-Rabin, exact for all `n < 2^64` with this witness set.
pub fn is_prime_u64(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's cycle-finding variant of Pollard rho with deterministic seeds.
/// `n` must be odd, composite, and coprime to the polynomial constants tried.
fn brent_factor(n: u64, budget: &mut u64) -> Result<u64> {
    for c in 1..=64u64 {
        if let Some(d) = brent_attempt(n, c, budget)? {
            return Ok(d);
        }
    }
    Err(Error::capacity(format!("rho failed to split {n}")))
}

fn brent_attempt(n: u64, c: u64, budget: &mut u64) -> Result<Option<u64>> {
    let step = |v: u64| (mulmod(v, v, n) + c) % n;
    let charge = |budget: &mut u64, amount: u64| -> Result<()> {
        if *budget < amount {
            Err(Error::capacity(format!(
                "factorization work budget exhausted while splitting {n}"
            )))
        } else {
            *budget -= amount;
            Ok(())
        }
    };
    let mut y = 2u64;
    let mut r = 1u64;
    let mut q = 1u64;
    let mut g = 1u64;
    let mut x = 0u64;
    let mut ys = 0u64;
    while g == 1 {
        x = y;
        charge(budget, r)?;
        for _ in 0..r {
            y = step(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            let lim = 128.min(r - k);
            charge(budget, lim)?;
            for _ in 0..lim {
                y = step(y);
                q = mulmod(q, x.abs_diff(y), n);
            }
            g = num_integer::gcd(q, n);
            k += lim;
        }
        r <<= 1;
    }
    if g == n {
        // The batched gcd overshot; replay one step at a time.
        g = 1;
        while g == 1 {
            charge(budget, 1)?;
            ys = step(ys);
            g = num_integer::gcd(x.abs_diff(ys), n);
        }
    }
    if g == n {
        Ok(None) // cycle degenerated for this c; retry with the next constant
    } else {
        Ok(Some(g))
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn exact_sqrt(n: u64) -> Option<u64> {
    let mut s = (n as f64).sqrt() as u64;
    while s > 0 && s.checked_mul(s).map_or(true, |v| v > n) {
        s -= 1;
    }
    while (s + 1).checked_mul(s + 1).is_some_and(|v| v <= n) {
        s += 1;
    }
    if s * s == n {
        Some(s)
    } else {
        None
    }
}
