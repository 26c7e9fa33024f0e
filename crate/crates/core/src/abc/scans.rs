//! Empirical scans: powerful polynomial values and the largest square
//! divisor statistic.
//!
//! Both scans are diagnostics. The finiteness statements they illustrate
//! carry ineffective constants, so the scans report observations (with
//! stabilization checked only heuristically by callers) and never claim a
//! proof either way.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::factor::{factorize_with, is_powerful_with, FactorConfig};
use crate::error::{Error, Result};
use crate::polynomial::{Degree, IntPoly};

/// Largest range a scan will materialize.
const MAX_SCAN_SPAN: u128 = 1 << 32;

/// Result of [`powerful_value_scan`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerfulScan {
    /// All `m` in the range with `|g(m)| >= 1` powerful, ascending.
    pub hits: Vec<i64>,
    /// All `m` with `g(m) = 0`, ascending (reported separately: zero is
    /// neither powerful nor non-powerful here).
    pub zeros: Vec<i64>,
    /// Whether `g` satisfies the hypothesis (separable, degree > 2) under
    /// which powerful values are expected to be finite in number.
    pub hypothesis_met: bool,
    /// Human-readable flags, e.g. the "hypothesis unmet" warning.
    pub warnings: Vec<String>,
}

/// Scan `[lo, hi]` for integers `m` where `|g(m)|` is powerful.
pub fn powerful_value_scan(g: &IntPoly, lo: i64, hi: i64) -> Result<PowerfulScan> {
    powerful_value_scan_with(g, lo, hi, &FactorConfig::from_env()?)
}

pub fn powerful_value_scan_with(
    g: &IntPoly,
    lo: i64,
    hi: i64,
    cfg: &FactorConfig,
) -> Result<PowerfulScan> {
    if lo > hi {
        return Err(Error::domain(format!("empty scan range: {lo} > {hi}")));
    }
    if (hi as i128 - lo as i128) as u128 >= MAX_SCAN_SPAN {
        return Err(Error::capacity(format!(
            "scan range [{lo}, {hi}] exceeds {MAX_SCAN_SPAN} values"
        )));
    }
    let mut warnings = Vec::new();
    let hypothesis_met = match g.degree() {
        Degree::Finite(d) if d > 2 => {
            let sep = g.is_separable()?;
            if !sep {
                warnings.push("hypothesis unmet: g is not separable".to_string());
            }
            sep
        }
        _ => {
            warnings.push("hypothesis unmet: deg g <= 2".to_string());
            false
        }
    };

    #[derive(PartialEq)]
    enum Obs {
        Hit(i64),
        Zero(i64),
        Miss,
    }
    let observations: Vec<Obs> = (lo..=hi)
        .into_par_iter()
        .map(|m| {
            let v = g.eval(&BigInt::from(m));
            if v.is_zero() {
                Ok(Obs::Zero(m))
            } else if is_powerful_with(&v, cfg)? {
                Ok(Obs::Hit(m))
            } else {
                Ok(Obs::Miss)
            }
        })
        .collect::<Result<_>>()?;

    // Parallel iteration over an ordered range preserves order on collect,
    // so hits and zeros come out ascending.
    let mut hits = Vec::new();
    let mut zeros = Vec::new();
    for obs in observations {
        match obs {
            Obs::Hit(m) => hits.push(m),
            Obs::Zero(m) => zeros.push(m),
            Obs::Miss => {}
        }
    }
    Ok(PowerfulScan {
        hits,
        zeros,
        hypothesis_met,
        warnings,
    })
}

/// One record row of [`granville_scan`]: at `m`, the largest `q` with
/// `q^2 | |g(m)|`, and `log q / log m`.
#[derive(Debug, Clone, PartialEq)]
pub struct GranvilleRow {
    pub m: u64,
    pub q: u64,
    pub ratio: f64,
}

/// Running-maxima report of the square-divisor statistic. A diagnostic,
/// never a pass/fail bound: the underlying constant is ineffective.
#[derive(Debug, Clone, PartialEq)]
pub struct GranvilleScan {
    /// Rows where the ratio strictly exceeded every earlier ratio.
    pub records: Vec<GranvilleRow>,
    /// Values of `m` with `g(m) = 0`, skipped by the statistic.
    pub zeros: Vec<u64>,
    /// Number of `m` values processed (zeros included).
    pub scanned: u64,
}

impl GranvilleScan {
    pub fn max_ratio(&self) -> Option<f64> {
        self.records.last().map(|r| r.ratio)
    }

    /// Record rows whose ratio exceeds `threshold` (e.g. `1 + epsilon`).
    pub fn records_above(&self, threshold: f64) -> Vec<&GranvilleRow> {
        self.records.iter().filter(|r| r.ratio > threshold).collect()
    }
}

/// Scan `m = 2..=m_max` recording running maxima of `log q / log m` where
/// `q` is the largest integer with `q^2` dividing `|g(m)|`.
pub fn granville_scan(g: &IntPoly, m_max: u64) -> Result<GranvilleScan> {
    granville_scan_with(g, m_max, &FactorConfig::from_env()?)
}

pub fn granville_scan_with(g: &IntPoly, m_max: u64, cfg: &FactorConfig) -> Result<GranvilleScan> {
    if !g.is_separable()? {
        return Err(Error::domain(
            "the square-divisor statistic requires separable g (no repeated roots)",
        ));
    }
    if m_max < 2 {
        return Err(Error::domain("m_max must be at least 2"));
    }
    if (m_max as u128) >= MAX_SCAN_SPAN {
        return Err(Error::capacity(format!(
            "scan bound {m_max} exceeds {MAX_SCAN_SPAN}"
        )));
    }

    let per_m: Vec<(u64, Option<u64>)> = (2..=m_max)
        .into_par_iter()
        .map(|m| {
            let v = g.eval(&BigInt::from(m));
            if v.is_zero() {
                return Ok((m, None));
            }
            let q = largest_square_divisor_root_with(&v, cfg)?;
            Ok((m, Some(q.to_u64().expect("q^2 <= |g(m)| fits u64"))))
        })
        .collect::<Result<_>>()?;

    let mut records: Vec<GranvilleRow> = Vec::new();
    let mut zeros = Vec::new();
    for (m, q) in per_m {
        let Some(q) = q else {
            zeros.push(m);
            continue;
        };
        let ratio = if q == 1 {
            0.0
        } else {
            (q as f64).ln() / (m as f64).ln()
        };
        if records.last().map_or(true, |best| ratio > best.ratio) {
            records.push(GranvilleRow { m, q, ratio });
        }
    }
    Ok(GranvilleScan {
        records,
        zeros,
        scanned: m_max - 1,
    })
}

/// The largest `q >= 1` with `q^2` dividing `|n|`:
/// `q = prod p^floor(e_p / 2)` over the factorization of `|n|`.
pub fn largest_square_divisor_root(n: &BigInt) -> Result<BigInt> {
    largest_square_divisor_root_with(n, &FactorConfig::from_env()?)
}

pub fn largest_square_divisor_root_with(n: &BigInt, cfg: &FactorConfig) -> Result<BigInt> {
    let f = factorize_with(n, cfg)?;
    let mut q = BigInt::from(1);
    for (p, e) in f.pairs() {
        if *e >= 2 {
            q *= p.pow(e / 2);
        }
    }
    Ok(q)
}
