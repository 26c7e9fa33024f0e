//! Integer factorization at desk scale, radicals, powerful numbers, abc
//! quality, empirical scans, and the structural condition checkers for the
//! conditional finiteness criteria.
//!
//! Factorization is deterministic: trial division against a cached prime
//! sieve up to a configurable bound (default 10^6, overridable through the
//! `DIOPH_FACTOR_BOUND` environment variable), then a Brent-style rho
//! fallback with deterministic Miller-Rabin certification. Inputs are capped
//! at 64-bit magnitude; anything beyond that is a capacity error, never a
//! silent partial answer.

mod factor;
mod quality;
mod scans;
mod theorems;

pub use factor::{
    divisors, factorize, factorize_with, is_powerful, is_powerful_with, is_prime_u64, radical,
    radical_with, FactorConfig, Factorization,
};
pub use quality::{abc_quality, abc_quality_with, AbcQuality, QUALITY_FRACTION_DIGITS};
pub use scans::{
    granville_scan, granville_scan_with, largest_square_divisor_root, powerful_value_scan,
    powerful_value_scan_with, GranvilleRow, GranvilleScan, PowerfulScan,
};
pub use theorems::{
    check_theorem4_conditions, check_theorem5_conditions, check_theorem6_conditions, AbcParams,
    Condition, ConditionReport, FactoredEquation, FactoredPart, Sign,
};
