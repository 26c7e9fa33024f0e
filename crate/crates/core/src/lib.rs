//! Exact-arithmetic toolkit for finiteness questions about integer solutions of
//! `f(x) = g(y)`, with special support for the product form
//! `(y + q_1)(y + q_2) ... (y + q_m) = f(x)`.
//!
//! Everything here is computed over arbitrary-precision integers; no floating
//! point enters any verdict. The crate is organized bottom-up:
//!
//! * [`polynomial`] — dense integer polynomials (evaluation, Taylor shift, gcd,
//!   separability).
//! * [`shift`] — the unipotent shift matrix `A(c)`, integer root extraction and
//!   the shift-witness test that recognizes `g(x + c) = f(x)` identities.
//! * [`abc`] — integer factorization, radicals, powerful numbers, abc quality,
//!   and the condition checkers for the conditional finiteness criteria.
//! * [`classifier`] — the verdict engine tying the structural tests together.
//! * [`search`] — brute-force solution enumeration over boxes and the
//!   complete-composite machinery.
//! * [`cli`] — expression parsing, report formatting and the `dioph` command
//!   line driver.

pub mod abc;
pub mod classifier;
pub mod cli;
pub mod error;
pub mod polynomial;
pub mod search;
pub mod shift;

pub use error::{Error, Result};
pub use polynomial::{Degree, IntPoly};
