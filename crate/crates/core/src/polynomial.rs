//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! Coefficients are stored low-to-high in a `Vec<BigInt>`; the vector never
//! has trailing zeros, so the zero polynomial is the empty vector and every
//! nonzero polynomial has a well-defined leading coefficient. The degree of
//! the zero polynomial is the distinguished [`Degree::MinusInfinity`] marker,
//! never `-1` smuggled through an integer.
//!
//! All arithmetic is exact. Division never rounds: [`IntPoly::div_exact`]
//! succeeds only when the quotient exists in `Z[x]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// Degree of a polynomial, with a distinguished marker for the zero
/// polynomial so that `deg(0) < deg(c)` for every nonzero constant `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(usize),
}

impl Degree {
    /// The finite degree, or `None` for the zero polynomial.
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{}", d),
        }
    }
}

/// Polynomial with integer coefficients.
///
/// Invariant: `coeffs` never ends with a zero; `coeffs[i]` is the coefficient
/// of `x^i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        IntPoly::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// Constant polynomial.
    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        IntPoly::from_coeffs(coeffs)
    }

    /// Build from low-to-high coefficients, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Convenience constructor from machine integers, low-to-high.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Low-to-high coefficients without trailing zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::MinusInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Leading coefficient; `None` for the zero polynomial.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    /// Multiply every coefficient by `k`.
    pub fn scale(&self, k: &BigInt) -> IntPoly {
        if k.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluate at `v` by Horner's rule.
    pub fn eval(&self, v: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * v + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::from_coeffs(out)
    }

    /// Coefficients of `p(x + c)`, computed by the in-place Horner cascade
    /// (repeated synthetic division by `x - c`). Exact; no binomial table.
    pub fn taylor_shift(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() || self.coeffs.len() <= 1 {
            return self.clone();
        }
        let n = self.coeffs.len() - 1;
        let mut a = self.coeffs.clone();
        for k in 0..n {
            for j in (k..n).rev() {
                let t = c * &a[j + 1];
                a[j] += t;
            }
        }
        IntPoly::from_coeffs(a)
    }

    /// Content: the gcd of all coefficients, nonnegative (0 for the zero
    /// polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self` divided by its content. Sign of the leading coefficient is
    /// preserved; the zero polynomial maps to itself.
    pub fn primitive_part(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Exact division in `Z[x]`: returns `q` with `self = q * d`, or `None`
    /// when no such `q` with integer coefficients exists (including division
    /// by zero).
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.coeffs.len() < d.coeffs.len() {
            return None;
        }
        let dd = d.coeffs.len() - 1;
        let lead = d.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let top = std::mem::take(&mut rem[k + dd]);
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, dc) in d.coeffs.iter().enumerate().take(dd) {
                rem[k + i] -= &c * dc;
            }
            q[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(q))
    }

    /// Greatest common divisor via the primitive pseudo-remainder sequence.
    ///
    /// The result is primitive with positive leading coefficient, so it is a
    /// canonical generator of the gcd up to units. Errors if both inputs are
    /// zero.
    pub fn gcd(&self, other: &IntPoly) -> Result<IntPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::domain("gcd(0, 0) is undefined"));
        }
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = pseudo_rem(&a, &b).primitive_part();
            a = b;
            b = r;
        }
        if a.leading_coeff().is_some_and(|c| c.is_negative()) {
            a = a.neg();
        }
        Ok(a)
    }

    /// A polynomial of degree >= 1 is separable when it has no repeated
    /// complex root, i.e. `gcd(p, p')` is constant.
    pub fn is_separable(&self) -> Result<bool> {
        match self.degree() {
            Degree::Finite(d) if d >= 1 => {}
            _ => return Err(Error::domain("separability is defined for degree >= 1")),
        }
        let g = self.gcd(&self.derivative())?;
        Ok(g.degree() == Degree::Finite(0))
    }

    /// Render with the given variable name ("x^3 - 2*x + 5" style). The
    /// output parses back to an equal polynomial.
    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            if k > 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push_str(var);
                if k > 1 {
                    out.push('^');
                    out.push_str(&k.to_string());
                }
            }
        }
        out
    }
}

/// Pseudo-remainder of `a` by `b` (`deg a >= deg b`, `b` nonzero): the
/// remainder after repeatedly clearing the top term of `a` scaled by the
/// leading coefficient of `b`. Only used up to a constant factor, which the
/// primitive PRS discards.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.coeffs.len() - 1;
    let lb = b.coeffs.last().unwrap().clone();
    let mut r = a.clone();
    while !r.is_zero() && r.coeffs.len() - 1 >= db {
        let k = r.coeffs.len() - 1 - db;
        let lr = r.coeffs.last().unwrap().clone();
        let shifted = IntPoly::monomial(lr, k).mul(b);
        r = r.scale(&lb).sub(&shifted);
    }
    r
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("x"))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self)
    }
}

impl std::ops::Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::mul(self, rhs)
    }
}

impl std::ops::Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::neg(self)
    }
}
