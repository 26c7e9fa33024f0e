//! The shift matrix `A(c)`, integer root extraction, and the shift-witness
//! test recognizing identities `g(x + c) = f(x)`.
//!
//! `A(c)` is the unipotent upper-triangular matrix whose row `i` expresses
//! the degree-`i` coefficient of `g(x + c)` in terms of the coefficients of
//! `g`: entry `(i, j) = C(j, i) c^(j-i)` for `j >= i`, zero below the
//! diagonal. Applying it to a coefficient vector is therefore the matrix
//! form of a Taylor shift, and `A(c1) A(c2) = A(c1 + c2)`.
//!
//! When `f` and `g` share degree and leading coefficient, an identity
//! `g(x + c) = f(x)` forces `c = (a_{m-1} - b_{m-1}) / (m b_m)` by comparing
//! the degree-`(m-1)` coefficients. The witness finder computes that unique
//! candidate exactly and verifies the full identity, so its answer is a
//! decision, not a heuristic.

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Zero};

use crate::abc;
use crate::error::{Error, Result};
use crate::polynomial::{Degree, IntPoly};

/// Materialized `A(c)` of dimension `(m+1) x (m+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftMatrix {
    c: BigInt,
    rows: Vec<Vec<BigInt>>,
}

/// Build `A(c)` for polynomials of degree `m`.
pub fn shift_matrix(c: &BigInt, m: usize) -> ShiftMatrix {
    let dim = m + 1;
    let mut rows = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut row = vec![BigInt::zero(); dim];
        let mut c_pow = BigInt::one();
        for (j, slot) in row.iter_mut().enumerate().skip(i) {
            *slot = binomial(BigInt::from(j), BigInt::from(i)) * &c_pow;
            c_pow *= c;
        }
        rows.push(row);
    }
    ShiftMatrix { c: c.clone(), rows }
}

/// `A b`: the coefficient vector of `g(x + c)` from the coefficients of `g`.
pub fn apply_shift(a: &ShiftMatrix, b: &[BigInt]) -> Result<Vec<BigInt>> {
    a.apply(b)
}

impl ShiftMatrix {
    pub fn shift(&self) -> &BigInt {
        &self.c
    }

    /// Matrix dimension `m + 1`.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    /// Multiply by a coefficient vector (length must equal `dim`).
    pub fn apply(&self, b: &[BigInt]) -> Result<Vec<BigInt>> {
        if b.len() != self.dim() {
            return Err(Error::domain(format!(
                "coefficient vector length {} does not match matrix dimension {}",
                b.len(),
                self.dim()
            )));
        }
        Ok(self
            .rows
            .iter()
            .map(|row| row.iter().zip(b).map(|(a, x)| a * x).sum())
            .collect())
    }

    /// Plain matrix product, returned as raw rows so tests can compare it
    /// entrywise against `shift_matrix(c1 + c2, m)`.
    pub fn multiply(&self, other: &ShiftMatrix) -> Result<Vec<Vec<BigInt>>> {
        if self.dim() != other.dim() {
            return Err(Error::domain(format!(
                "dimension mismatch: {} vs {}",
                self.dim(),
                other.dim()
            )));
        }
        let n = self.dim();
        let mut out = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if self.rows[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = &self.rows[i][k] * &other.rows[k][j];
                    out[i][j] += t;
                }
            }
        }
        Ok(out)
    }
}

/// Integer roots with multiplicities, roots strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootMultiset {
    pairs: Vec<(BigInt, u32)>,
}

impl RootMultiset {
    pub fn pairs(&self) -> &[(BigInt, u32)] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Sum of multiplicities.
    pub fn total_multiplicity(&self) -> usize {
        self.pairs.iter().map(|(_, m)| *m as usize).sum()
    }

    /// `prod (x - r)^mult` — the monic polynomial these roots account for.
    pub fn remultiply(&self) -> IntPoly {
        let mut acc = IntPoly::one();
        for (r, mult) in &self.pairs {
            let factor = IntPoly::from_coeffs(vec![-r, BigInt::one()]);
            acc = acc.mul(&factor.pow(*mult));
        }
        acc
    }
}

/// All integer roots of `p` with multiplicities. Requires `deg p >= 1`.
///
/// Candidates are the signed divisors of the trailing nonzero coefficient
/// (after splitting off the power of `x`), so the trailing coefficient must
/// fit the factorization cap.
pub fn integer_roots(p: &IntPoly) -> Result<RootMultiset> {
    match p.degree() {
        Degree::Finite(d) if d >= 1 => {}
        _ => return Err(Error::domain("root extraction requires degree >= 1")),
    }
    let mut pairs: Vec<(BigInt, u32)> = Vec::new();

    // Split off x^k: a zero root of multiplicity k.
    let k = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    if k > 0 {
        pairs.push((BigInt::zero(), k as u32));
    }
    let mut q = IntPoly::from_coeffs(p.coeffs()[k..].to_vec());
    if q.degree() == Degree::Finite(0) {
        return Ok(RootMultiset { pairs });
    }

    let trailing = q.coeff(0);
    for d in abc::divisors(&trailing)? {
        for r in [d.clone(), -d] {
            let mut mult = 0u32;
            while q.eval(&r).is_zero() {
                // divide out (x - r); exact since the divisor is monic
                let factor = IntPoly::from_coeffs(vec![-&r, BigInt::one()]);
                q = q.div_exact(&factor).expect("monic linear divisor of a root");
                mult += 1;
                if q.degree() == Degree::Finite(0) {
                    break;
                }
            }
            if mult > 0 {
                pairs.push((r, mult));
            }
        }
    }
    pairs.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(RootMultiset { pairs })
}

/// For monic `p` of degree >= 1: the full root multiset when `p` factors as
/// a product of monic integer linear factors, `None` otherwise.
pub fn splits_into_integer_linear_factors(p: &IntPoly) -> Result<Option<RootMultiset>> {
    if !p.is_monic() {
        return Err(Error::domain("splitting test requires monic input"));
    }
    let d = match p.degree() {
        Degree::Finite(d) if d >= 1 => d,
        _ => return Err(Error::domain("splitting test requires degree >= 1")),
    };
    let roots = integer_roots(p)?;
    if roots.total_multiplicity() == d {
        Ok(Some(roots))
    } else {
        Ok(None)
    }
}

/// Decide whether `g(x + c) = f(x)` for some integer `c`.
///
/// Requires `deg f = deg g >= 1`. If the leading coefficients differ no
/// shift can work. Otherwise comparing degree-`(m-1)` coefficients pins the
/// unique candidate `c = (a_{m-1} - b_{m-1}) / (m b_m)`; when that quotient
/// is an integer the full identity is verified by an exact Taylor shift.
pub fn find_shift_witness(f: &IntPoly, g: &IntPoly) -> Result<Option<BigInt>> {
    let m = match (f.degree(), g.degree()) {
        (Degree::Finite(a), Degree::Finite(b)) if a == b && a >= 1 => a,
        _ => {
            return Err(Error::domain(
                "shift witness requires equal degrees >= 1",
            ))
        }
    };
    if f.leading_coeff() != g.leading_coeff() {
        return Ok(None);
    }
    let numer = f.coeff(m - 1) - g.coeff(m - 1);
    let denom = BigInt::from(m) * g.leading_coeff().expect("degree >= 1");
    let (c, rem) = numer.div_rem(&denom);
    if !rem.is_zero() {
        return Ok(None);
    }
    if &g.taylor_shift(&c) == f {
        Ok(Some(c))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn bigs(vs: &[i64]) -> Vec<BigInt> {
        vs.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn matrix_structure() {
        let a = shift_matrix(&big(1), 2);
        assert_eq!(a.dim(), 3);
        assert_eq!(a.rows()[0], bigs(&[1, 1, 1]));
        assert_eq!(a.rows()[1], bigs(&[0, 1, 2]));
        assert_eq!(a.rows()[2], bigs(&[0, 0, 1]));
        // unipotent: unit diagonal, zeros below
        let a = shift_matrix(&big(-7), 4);
        for i in 0..a.dim() {
            assert_eq!(*a.entry(i, i), BigInt::one());
            for j in 0..i {
                assert!(a.entry(i, j).is_zero());
            }
        }
        // A(0) is the identity
        let id = shift_matrix(&BigInt::zero(), 3);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(*id.entry(i, j), if i == j { BigInt::one() } else { BigInt::zero() });
            }
        }
    }

    #[test]
    fn apply_matches_known_shifts() {
        // g = x^2 + 3x + 2: A(1) b = coefficients of g(x+1) = x^2 + 5x + 6
        let a = shift_matrix(&big(1), 2);
        assert_eq!(a.apply(&bigs(&[2, 3, 1])).unwrap(), bigs(&[6, 5, 1]));
        // g = x^2 + x: A(-1) b = coefficients of x^2 - x
        let a = shift_matrix(&big(-1), 2);
        assert_eq!(a.apply(&bigs(&[0, 1, 1])).unwrap(), bigs(&[0, -1, 1]));
    }

    #[test]
    fn apply_agrees_with_taylor_shift() {
        let g = p(&[4, -3, 0, 2, 1]);
        let c = big(5);
        let a = shift_matrix(&c, 4);
        let via_matrix = a.apply(&g.coeffs().to_vec()).unwrap();
        let via_poly = g.taylor_shift(&c);
        assert_eq!(IntPoly::from_coeffs(via_matrix), via_poly);
    }

    #[test]
    fn apply_rejects_wrong_length() {
        let a = shift_matrix(&big(1), 2);
        assert!(matches!(a.apply(&bigs(&[1, 2])), Err(Error::Domain(_))));
    }

    #[test]
    fn group_law() {
        let (c1, c2) = (big(2), big(3));
        let product = shift_matrix(&c1, 3).multiply(&shift_matrix(&c2, 3)).unwrap();
        let direct = shift_matrix(&(c1 + c2), 3);
        assert_eq!(product, direct.rows().to_vec());
    }

    #[test]
    fn integer_roots_examples() {
        let roots = integer_roots(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(roots.pairs(), &[(big(-1), 1), (big(1), 1)]);
        // (x-2)^2 (x+5)
        let q = p(&[-2, 1]).pow(2).mul(&p(&[5, 1]));
        let roots = integer_roots(&q).unwrap();
        assert_eq!(roots.pairs(), &[(big(-5), 1), (big(2), 2)]);
        assert_eq!(roots.total_multiplicity(), 3);
        assert_eq!(roots.remultiply(), q);
        // no integer roots
        assert!(integer_roots(&p(&[1, 0, 1])).unwrap().is_empty());
        // x^3: zero root with multiplicity
        let roots = integer_roots(&p(&[0, 0, 0, 1])).unwrap();
        assert_eq!(roots.pairs(), &[(BigInt::zero(), 3)]);
        // x(x-2)
        let roots = integer_roots(&p(&[0, -2, 1])).unwrap();
        assert_eq!(roots.pairs(), &[(BigInt::zero(), 1), (big(2), 1)]);
        // non-monic: 2x + 4 has root -2
        let roots = integer_roots(&p(&[4, 2])).unwrap();
        assert_eq!(roots.pairs(), &[(big(-2), 1)]);
    }

    #[test]
    fn integer_roots_rejects_constants() {
        assert!(matches!(integer_roots(&p(&[5])), Err(Error::Domain(_))));
        assert!(matches!(integer_roots(&IntPoly::zero()), Err(Error::Domain(_))));
    }

    #[test]
    fn splitting_test() {
        let s = splits_into_integer_linear_factors(&p(&[2, 3, 1])).unwrap();
        assert_eq!(s.unwrap().pairs(), &[(big(-2), 1), (big(-1), 1)]);
        assert!(splits_into_integer_linear_factors(&p(&[1, 0, 1])).unwrap().is_none());
        let s = splits_into_integer_linear_factors(&p(&[1, -2, 1])).unwrap();
        assert_eq!(s.unwrap().pairs(), &[(big(1), 2)]);
        // partial split is not a split: (x^2+1)(x-3)
        let q = p(&[1, 0, 1]).mul(&p(&[-3, 1]));
        assert!(splits_into_integer_linear_factors(&q).unwrap().is_none());
        assert!(matches!(
            splits_into_integer_linear_factors(&p(&[0, 2])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn shift_witness_examples() {
        let c = find_shift_witness(&p(&[2, 3, 1]), &p(&[0, 1, 1])).unwrap();
        assert_eq!(c, Some(big(1)));
        let c = find_shift_witness(&p(&[-1, 0, 1]), &p(&[0, 2, 1])).unwrap();
        assert_eq!(c, Some(big(-1)));
        // candidate divides but the full identity fails
        let c = find_shift_witness(&p(&[1, 0, 1]), &p(&[0, 0, 1])).unwrap();
        assert_eq!(c, None);
        // differing leading coefficients
        let c = find_shift_witness(&p(&[0, 0, 2]), &p(&[0, 0, 1])).unwrap();
        assert_eq!(c, None);
        // divisibility fails: f = x^2 + x + 1, g = y^2 (candidate 1/2)
        let c = find_shift_witness(&p(&[1, 1, 1]), &p(&[0, 0, 1])).unwrap();
        assert_eq!(c, None);
        // non-monic pair that does shift: 3(x+2)^2 vs 3y^2
        let f = p(&[4, 4, 1]).scale(&big(3));
        let c = find_shift_witness(&f, &p(&[0, 0, 3])).unwrap();
        assert_eq!(c, Some(big(2)));
    }

    #[test]
    fn shift_witness_requires_matching_degrees() {
        assert!(matches!(
            find_shift_witness(&p(&[1, 1]), &p(&[1, 0, 1])),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            find_shift_witness(&p(&[1]), &p(&[2])),
            Err(Error::Domain(_))
        ));
    }
}
