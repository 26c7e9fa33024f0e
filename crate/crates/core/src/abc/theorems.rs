//! Structural condition checkers for the conditional finiteness criteria.
//!
//! An equation `f(x) = g(y)` is presented in factored form: `f` as a product
//! of powered parts plus-or-minus a second product of powered parts, `g` as a
//! single product of powered parts. An empty right-hand part list means the
//! second product is the empty product 1, i.e. `f = prod(left) ± 1`.
//!
//! The checkers evaluate every condition and report pass/fail per condition;
//! they never guess. Degree bookkeeping follows the criteria as written: the
//! "1 + deg(...)" bound multiplies every base polynomial exactly once,
//! ignoring exponents.

use num_rational::BigRational;
use num_traits::Signed;
use std::fmt;

use crate::error::{Error, Result};
use crate::polynomial::{Degree, IntPoly};

/// One powered factor `base^exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredPart {
    pub base: IntPoly,
    pub exponent: u32,
}

impl FactoredPart {
    pub fn new(base: IntPoly, exponent: u32) -> Self {
        FactoredPart { base, exponent }
    }

    pub fn expand(&self) -> IntPoly {
        self.base.pow(self.exponent)
    }
}

/// Sign joining the two products of `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// Exact rational parameters for the conditional criteria (the epsilon of
/// the underlying conjecture). Only used to annotate reports; no verdict
/// depends on a numeric epsilon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbcParams {
    epsilon: BigRational,
}

impl AbcParams {
    pub fn new(epsilon: BigRational) -> Result<Self> {
        if !epsilon.is_positive() {
            return Err(Error::domain("epsilon must be positive"));
        }
        Ok(AbcParams { epsilon })
    }

    pub fn epsilon(&self) -> &BigRational {
        &self.epsilon
    }

    /// `1 + epsilon` as a float, for report annotations only.
    pub fn one_plus_epsilon_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        1.0 + self.epsilon.to_f64().unwrap_or(0.0)
    }
}

/// `f(x) = g(y)` with both sides in factored form:
/// `f = prod(left^alpha) ± prod(right^beta)`, `g = prod(g_parts^gamma)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredEquation {
    left_parts: Vec<FactoredPart>,
    right_parts: Vec<FactoredPart>,
    sign: Sign,
    g_parts: Vec<FactoredPart>,
}

impl FactoredEquation {
    /// Validates shape: nonempty left and g part lists, exponents >= 1, no
    /// zero base, and `f` must not expand to the zero polynomial.
    pub fn new(
        left_parts: Vec<FactoredPart>,
        right_parts: Vec<FactoredPart>,
        sign: Sign,
        g_parts: Vec<FactoredPart>,
    ) -> Result<Self> {
        if left_parts.is_empty() {
            return Err(Error::domain("f needs at least one left part"));
        }
        if g_parts.is_empty() {
            return Err(Error::domain("g needs at least one part"));
        }
        for part in left_parts.iter().chain(&right_parts).chain(&g_parts) {
            if part.base.is_zero() {
                return Err(Error::domain("factored parts must have nonzero bases"));
            }
            if part.exponent == 0 {
                return Err(Error::domain("factored part exponents must be >= 1"));
            }
        }
        let eq = FactoredEquation {
            left_parts,
            right_parts,
            sign,
            g_parts,
        };
        if eq.f().is_zero() {
            return Err(Error::domain("f expands to the zero polynomial"));
        }
        Ok(eq)
    }

    pub fn left_parts(&self) -> &[FactoredPart] {
        &self.left_parts
    }

    pub fn right_parts(&self) -> &[FactoredPart] {
        &self.right_parts
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn g_parts(&self) -> &[FactoredPart] {
        &self.g_parts
    }

    /// Expanded `f = prod(left^alpha) ± prod(right^beta)`; an empty right
    /// list contributes the empty product 1.
    pub fn f(&self) -> IntPoly {
        let left = expand_product(&self.left_parts);
        let right = expand_product(&self.right_parts);
        match self.sign {
            Sign::Plus => left.add(&right),
            Sign::Minus => left.sub(&right),
        }
    }

    /// Expanded `g`.
    pub fn g(&self) -> IntPoly {
        expand_product(&self.g_parts)
    }
}

fn expand_product(parts: &[FactoredPart]) -> IntPoly {
    let mut acc = IntPoly::one();
    for part in parts {
        acc = acc.mul(&part.expand());
    }
    acc
}

fn base_product(part_lists: &[&[FactoredPart]]) -> IntPoly {
    let mut acc = IntPoly::one();
    for parts in part_lists {
        for part in *parts {
            acc = acc.mul(&part.base);
        }
    }
    acc
}

/// One checked condition of a criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub label: String,
    pub holds: bool,
    pub detail: String,
}

/// Pass/fail breakdown of one criterion's hypotheses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub criterion: String,
    pub conditions: Vec<Condition>,
    pub notes: Vec<String>,
}

impl ConditionReport {
    pub fn all_hold(&self) -> bool {
        self.conditions.iter().all(|c| c.holds)
    }

    fn push(&mut self, label: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.conditions.push(Condition {
            label: label.into(),
            holds,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}:", self.criterion)?;
        for c in &self.conditions {
            writeln!(
                f,
                "  [{}] {}: {}",
                if c.holds { "pass" } else { "FAIL" },
                c.label,
                c.detail
            )?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// Conditions under which `f(x) = g(y)` with `deg g < deg f` has finitely
/// many integer solutions (conditional on the abc conjecture):
/// (1) `deg g < deg f`;
/// (2) `deg g > 1 + deg(product of every base, each once)`;
/// (3) the two base products of `f` share no nonconstant factor;
/// (4) the base products of the left parts, right parts, and `g` all have
///     positive leading coefficients.
pub fn check_theorem4_conditions(eq: &FactoredEquation) -> Result<ConditionReport> {
    check_degree_split_criterion(eq, "Thm 4", true)
}

/// Mirror of [`check_theorem4_conditions`] with the degree inequalities of
/// the high-degree-g case: (1) `deg g > deg f`; (2) `deg f > 1 + deg(...)`.
pub fn check_theorem5_conditions(eq: &FactoredEquation) -> Result<ConditionReport> {
    check_degree_split_criterion(eq, "Thm 5", false)
}

fn check_degree_split_criterion(
    eq: &FactoredEquation,
    criterion: &str,
    g_below_f: bool,
) -> Result<ConditionReport> {
    let f = eq.f();
    let g = eq.g();
    let deg_f = f
        .degree()
        .finite()
        .expect("validated: f is nonzero") as i64;
    let deg_g = g
        .degree()
        .finite()
        .expect("validated: g parts are nonzero") as i64;

    let mut report = ConditionReport {
        criterion: criterion.to_string(),
        conditions: Vec::new(),
        notes: Vec::new(),
    };

    if g_below_f {
        report.push(
            "(1) deg g < deg f",
            deg_g < deg_f,
            format!("deg g = {deg_g}, deg f = {deg_f}"),
        );
    } else {
        report.push(
            "(1) deg g > deg f",
            deg_g > deg_f,
            format!("deg g = {deg_g}, deg f = {deg_f}"),
        );
    }

    let bases = base_product(&[eq.left_parts(), eq.right_parts(), eq.g_parts()]);
    let bases_deg = bases
        .degree()
        .finite()
        .expect("validated: no zero base") as i64;
    if g_below_f {
        report.push(
            "(2) deg g > 1 + deg(all bases, each once)",
            deg_g > 1 + bases_deg,
            format!("deg g = {deg_g}, base product degree = {bases_deg}"),
        );
    } else {
        report.push(
            "(2) deg f > 1 + deg(all bases, each once)",
            deg_f > 1 + bases_deg,
            format!("deg f = {deg_f}, base product degree = {bases_deg}"),
        );
    }

    let left = base_product(&[eq.left_parts()]);
    let right = base_product(&[eq.right_parts()]);
    let common = left.gcd(&right)?;
    report.push(
        "(3) base products share no nonconstant factor",
        common.degree() == Degree::Finite(0),
        format!("gcd of base products = {common}"),
    );

    let g_bases = base_product(&[eq.g_parts()]);
    let all_positive = [&left, &right, &g_bases]
        .iter()
        .all(|p| p.leading_coeff().is_some_and(|c| c.is_positive()));
    report.push(
        "(4) base products have positive leading coefficients",
        all_positive,
        format!(
            "leading coefficients: left {}, right {}, g {}",
            left.leading_coeff().expect("nonzero"),
            right.leading_coeff().expect("nonzero"),
            g_bases.leading_coeff().expect("nonzero"),
        ),
    );

    Ok(report)
}

/// Conditions of the separable-versus-powered criterion: `f` separable with
/// `deg f > 2`, and every exponent in `g = prod(g_i^gamma_i)` at least 2.
/// Finiteness of `f(x) = g(y)` is then conditional on the abc conjecture.
pub fn check_theorem6_conditions(
    f: &IntPoly,
    g_parts: &[FactoredPart],
) -> Result<ConditionReport> {
    let mut report = ConditionReport {
        criterion: "Thm 6".to_string(),
        conditions: Vec::new(),
        notes: Vec::new(),
    };

    let deg_f = f.degree().finite();
    report.push(
        "deg f > 2",
        deg_f.is_some_and(|d| d > 2),
        format!("deg f = {}", f.degree()),
    );

    let separable = match deg_f {
        Some(d) if d >= 1 => f.is_separable()?,
        _ => false,
    };
    report.push("f separable", separable, format!("f = {f}"));

    if g_parts.is_empty() {
        report.push("every gamma_i >= 2", false, "g has no parts".to_string());
        return Ok(report);
    }
    let min_gamma = g_parts.iter().map(|p| p.exponent).min().unwrap();
    let zero_base = g_parts.iter().any(|p| p.base.is_zero());
    report.push(
        "every gamma_i >= 2",
        min_gamma >= 2 && !zero_base,
        if zero_base {
            "a g part has zero base".to_string()
        } else {
            format!("smallest exponent = {min_gamma}")
        },
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    fn part(coeffs: &[i64], e: u32) -> FactoredPart {
        FactoredPart::new(p(coeffs), e)
    }

    #[test]
    fn equation_reconstruction() {
        // f = x^9 + (x+1)^9, g = y^7
        let eq = FactoredEquation::new(
            vec![part(&[0, 1], 9)],
            vec![part(&[1, 1], 9)],
            Sign::Plus,
            vec![part(&[0, 1], 7)],
        )
        .unwrap();
        assert_eq!(eq.f().degree(), Degree::Finite(9));
        assert_eq!(eq.g(), p(&[0, 1]).pow(7));
        // empty right side contributes the empty product 1
        let eq = FactoredEquation::new(
            vec![part(&[0, 1], 3)],
            vec![],
            Sign::Minus,
            vec![part(&[0, 1], 2)],
        )
        .unwrap();
        assert_eq!(eq.f(), p(&[-1, 0, 0, 1]));
    }

    #[test]
    fn equation_validation() {
        assert!(FactoredEquation::new(vec![], vec![], Sign::Plus, vec![part(&[0, 1], 2)]).is_err());
        assert!(FactoredEquation::new(vec![part(&[0, 1], 1)], vec![], Sign::Plus, vec![]).is_err());
        assert!(FactoredEquation::new(
            vec![part(&[], 1)],
            vec![],
            Sign::Plus,
            vec![part(&[0, 1], 2)]
        )
        .is_err());
        assert!(FactoredEquation::new(
            vec![part(&[0, 1], 0)],
            vec![],
            Sign::Plus,
            vec![part(&[0, 1], 2)]
        )
        .is_err());
        // x^3 - x^3 = 0
        assert!(FactoredEquation::new(
            vec![part(&[0, 1], 3)],
            vec![part(&[0, 1], 3)],
            Sign::Minus,
            vec![part(&[0, 1], 2)]
        )
        .is_err());
    }

    #[test]
    fn theorem4_passing_fixture() {
        // f = x^9 + (x+1)^9, g = y^7: deg f = 9 > 7 = deg g,
        // base degrees 1+1+1 = 3, 7 > 4.
        let eq = FactoredEquation::new(
            vec![part(&[0, 1], 9)],
            vec![part(&[1, 1], 9)],
            Sign::Plus,
            vec![part(&[0, 1], 7)],
        )
        .unwrap();
        let report = check_theorem4_conditions(&eq).unwrap();
        assert!(report.all_hold(), "{report}");
        assert_eq!(report.conditions.len(), 4);
    }

    #[test]
    fn theorem4_shared_base_fails_condition_3() {
        // f = x^5 ± x: both sides share the base x.
        let eq = FactoredEquation::new(
            vec![part(&[0, 1], 5)],
            vec![part(&[0, 1], 1)],
            Sign::Plus,
            vec![part(&[0, 1], 2)],
        )
        .unwrap();
        let report = check_theorem4_conditions(&eq).unwrap();
        let c3 = &report.conditions[2];
        assert!(c3.label.contains("(3)"));
        assert!(!c3.holds);
    }

    #[test]
    fn theorem4_negative_leading_fails_condition_4() {
        // g part -y^7
        let eq = FactoredEquation::new(
            vec![part(&[0, 1], 9)],
            vec![part(&[1, 1], 9)],
            Sign::Plus,
            vec![part(&[0, -1], 7)],
        )
        .unwrap();
        let report = check_theorem4_conditions(&eq).unwrap();
        assert!(!report.conditions[3].holds);
        assert!(report.conditions[0].holds && report.conditions[1].holds);
    }

    #[test]
    fn theorem5_passing_fixture() {
        // f = x^3 (x+1)^3 + 1 (deg 6), g = y^9 (y+1)^9 (deg 18):
        // 18 > 6, and 6 > 1 + deg(x (x+1) y (y+1)) = 5.
        let eq = FactoredEquation::new(
            vec![part(&[0, 1], 3), part(&[1, 1], 3)],
            vec![],
            Sign::Plus,
            vec![part(&[0, 1], 9), part(&[1, 1], 9)],
        )
        .unwrap();
        let report = check_theorem5_conditions(&eq).unwrap();
        assert!(report.all_hold(), "{report}");
    }

    #[test]
    fn theorem5_degree_inequalities_flip() {
        // The Theorem-4 fixture fails the flipped inequality (1).
        let eq = FactoredEquation::new(
            vec![part(&[0, 1], 9)],
            vec![part(&[1, 1], 9)],
            Sign::Plus,
            vec![part(&[0, 1], 7)],
        )
        .unwrap();
        let report = check_theorem5_conditions(&eq).unwrap();
        assert!(!report.conditions[0].holds);
    }

    #[test]
    fn theorem6_examples() {
        // f = x^3 + x + 1, g = y^4: pass
        let report =
            check_theorem6_conditions(&p(&[1, 1, 0, 1]), &[part(&[0, 1], 4)]).unwrap();
        assert!(report.all_hold(), "{report}");
        // f = x^2 + 1: degree too small
        let report = check_theorem6_conditions(&p(&[1, 0, 1]), &[part(&[0, 1], 4)]).unwrap();
        assert!(!report.conditions[0].holds);
        assert!(report.conditions[1].holds); // still separable
        // f = (x-1)^2 (x+2) = x^3 - 3x + 2: not separable
        let report = check_theorem6_conditions(&p(&[2, -3, 0, 1]), &[part(&[0, 1], 4)]).unwrap();
        assert!(report.conditions[0].holds);
        assert!(!report.conditions[1].holds);
        // exponent 1 in g fails
        let report =
            check_theorem6_conditions(&p(&[1, 1, 0, 1]), &[part(&[0, 1], 4), part(&[1, 1], 1)])
                .unwrap();
        assert!(!report.conditions[2].holds);
    }

    #[test]
    fn abc_params_validation() {
        use num_bigint::BigInt;
        let eps = BigRational::new(BigInt::from(1), BigInt::from(100));
        let params = AbcParams::new(eps).unwrap();
        assert!((params.one_plus_epsilon_f64() - 1.01).abs() < 1e-12);
        let bad = BigRational::new(BigInt::from(0), BigInt::from(1));
        assert!(AbcParams::new(bad).is_err());
    }
}
