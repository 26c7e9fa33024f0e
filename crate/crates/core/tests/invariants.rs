//! Randomized invariants for the exact-arithmetic layer: algebraic laws the
//! implementation must satisfy for *every* input, checked over generated
//! polynomials, shifts, and integers. Anything that fails here is a real
//! bug, not a flaky tolerance.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dioph::abc::{factorize, is_powerful, radical};
use dioph::classifier::{classify_product_equation, ProductForm, VerdictTag, Witness};
use dioph::cli::parse::{format_product_form, parse_poly, parse_product_form};
use dioph::search::{
    enumerate_solutions, enumerate_solutions_with, is_complete_composite, minimal_positive_shift,
    EnumerationConfig,
};
use dioph::shift::{
    apply_shift, find_shift_witness, integer_roots, shift_matrix,
    splits_into_integer_linear_factors,
};
use dioph::IntPoly;

fn poly(coeffs: Vec<i64>) -> IntPoly {
    IntPoly::from_coeffs(coeffs.into_iter().map(BigInt::from).collect())
}

/// Arbitrary polynomial with degree < `len_max` and |coefficients| <= bound.
fn arb_poly(len_max: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-bound..=bound, 1..=len_max).prop_map(poly)
}

fn arb_nonzero_poly(len_max: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    arb_poly(len_max, bound).prop_filter("nonzero", |p| !p.is_zero())
}

fn arb_nonconstant_poly(len_max: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    arb_poly(len_max, bound).prop_filter("degree >= 1", |p| {
        p.degree().finite().is_some_and(|d| d >= 1)
    })
}

/// Monic polynomial of degree in `1..=deg_max`.
fn arb_monic(deg_max: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-bound..=bound, 1..=deg_max).prop_map(|mut v| {
        v.push(1);
        poly(v)
    })
}

proptest! {
    // --- evaluation is a ring homomorphism -------------------------------

    #[test]
    fn eval_respects_ring_ops(
        f in arb_poly(7, 1_000),
        g in arb_poly(7, 1_000),
        x in -1_000i64..=1_000,
    ) {
        let x = BigInt::from(x);
        prop_assert_eq!(f.add(&g).eval(&x), f.eval(&x) + g.eval(&x));
        prop_assert_eq!(f.sub(&g).eval(&x), f.eval(&x) - g.eval(&x));
        prop_assert_eq!(f.mul(&g).eval(&x), f.eval(&x) * g.eval(&x));
        prop_assert_eq!(f.neg().eval(&x), -f.eval(&x));
    }

    // --- Taylor shifts ---------------------------------------------------

    #[test]
    fn taylor_shift_agrees_with_substitution(
        f in arb_poly(8, 10_000),
        c in -500i64..=500,
        x in -500i64..=500,
    ) {
        let c = BigInt::from(c);
        let x = BigInt::from(x);
        prop_assert_eq!(f.taylor_shift(&c).eval(&x), f.eval(&(&x + &c)));
    }

    #[test]
    fn taylor_shift_group_action(
        f in arb_poly(8, 10_000),
        c1 in -300i64..=300,
        c2 in -300i64..=300,
    ) {
        let (c1, c2) = (BigInt::from(c1), BigInt::from(c2));
        // composing shifts adds them, and shifting back is the inverse
        prop_assert_eq!(
            f.taylor_shift(&c1).taylor_shift(&c2),
            f.taylor_shift(&(&c1 + &c2))
        );
        prop_assert_eq!(f.taylor_shift(&c1).taylor_shift(&-&c1), f.clone());
    }

    // --- the shift matrix A(c) is the Taylor shift in matrix clothing -----

    #[test]
    fn shift_matrix_matches_taylor_shift(
        g in arb_nonzero_poly(9, 100_000),
        c in -1_000i64..=1_000,
    ) {
        let c = BigInt::from(c);
        let m = g.degree().finite().unwrap();
        let a = shift_matrix(&c, m);
        let via_matrix = apply_shift(&a, g.coeffs()).unwrap();
        let shifted = g.taylor_shift(&c);
        prop_assert_eq!(via_matrix.as_slice(), shifted.coeffs());
    }

    #[test]
    fn shift_matrices_compose_additively(
        m in 0usize..=8,
        c1 in -200i64..=200,
        c2 in -200i64..=200,
    ) {
        let (c1, c2) = (BigInt::from(c1), BigInt::from(c2));
        let product = shift_matrix(&c1, m).multiply(&shift_matrix(&c2, m)).unwrap();
        let combined = shift_matrix(&(&c1 + &c2), m);
        prop_assert_eq!(product.as_slice(), combined.rows());
    }

    // --- gcd -------------------------------------------------------------

    #[test]
    fn gcd_divides_both_arguments(
        f in arb_nonzero_poly(6, 50),
        g in arb_nonzero_poly(6, 50),
    ) {
        let d = f.gcd(&g).unwrap();
        prop_assert!(f.div_exact(&d).is_some(), "gcd does not divide f");
        prop_assert!(g.div_exact(&d).is_some(), "gcd does not divide g");
        prop_assert_eq!(f.gcd(&g).unwrap(), g.gcd(&f).unwrap());
        prop_assert!(d.leading_coeff().unwrap().is_positive());
    }

    // --- shift witness: sound and complete -------------------------------

    #[test]
    fn shift_witness_recovers_planted_shift(
        g in arb_nonconstant_poly(7, 10_000),
        c in -100_000i64..=100_000,
    ) {
        let c = BigInt::from(c);
        let f = g.taylor_shift(&c);
        prop_assert_eq!(find_shift_witness(&f, &g).unwrap(), Some(c));
    }

    #[test]
    fn shift_witness_is_a_decision(
        f in arb_nonconstant_poly(5, 30),
        g in arb_nonconstant_poly(5, 30),
    ) {
        prop_assume!(f.degree() == g.degree());
        match find_shift_witness(&f, &g).unwrap() {
            Some(c) => prop_assert_eq!(g.taylor_shift(&c), f),
            None => {
                // no shift in a window can work either; the candidate is unique
                for c in -25i64..=25 {
                    prop_assert_ne!(g.taylor_shift(&BigInt::from(c)), f.clone());
                }
            }
        }
    }

    // --- integer roots ----------------------------------------------------

    #[test]
    fn integer_roots_recover_planted_linear_factors(
        roots in prop::collection::vec((-9i64..=9, 1u32..=3), 1..=4),
        with_irreducible in any::<bool>(),
    ) {
        // plant distinct roots with multiplicities
        let mut planted: Vec<(BigInt, u32)> = Vec::new();
        for (r, m) in roots {
            let r = BigInt::from(r);
            match planted.iter_mut().find(|(q, _)| *q == r) {
                Some((_, acc)) => *acc += m,
                None => planted.push((r, m)),
            }
        }
        planted.sort_by(|a, b| a.0.cmp(&b.0));

        let mut p = IntPoly::one();
        for (r, m) in &planted {
            let linear = poly(vec![0, 1]).sub(&IntPoly::constant(r.clone()));
            p = p.mul(&linear.pow(*m));
        }
        if with_irreducible {
            p = p.mul(&poly(vec![1, 0, 1])); // x^2 + 1 has no real roots
        }

        let found = integer_roots(&p).unwrap();
        prop_assert_eq!(found.pairs(), planted.as_slice());

        let split = splits_into_integer_linear_factors(&p).unwrap();
        if with_irreducible {
            prop_assert!(split.is_none());
        } else {
            let roots = split.expect("product of linear factors splits");
            prop_assert_eq!(roots.remultiply(), p);
        }
    }

    // --- enumeration over boxes -------------------------------------------

    #[test]
    fn enumeration_matches_naive_double_loop(
        f in arb_nonconstant_poly(4, 20),
        g in arb_nonconstant_poly(4, 20),
        bound in 1u64..=25,
    ) {
        let set = enumerate_solutions(&f, &g, bound).unwrap();
        let b = bound as i64;
        let mut naive = Vec::new();
        for x in -b..=b {
            for y in -b..=b {
                if f.eval(&BigInt::from(x)) == g.eval(&BigInt::from(y)) {
                    naive.push((x, y));
                }
            }
        }
        prop_assert_eq!(set.solutions(), naive.as_slice());

        // the sort-merge fallback must agree with the hash join
        let tight = EnumerationConfig { max_index_entries: 1 };
        let merged = enumerate_solutions_with(&f, &g, bound, &tight).unwrap();
        prop_assert_eq!(merged.solutions(), set.solutions());
    }

    #[test]
    fn solution_boxes_are_monotone(
        f in arb_nonconstant_poly(4, 15),
        g in arb_nonconstant_poly(4, 15),
        bound in 1u64..=20,
    ) {
        let small = enumerate_solutions(&f, &g, bound).unwrap();
        let large = enumerate_solutions(&f, &g, 2 * bound).unwrap();
        for s in small.solutions() {
            prop_assert!(large.solutions().contains(s), "{s:?} lost when the box grew");
        }
    }

    // --- parser round trips -------------------------------------------------

    #[test]
    fn polynomial_rendering_reparses(f in arb_poly(9, 1_000_000)) {
        let text = f.to_string_var("x");
        prop_assert_eq!(parse_poly(&text, "x").unwrap(), f);
    }

    #[test]
    fn product_form_rendering_reparses(
        shifts in prop::collection::vec(-100i64..=100, 1..=6),
    ) {
        let pf = ProductForm::new(shifts.into_iter().map(BigInt::from).collect()).unwrap();
        let text = format_product_form(pf.shifts(), "y");
        let reparsed = parse_product_form(&text).unwrap();
        let pf2 = ProductForm::new(reparsed).unwrap();
        prop_assert_eq!(pf, pf2);
    }

    // --- complete composites ------------------------------------------------

    #[test]
    fn complete_composite_witnesses_verify(
        low in prop::collection::vec(0i64..=25, 1..=3),
        n in 1u64..=40,
    ) {
        let mut v = low;
        v.push(1);
        let f = poly(v); // monic, nonnegative coefficients
        if let Some(w) = is_complete_composite(&f, n).unwrap() {
            prop_assert!(w.verify(&f));
            // parts are the offsets a_i with f(n) = prod (n + a_i), a_i >= 1
            let nn = BigInt::from(n);
            let product: BigInt = w.parts.iter().map(|a| &nn + a).product();
            prop_assert_eq!(product, f.eval(&nn));
            prop_assert_eq!(w.parts.len(), f.degree().finite().unwrap());
            for pair in w.parts.windows(2) {
                prop_assert!(pair[0] <= pair[1], "offsets not sorted");
            }
            prop_assert!(w.parts.iter().all(|a| a >= &BigInt::from(1)));
        }
    }

    #[test]
    fn splitting_with_small_roots_makes_every_value_complete(
        roots in prop::collection::vec(-6i64..=-1, 1..=3),
        n in 1u64..=30,
    ) {
        // f = prod (x - r) with every root <= -1: f(n) = prod (n - r) and
        // each factor is >= n + 1, so the factorization itself is a witness.
        let mut f = IntPoly::one();
        for r in &roots {
            f = f.mul(&poly(vec![-r, 1]));
        }
        let w = is_complete_composite(&f, n).unwrap();
        prop_assert!(w.is_some(), "f = {f} should be complete at n = {n}");
    }

    // --- minimal positive shift ----------------------------------------------

    #[test]
    fn minimal_positive_shift_is_minimal(
        f in arb_monic(5, 1_000_000),
    ) {
        let h = minimal_positive_shift(&f).unwrap();
        let d = f.degree().finite().unwrap();
        let shifted = f.taylor_shift(&h);
        prop_assert!((0..=d).all(|i| shifted.coeff(i).is_positive()));
        if h.is_positive() {
            let below = f.taylor_shift(&(&h - 1));
            prop_assert!(
                (0..=d).any(|i| !below.coeff(i).is_positive()),
                "h - 1 already qualifies, so h is not minimal"
            );
        }
    }

    // --- classifier consistency ------------------------------------------------

    #[test]
    fn product_classification_is_internally_consistent(
        shifts in prop::collection::vec(-10i64..=10, 1..=4),
        f in arb_monic(5, 10),
    ) {
        let pf = ProductForm::new(shifts.into_iter().map(BigInt::from).collect()).unwrap();
        let n = f.degree().finite().unwrap();
        let m = pf.m();
        let v = classify_product_equation(&pf, &f).unwrap();

        match v.tag {
            VerdictTag::ShiftBoundedCriterion => {
                prop_assert!(n != m);
                let expect = if n > m { "Thm 1.1" } else { "Thm 1.3" };
                prop_assert_eq!(v.theorem.as_deref(), Some(expect));
            }
            VerdictTag::FiniteUnconditional => {
                prop_assert_eq!(v.theorem.as_deref(), Some("Thm 1.2"));
                prop_assert_eq!(n, m);
                // the branch fires exactly when f has a non-integral root
                prop_assert!(integer_roots(&f).unwrap().total_multiplicity() < n);
            }
            VerdictTag::InfiniteWitness => {
                prop_assert_eq!(v.theorem.as_deref(), Some("Lemma 2.3"));
                let Some(Witness::Shift(c)) = &v.witness else {
                    return Err(TestCaseError::fail("InfiniteWitness without a shift"));
                };
                // the witness is checkable: g(x + c) = f(x) identically
                prop_assert_eq!(pf.expand().taylor_shift(c), f);
            }
            VerdictTag::Unknown => {
                prop_assert_eq!(n, m);
                prop_assert!(v.theorem.is_none());
                prop_assert!(!v.notes.is_empty());
            }
            VerdictTag::FiniteUnderABC => {
                return Err(TestCaseError::fail(
                    "unconditional classifier must not cite abc",
                ));
            }
        }
    }
}

// --- integer factorization: seeded bulk checks -----------------------------

#[test]
fn factorization_reassembles_and_radical_behaves() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..3_000 {
        let n: u64 = rng.gen_range(2..=1_000_000_000_000);
        let n = BigInt::from(n);
        let fac = factorize(&n).unwrap();
        assert_eq!(fac.reassemble(), n, "factorization of {n} does not multiply back");

        let rad = radical(&n).unwrap();
        assert_eq!(&rad, &fac.radical());
        assert!(n.is_multiple_of(&rad), "rad({n}) = {rad} does not divide");
        let rad_fac = factorize(&rad).unwrap();
        assert!(
            rad_fac.pairs().iter().all(|(_, e)| *e == 1),
            "rad({n}) = {rad} is not squarefree"
        );

        assert_eq!(
            is_powerful(&n).unwrap(),
            fac.all_exponents_at_least(2),
            "is_powerful({n}) disagrees with its factorization"
        );
    }
}

#[test]
fn radical_is_multiplicative_on_coprime_arguments() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xabc);
    let mut checked = 0;
    while checked < 500 {
        let a = BigInt::from(rng.gen_range(2u64..=1_000_000_000));
        let b = BigInt::from(rng.gen_range(2u64..=1_000_000_000));
        if a.gcd(&b) != BigInt::from(1) {
            continue;
        }
        checked += 1;
        let lhs = radical(&(&a * &b)).unwrap();
        let rhs = radical(&a).unwrap() * radical(&b).unwrap();
        assert_eq!(lhs, rhs, "rad({a}*{b})");
    }
}

#[test]
fn powerful_numbers_match_square_cube_representation() {
    // n is powerful iff n = a^2 b^3; enumerate that set directly
    let limit = 100_000u64;
    let mut expected = vec![false; (limit + 1) as usize];
    let mut b = 1u64;
    while b * b * b <= limit {
        let mut a = 1u64;
        while a * a * b * b * b <= limit {
            expected[(a * a * b * b * b) as usize] = true;
            a += 1;
        }
        b += 1;
    }
    for n in 1..=limit {
        let got = is_powerful(&BigInt::from(n)).unwrap();
        assert_eq!(got, expected[n as usize], "is_powerful({n})");
    }
}
