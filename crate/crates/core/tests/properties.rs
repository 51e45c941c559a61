//! Randomized properties of the polynomial and series layers.

use proptest::prelude::*;

use motzkin_core::poly::{coef_int, Poly};
use motzkin_core::qseries::q_binomial;
use motzkin_core::series::Series;
use motzkin_core::symm::{sym_expand, sym_reduce};
use motzkin_core::{Mono, Var};

fn arb_mono(vars: &'static [Var], max_exp: i32) -> impl Strategy<Value = Mono> {
    proptest::collection::vec(0..=max_exp, vars.len()).prop_map(move |exps| {
        let mut m = Mono::one();
        for (v, e) in vars.iter().zip(exps) {
            m = m.with_exp(*v, e);
        }
        m
    })
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    static VARS: [Var; 3] = [Var::Z, Var::Zh, Var::Qh];
    proptest::collection::vec((arb_mono(&VARS, 3), -3i64..=3), 0..6)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|(m, c)| (m, coef_int(c)))))
}

fn arb_symmetric_uv_poly() -> impl Strategy<Value = Poly> {
    static VARS: [Var; 3] = [Var::U, Var::V, Var::Qh];
    proptest::collection::vec((arb_mono(&VARS, 3), -3i64..=3), 0..5).prop_map(|terms| {
        let p = Poly::from_terms(terms.into_iter().map(|(m, c)| (m, coef_int(c))));
        &p + &p.swap_vars(Var::U, Var::V)
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Poly::zero());
    }

    #[test]
    fn product_division_roundtrip(a in arb_poly(), b in arb_poly()) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
    }

    #[test]
    fn series_invert_multiplies_back(p in arb_poly()) {
        let unit = &Poly::one() + &p.mul_monomial(&Mono::var(Var::Z), &coef_int(1));
        let inv = Series::invert_poly(&unit, 6).unwrap();
        prop_assert_eq!(inv.mul_poly(&unit), Series::one(6));
    }

    #[test]
    fn series_log_exp_roundtrip(p in arb_poly()) {
        let unit = &Poly::one() + &p.mul_monomial(&Mono::var(Var::Zh), &coef_int(1));
        let s = Series::from_poly(&unit, 5);
        let back = s.log().unwrap().exp().unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn sym_reduce_roundtrip(p in arb_symmetric_uv_poly()) {
        let reduced = sym_reduce(&p).unwrap();
        prop_assert_eq!(sym_expand(&reduced).unwrap(), p);
    }

    #[test]
    fn q_binomial_mirror(a in 0i64..10) {
        for b in 0..=a {
            let lhs = q_binomial(a, b).unwrap();
            prop_assert_eq!(&lhs, &q_binomial(a, a - b).unwrap());
            prop_assert!(lhs.has_nonneg_integer_coeffs());
        }
    }

    #[test]
    fn scale_shift_is_multiplicative(p in arb_poly(), q in arb_poly(), n in 0i32..4) {
        let lhs = (&p * &q).scale_shift(n);
        let rhs = &p.scale_shift(n) * &q.scale_shift(n);
        prop_assert_eq!(lhs, rhs);
    }
}
