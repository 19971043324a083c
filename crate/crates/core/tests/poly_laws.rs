//! Ring laws and exact division for integer polynomials.

use num_bigint::BigInt;
use pcheb_core::{Poly, Rat};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-9i64..=9, 0..=9).prop_map(|c| Poly::from_i64s(&c))
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn addition_commutes_and_associates(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a - &a, Poly::zero());
        prop_assert_eq!(&a + &Poly::zero(), a.clone());
    }

    #[test]
    fn multiplication_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &Poly::one(), a.clone());
        prop_assert!((&a * &Poly::zero()).is_zero());
    }

    #[test]
    fn degree_of_product(a in nonzero_poly(), b in nonzero_poly()) {
        let p = &a * &b;
        prop_assert_eq!(p.degree(), Some(a.degree().unwrap() + b.degree().unwrap()));
        prop_assert_eq!(p.leading_coeff().unwrap(), &(a.leading_coeff().unwrap() * b.leading_coeff().unwrap()));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(), b in poly(), num in -20i64..=20, den in 1i64..=7) {
        let x = Rat::new(BigInt::from(num), BigInt::from(den));
        prop_assert_eq!((&a * &b).eval_rat(&x), a.eval_rat(&x) * b.eval_rat(&x));
        prop_assert_eq!((&a + &b).eval_rat(&x), a.eval_rat(&x) + b.eval_rat(&x));
    }

    #[test]
    fn shift_is_multiplication_by_power_of_x(a in poly(), k in 0usize..5) {
        let xk = (0..k).fold(Poly::one(), |acc, _| &acc * &Poly::x());
        prop_assert_eq!(a.shift(k), &a * &xk);
    }
}

#[test]
fn non_divisible_is_reported() {
    let p = Poly::from_i64s(&[1, 0, 1]);
    assert!(p.div_exact(&Poly::linear(1, -1)).is_err());
    assert!(p.div_exact(&Poly::zero()).is_err());
}
