mod common;

use common::{laurent, nonzero_laurent};
use knotdist::laurent::LaurentPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

/// Value at `t = x` computed term by term with rationals.
fn eval_oracle(a: &LaurentPoly, x: i64) -> BigRational {
    let x = BigRational::from_integer(BigInt::from(x));
    a.terms().fold(BigRational::from_integer(BigInt::from(0)), |acc, (e, c)| {
        let mut pow = BigRational::from_integer(BigInt::from(1));
        for _ in 0..e.unsigned_abs() {
            pow *= &x;
        }
        if e < 0 {
            pow = BigRational::from_integer(BigInt::from(1)) / pow;
        }
        acc + pow * BigRational::from_integer(c.clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ring_axioms(a in laurent(6, 9), b in laurent(6, 9), c in laurent(6, 9)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a + &(-&a), LaurentPoly::zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn bar_is_a_ring_involution(a in laurent(6, 9), b in laurent(6, 9)) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), a.bar() * b.bar());
        prop_assert_eq!((&a + &b).bar(), a.bar() + b.bar());
        prop_assert!((&a * &a.bar()).is_bar_symmetric());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in laurent(5, 9), b in laurent(5, 9), x in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3])) {
        let at = |q: &LaurentPoly| q.eval_int(&BigInt::from(x)).unwrap();
        prop_assert_eq!(at(&(&a * &b)), at(&a) * at(&b));
        prop_assert_eq!(at(&a), eval_oracle(&a, x));
    }

    #[test]
    fn divmod_round_trip(a in laurent(8, 9), b in nonzero_laurent(4, 5)) {
        let (q, r) = a.divmod_rational(&b).unwrap();
        prop_assert_eq!(&q * &b.to_rational() + r.clone(), a.to_rational());
        let (lo, hi) = (b.min_exponent().unwrap(), b.max_exponent().unwrap());
        prop_assert!(r.terms().all(|(e, _)| lo <= e && e < hi));
    }

    #[test]
    fn multiples_are_detected(a in laurent(5, 9), b in nonzero_laurent(4, 5), k in -3i64..=3) {
        let prod = &a * &b;
        prop_assert!(prod.is_multiple_of(&b));
        prop_assert_eq!(prod.exact_div(&b), Some(a.clone()));
        prop_assert!(prod.shift(k).is_multiple_of(&b));
    }

    #[test]
    fn non_multiples_are_rejected(a in laurent(5, 9), b in nonzero_laurent(4, 5)) {
        // adding a nonzero element of the remainder window breaks divisibility
        let lo = b.min_exponent().unwrap();
        let hi = b.max_exponent().unwrap();
        prop_assume!(hi > lo);
        let bumped = &a * &b + LaurentPoly::monomial(BigInt::from(1), lo);
        prop_assert!(!bumped.is_multiple_of(&b));
    }

    #[test]
    fn display_parse_round_trip(a in laurent(7, 20)) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<LaurentPoly>().unwrap(), a);
    }
}

#[test]
fn listed_examples() {
    assert_eq!(p("t") + p("t^-1"), p("t+t^-1"));
    assert_eq!(p("t-1") * p("t^-1-1"), p("-t+2-t^-1"));
    assert_eq!(p("t+t^-1-1").bar(), p("t+t^-1-1"));
    assert_eq!(p("t-1+t^-1").to_string(), "t-1+t^-1");
    let d925 = p("-3t^2+12t-17+12t^-1-3t^-2");
    let (q, r) = d925.divmod_rational(&p("t-1+t^-1")).unwrap();
    assert_eq!(q.to_integer().unwrap(), p("-3t+9-3t^-1"));
    assert_eq!(r.to_integer().unwrap(), p("-2"));
    assert!(!p("1").is_multiple_of(&LaurentPoly::zero()));
    assert!(LaurentPoly::zero().is_multiple_of(&LaurentPoly::zero()));
}
