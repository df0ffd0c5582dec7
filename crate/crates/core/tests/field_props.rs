use num_rational::BigRational;
use proptest::prelude::*;
use qosc::field::{FieldElem, Monomial, Poly, Rat};

fn poly_strategy() -> impl Strategy<Value = Poly> {
    prop::collection::vec((0u32..3, 0u32..3, -4i64..5), 0..4).prop_map(|ts| {
        Poly::from_terms(
            ts.into_iter()
                .map(|(a, b, c)| (Monomial::new(a, b), Rat::from_integer(c.into()))),
        )
    })
}

fn elem_strategy() -> impl Strategy<Value = FieldElem> {
    (poly_strategy(), poly_strategy(), -2i32..3, -2i32..3).prop_filter_map("nonzero denominator", |(n, d, a, b)| {
        let x = FieldElem::from_polys(n, d).ok()?;
        Some(&x * &FieldElem::monomial(1, a, b))
    })
}

fn point() -> (BigRational, BigRational) {
    (
        BigRational::new(13.into(), 10.into()),
        BigRational::new(17.into(), 7.into()),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn addition_and_multiplication_are_associative(x in elem_strategy(), y in elem_strategy(), z in elem_strategy()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn distributive(x in elem_strategy(), y in elem_strategy(), z in elem_strategy()) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn inverse(x in elem_strategy()) {
        prop_assume!(!x.is_zero());
        prop_assert_eq!(&x * &x.inv().unwrap(), FieldElem::one());
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(x in elem_strategy(), y in elem_strategy()) {
        let (q, q1) = point();
        if let (Ok(a), Ok(b)) = (x.eval_rat(&q, &q1), y.eval_rat(&q, &q1)) {
            prop_assert_eq!((&x * &y).eval_rat(&q, &q1).unwrap(), &a * &b);
            prop_assert_eq!((&x + &y).eval_rat(&q, &q1).unwrap(), &a + &b);
        }
    }

    #[test]
    fn print_parse_roundtrip(x in elem_strategy()) {
        let s = x.to_string();
        let y: FieldElem = s.parse().unwrap();
        prop_assert_eq!(&y, &x);
        prop_assert_eq!(y.to_string(), s);
    }
}
