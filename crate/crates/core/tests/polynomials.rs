use std::collections::BTreeMap;

use horoflex_core::poly::{Derivation, Nilpotency, Polynomial, Substitution};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const VARS: [&str; 5] = ["a", "b", "c", "d", "e"];

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A polynomial in the first `nvars` of `VARS`, total degree at most `deg`.
fn poly(nvars: usize, deg: u32) -> impl Strategy<Value = Polynomial> {
    let term = (-6i64..=6, prop::collection::vec(0..=deg, nvars));
    prop::collection::vec(term, 0..6).prop_map(move |terms| {
        terms.into_iter().fold(Polynomial::zero(), |acc, (c, mut e)| {
            // trim to total degree
            while e.iter().sum::<u32>() > deg {
                let i = e.iter().position(|&k| k > 0).unwrap();
                e[i] -= 1;
            }
            let factors: Vec<(&str, u32)> = VARS.iter().copied().zip(e).collect();
            &acc + &Polynomial::monomial(&factors, q(c))
        })
    })
}

fn any_poly() -> impl Strategy<Value = Polynomial> {
    poly(5, 4)
}

/// A derivation with `D(vᵢ) ∈ K[vᵢ₊₁, …]`, locally nilpotent by construction.
fn triangular(nvars: usize, deg: u32) -> impl Strategy<Value = Derivation> {
    let images = prop::collection::vec(poly(nvars, deg), nvars);
    images.prop_map(move |imgs| {
        let pairs: Vec<(&str, Polynomial)> = imgs
            .into_iter()
            .enumerate()
            .map(|(i, p)| {
                // drop variables at or before position i
                let kill = Substitution::from_pairs(VARS[..=i].iter().map(|v| (*v, Polynomial::zero())));
                (VARS[i], kill.apply(&p))
            })
            .collect();
        Derivation::from_pairs(pairs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_and_multiplication_are_associative(a in any_poly(), b in any_poly(), c in any_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn commutative_and_distributive(a in any_poly(), b in any_poly(), c in any_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(), a.clone());
    }

    #[test]
    fn text_round_trip(a in any_poly()) {
        prop_assert_eq!(a.to_string().parse::<Polynomial>().unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in any_poly(), b in any_poly(), pt in prop::collection::vec(-4i64..=4, 5)) {
        let point: BTreeMap<String, BigRational> = VARS.iter().zip(&pt).map(|(v, &x)| (v.to_string(), q(x))).collect();
        let ev = |p: &Polynomial| p.evaluate(&point).unwrap();
        prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(3, 3), b in poly(3, 3), imgs in prop::collection::vec(poly(3, 2), 3)) {
        let s = Substitution::from_pairs(VARS.iter().copied().zip(imgs));
        prop_assert_eq!(s.apply(&(&a * &b)), &s.apply(&a) * &s.apply(&b));
        prop_assert_eq!(s.apply(&(&a + &b)), &s.apply(&a) + &s.apply(&b));
    }

    #[test]
    fn leibniz_rule(a in poly(4, 3), b in poly(4, 3), imgs in prop::collection::vec(poly(4, 2), 4)) {
        let d = Derivation::from_pairs(VARS.iter().copied().zip(imgs));
        prop_assert_eq!(d.apply(&(&a * &b)), &(&a * &d.apply(&b)) + &(&b * &d.apply(&a)));
    }

    #[test]
    fn exact_division_is_sound(a in poly(3, 3), b in poly(3, 3), c in poly(3, 3)) {
        if !b.is_zero() {
            let prod = &a * &b;
            prop_assert_eq!(prod.divide_exact(&b).unwrap(), Some(a.clone()));
            let p = &prod + &c;
            if let Some(quot) = p.divide_exact(&b).unwrap() {
                prop_assert_eq!(&quot * &b, p);
            }
        } else {
            prop_assert!(a.divide_exact(&b).is_err());
        }
    }

    #[test]
    fn exp_is_a_one_parameter_group(d in triangular(4, 3)) {
        let nil = d.is_locally_nilpotent_bounded(64);
        prop_assert!(matches!(nil, Nilpotency::Yes(_)));
        let et = d.exp("t", 64).unwrap();
        let es = d.exp("s", 64).unwrap();
        let sum = Substitution::from_pairs([("t", "t + s".parse().unwrap())]);
        let joint = d.exp("t", 64).unwrap().map_images(|p| sum.apply(p));
        prop_assert!(et.compose(&es).same_map(&joint));
        prop_assert!(es.compose(&et).same_map(&joint));
    }

    #[test]
    fn triangular_derivations_are_nilpotent_on_products(d in triangular(3, 2), a in poly(3, 2)) {
        let Nilpotency::Yes(_) = d.is_locally_nilpotent_bounded(64) else {
            return Err(TestCaseError::fail("not certified"));
        };
        prop_assert!(d.iterate(&a, 64).is_zero());
    }
}
