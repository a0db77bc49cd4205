use permfib::composition::fib;
use permfib::oracle::{count_ilpk1_avoiders, count_ipk0_avoiders};
use permfib::series::{
    four_t_over_one_plus_t_sq, linear_t_coefficients, ogf_fib, ogf_ilpk_general, rat, ratio,
    theorem3_sides, theorem5_sides, v_of_t, verify_theorem3, verify_theorem5, BiSeries, Rational,
    Series,
};
use permfib::w_regex;
use proptest::prelude::*;

const ORDER: usize = 6;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-20i64..20, 1i64..8).prop_map(|(p, q)| ratio(p, q))
}

fn arb_series() -> impl Strategy<Value = Series> {
    prop::collection::vec(arb_rational(), ORDER + 1).prop_map(|c| Series::from_rationals(c, ORDER))
}

fn arb_unit_series() -> impl Strategy<Value = Series> {
    (arb_series(), (1i64..6, 1i64..6)).prop_map(|(s, (p, q))| {
        let mut c = s.coeffs().to_vec();
        c[0] = ratio(p, q);
        Series::from_rationals(c, ORDER)
    })
}

fn one() -> Series {
    Series::constant(rat(1), ORDER)
}

proptest! {
    #[test]
    fn addition_laws(a in arb_series(), b in arb_series(), c in arb_series()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a + &(-&a), Series::constant(rat(0), ORDER));
    }

    #[test]
    fn multiplication_laws(a in arb_series(), b in arb_series(), c in arb_series()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &one(), a.clone());
    }

    #[test]
    fn inverse_law(a in arb_unit_series()) {
        prop_assert_eq!(&a * &a.invert().unwrap(), one());
    }

    #[test]
    fn square_root_law(a in arb_series()) {
        let mut c = a.coeffs().to_vec();
        c[0] = rat(1);
        let s = Series::from_rationals(c, ORDER);
        let r = s.sqrt().unwrap();
        prop_assert_eq!(&r * &r, s);
    }

    #[test]
    fn composition_is_a_ring_map(a in arb_series(), b in arb_series(), g in arb_series()) {
        let mut c = g.coeffs().to_vec();
        c[0] = rat(0);
        let g = Series::from_rationals(c, ORDER);
        prop_assert_eq!(
            (&a * &b).compose(&g).unwrap(),
            &a.compose(&g).unwrap() * &b.compose(&g).unwrap()
        );
        prop_assert_eq!(
            (&a + &b).compose(&g).unwrap(),
            &a.compose(&g).unwrap() + &b.compose(&g).unwrap()
        );
    }

    #[test]
    fn bivariate_ring_laws(a in arb_series(), b in arb_series(), c in arb_series()) {
        let lift = |s: &Series| {
            BiSeries::from_coeffs(
                vec![s.clone(), s.shift_up(1), s.clone()],
                2,
                &Series::constant(rat(0), ORDER),
            )
        };
        let (x, y, z) = (lift(&a), lift(&b), lift(&c));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }
}

#[test]
fn singular_inputs_are_rejected() {
    let t = Series::from_ints(&[0, 1], ORDER);
    assert!(t.invert().is_err());
    assert!(Series::from_ints(&[3, 1], ORDER).sqrt().is_err());
    assert!(one().compose(&one()).is_err());
    assert!(one().shift_down().is_err());
}

#[test]
fn v_substitution_inverts_four_t_over_one_plus_t_squared() {
    for order in 1..=10 {
        let v = v_of_t(order).unwrap();
        let one = Series::constant(rat(1), order);
        let one_plus_v = &one + &v;
        let back = v.scale(&rat(4)).div(&(&one_plus_v * &one_plus_v)).unwrap();
        assert_eq!(back, Series::from_ints(&[0, 1], order), "order {order}");
        let s = four_t_over_one_plus_t_sq(order);
        assert_eq!(v.compose(&s).unwrap(), Series::from_ints(&[0, 1], order));
    }
}

#[test]
fn generating_function_identities() {
    for m in 2..=4 {
        for t_order in 1..=5 {
            assert!(
                verify_theorem3(m, 7, t_order).unwrap(),
                "ipk m={m} t={t_order}"
            );
            assert!(
                verify_theorem5(m, 7, t_order).unwrap(),
                "ilpk m={m} t={t_order}"
            );
        }
    }
}

#[test]
fn perturbed_identity_is_detected() {
    let (lhs, rhs) = theorem3_sides(3, 5, 3).unwrap();
    assert_eq!(lhs, rhs);
    let mut c = lhs.coeffs().to_vec();
    let mut inner = c[4].coeffs().to_vec();
    inner[2] += rat(1);
    c[4] = Series::from_rationals(inner, 3);
    let perturbed = BiSeries::from_coeffs(c, 5, &Series::constant(rat(0), 3));
    assert_eq!(perturbed.first_difference(&rhs).map(|(i, _, _)| i), Some(4));
}

#[test]
fn linear_coefficients_of_the_ilpk_identity() {
    let (lhs, rhs) = theorem5_sides(3, 7, 2).unwrap();
    assert_eq!(linear_t_coefficients(&lhs), linear_t_coefficients(&rhs));
}

#[test]
fn fibonacci_ogf_matches_enumeration() {
    for m in 3..=5 {
        let s = ogf_fib(m, 8).unwrap();
        for n in 1..=8 {
            let count = count_ipk0_avoiders(n, m).unwrap();
            assert_eq!(s.coeff(n), rat(count as i64), "m={m} n={n}");
            assert_eq!(
                s.coeff(n),
                Rational::from_integer(fib(m - 1, n as i64).unwrap().into())
            );
        }
    }
}

#[test]
fn ilpk_ogf_matches_enumeration_and_words() {
    for m in 3..=4 {
        let s = ogf_ilpk_general(m, 10).unwrap();
        for n in 1..=8 {
            let count = count_ilpk1_avoiders(n, m).unwrap();
            assert_eq!(s.coeff(n), rat(count as i64), "m={m} n={n}");
        }
        let words = w_regex(m).unwrap().compile().count_table(10);
        for (n, &c) in words.iter().enumerate() {
            assert_eq!(s.coeff(n), rat(c as i64), "m={m} n={n}");
        }
    }
}

#[test]
fn ilpk_ogf_reference_values() {
    let expect = |m: usize, values: &[i64]| {
        let s = ogf_ilpk_general(m, values.len() - 1).unwrap();
        let got: Vec<Rational> = s.coeffs().to_vec();
        let want: Vec<Rational> = values.iter().map(|&v| rat(v)).collect();
        assert_eq!(got, want, "m={m}");
    };
    expect(3, &[0, 0, 1, 4, 13, 37, 101, 269, 710, 1865, 4890]);
    expect(4, &[0, 0, 1, 5, 17, 53, 158, 462, 1342, 3886, 11239]);
    expect(5, &[0, 0, 1, 5, 18, 57, 174, 522, 1555, 4619, 13707]);
}
