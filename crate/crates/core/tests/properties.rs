//! Property tests for the arithmetic layer: rationals, polynomial division,
//! gcd, square-free reduction, root bounds, and variation counting.

use proptest::prelude::*;
use sturm_core::{Polynomial, Rational, SignSequence};

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn polynomial(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(Polynomial::new)
}

fn nonzero_polynomial(max_len: usize) -> impl Strategy<Value = Polynomial> {
    polynomial(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn nonconstant_polynomial(max_len: usize) -> impl Strategy<Value = Polynomial> {
    polynomial(max_len).prop_filter("degree >= 1", |p| p.degree().is_some_and(|d| d >= 1))
}

/// Sorted distinct rational roots with multiplicities in {1, 2, 3}.
fn root_entries() -> impl Strategy<Value = Vec<(Rational, u32)>> {
    prop::collection::vec(((-20i64..=20, 1i64..=8), 1u32..=3), 1..=4).prop_map(|raw| {
        let mut entries: Vec<(Rational, u32)> = raw
            .into_iter()
            .map(|((n, d), m)| (Rational::new(n, d), m))
            .collect();
        entries.sort_by(|x, y| x.0.cmp(&y.0));
        entries.dedup_by(|next, kept| next.0 == kept.0);
        entries
    })
}

/// The pair form of the variation count: pairs (j, k) with j < k,
/// s_j * s_k = -1, and only zeros strictly between them.
fn variations_by_pairs(signs: &[i8]) -> usize {
    let mut count = 0;
    for k in 0..signs.len() {
        for j in 0..k {
            let opposite = signs[j] as i32 * signs[k] as i32 == -1;
            let gap_is_zero = signs[j + 1..k].iter().all(|&s| s == 0);
            if opposite && gap_is_zero {
                count += 1;
            }
        }
    }
    count
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn division_round_trips(f in polynomial(9), g in nonzero_polynomial(6)) {
        let (q, r) = f.div_rem(&g).unwrap();
        prop_assert_eq!(&(&q * &g) + &r, f);
        // a nonzero remainder has degree strictly below the divisor's; in
        // particular division by a constant is always exact
        if let Some(dr) = r.degree() {
            prop_assert!(g.degree().is_some_and(|dg| dr < dg));
        }
    }

    #[test]
    fn gcd_divides_both_and_is_monic(f in nonzero_polynomial(8), g in nonzero_polynomial(8)) {
        let d = f.gcd(&g).unwrap();
        prop_assert_eq!(d.leading_coefficient(), Some(&Rational::one()));
        prop_assert!(f.exact_div(&d).is_ok());
        prop_assert!(g.exact_div(&d).is_ok());
        prop_assert_eq!(g.gcd(&f).unwrap(), d);
    }

    #[test]
    fn gcd_detects_common_factors(f in nonzero_polynomial(4), g in nonzero_polynomial(4),
                                  h in nonconstant_polynomial(4)) {
        let d = (&f * &h).gcd(&(&g * &h)).unwrap();
        // d is a common divisor, so h (a common factor) must divide f*h and
        // g*h through d; at minimum deg d >= deg h
        prop_assert!(d.degree().unwrap() >= h.degree().unwrap());
        prop_assert!((&f * &h).exact_div(&d).is_ok());
        prop_assert!((&g * &h).exact_div(&d).is_ok());
    }

    #[test]
    fn square_free_part_strips_all_multiplicity(entries in root_entries()) {
        let f = Polynomial::from_roots(&entries);
        let sf = f.square_free_part().unwrap();
        let simple: Vec<(Rational, u32)> =
            entries.iter().map(|(r, _)| (r.clone(), 1)).collect();
        prop_assert_eq!(sf, Polynomial::from_roots(&simple));
    }

    #[test]
    fn square_free_part_divides_and_has_no_repeated_factor(f in nonconstant_polynomial(8)) {
        let sf = f.square_free_part().unwrap();
        prop_assert!(f.exact_div(&sf).is_ok());
        if sf.degree().unwrap() >= 1 {
            let repeated = sf.gcd(&sf.derivative()).unwrap();
            prop_assert!(repeated.is_constant());
        }
    }

    #[test]
    fn constructed_roots_vanish_and_nothing_nearby_does(entries in root_entries()) {
        let f = Polynomial::from_roots(&entries);
        prop_assert_eq!(f.degree().unwrap() as u32,
                        entries.iter().map(|(_, m)| m).sum::<u32>());
        for (root, _) in &entries {
            prop_assert!(f.eval(root).is_zero());
            // 1/97 is smaller than any gap between distinct rationals with
            // denominator <= 8, so this shifted point is never a root
            let shifted = root + &Rational::new(1, 97);
            prop_assert!(!f.eval(&shifted).is_zero());
        }
    }

    #[test]
    fn cauchy_bound_strictly_exceeds_every_root(entries in root_entries(),
                                                scale in (-9i64..=9).prop_filter("nonzero", |s| *s != 0)) {
        let f = &Polynomial::from_roots(&entries) * &Rational::from(scale);
        let bound = f.cauchy_bound().unwrap();
        for (root, _) in &entries {
            prop_assert!(root.abs() < bound);
        }
    }

    #[test]
    fn rational_arithmetic_round_trips(a in rational(), b in rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a.clone());
        }
        prop_assert_eq!(-&(-&a), a.clone());
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a.clone());
        prop_assert_eq!(a.abs().signum(), if a.is_zero() { 0 } else { 1 });
        prop_assert_eq!(a.abs(), if a.is_negative() { -&a } else { a.clone() });
    }

    #[test]
    fn polynomial_ring_identities(f in polynomial(6), g in polynomial(6), h in polynomial(4)) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&f - &f, Polynomial::zero());
        let x = Rational::new(3, 7);
        prop_assert_eq!((&f * &g).eval(&x), f.eval(&x) * g.eval(&x));
    }

    #[test]
    fn variation_count_matches_the_pair_definition(signs in prop::collection::vec(-1i8..=1, 0..12)) {
        let direct = variations_by_pairs(&signs);
        prop_assert_eq!(SignSequence::new(signs).variations(), direct);
    }

    #[test]
    fn derivative_is_linear_and_obeys_the_product_rule(f in polynomial(6), g in polynomial(6)) {
        prop_assert_eq!((&f + &g).derivative(), &f.derivative() + &g.derivative());
        let product_rule = &(&f.derivative() * &g) + &(&f * &g.derivative());
        prop_assert_eq!((&f * &g).derivative(), product_rule);
    }
}
