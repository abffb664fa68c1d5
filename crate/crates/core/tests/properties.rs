mod common;

use proptest::prelude::*;

use cmdeg::degree::{finite_degree, point_count, term_from_points};
use cmdeg::eisenstein::{b_phi, b_phi_closed, diff_set, enumerate_xi, value_at_zero};
use cmdeg::ideal::{principal_ideal, rho};
use cmdeg::tower::class_number_bruteforce;
use cmdeg::{oracle, ElementF, FieldTower};

use common::*;

fn towers() -> Vec<FieldTower> {
    let mut v: Vec<FieldTower> = [-7, -11, -15, -23, -39, -231].iter().map(|&d| iq(d)).collect();
    v.push(quartic());
    v
}

fn element(t: &FieldTower, a: i64, b: i64, den: i64) -> Option<ElementF> {
    let b = if t.degree() == 1 { 0 } else { b };
    if (a, b) == (0, 0) {
        return None;
    }
    ElementF::new(t.field(), a as i128, b as i128, den as i128).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn product_formula(ti in 0usize..7, a in -300i64..300, b in -40i64..40, den in 1i64..12) {
        let t = &towers()[ti];
        if let Some(alpha) = element(t, a, b, den) {
            prop_assert_eq!(global_character_product(t, &alpha), 1, "alpha = {}", alpha);
        }
    }

    #[test]
    fn diff_sets_are_odd_and_nonsplit(ti in 0usize..7, a in -300i64..300, b in -40i64..40, den in 1i64..6) {
        let t = &towers()[ti];
        if let Some(alpha) = element(t, a, b, den) {
            for c in enumerate_xi(t) {
                let diff = diff_set(t, &alpha, &c);
                prop_assert_eq!(diff.len() % 2, 1);
                prop_assert!(diff.finite.iter().all(|p| !t.splitting(p).is_split()));
            }
        }
    }

    #[test]
    fn routes_agree(ti in 0usize..7, a in -100i64..100, b in -30i64..30, den in 1i64..4, y in 0.05f64..50.0) {
        let t = &towers()[ti];
        if let Some(alpha) = element(t, a, b, den) {
            if alpha.norm().0.abs() <= 10_000 {
                let y = vec![y; t.field().places()];
                let s = b_phi(t, &alpha, &y).unwrap();
                let c = b_phi_closed(t, &alpha, &y).unwrap();
                prop_assert!(rel_close(s, c, 1e-9), "{}: {} vs {}", alpha, s, c);
                for class in enumerate_xi(t) {
                    prop_assert_eq!(value_at_zero(t, &alpha, &y, &class).unwrap().to_bits(), 0);
                }
            }
        }
    }

    #[test]
    fn totally_positive_derivative_is_nonpositive(ti in 0usize..7, a in 1i64..400, b in -20i64..20) {
        let t = &towers()[ti];
        if let Some(alpha) = element(t, a, b, 1) {
            if alpha.is_totally_positive() {
                prop_assert!(b_phi(t, &alpha, &vec![1.0; t.field().places()]).unwrap() <= 0.0);
            }
        }
    }

    #[test]
    fn degree_terms_match_point_counts(ti in 0usize..7, a in 1i64..400, b in -20i64..20) {
        let t = &towers()[ti];
        if let Some(alpha) = element(t, a, b, 1) {
            if alpha.is_totally_positive() {
                for term in finite_degree(t, &alpha).unwrap().per_prime {
                    let via = term_from_points(t, &alpha, &term.prime).unwrap();
                    prop_assert!(rel_close(via, term.term, 1e-13));
                    prop_assert!(*point_count(t, &alpha, &term.prime).unwrap().numer() >= 0);
                }
            }
        }
    }

    #[test]
    fn rho_is_multiplicative(m in 1u64..300, n in 1u64..300) {
        let t = iq(-23);
        let r = |k: u64| rho(&t, &principal_ideal(&t.element(k as i128, 0).unwrap()));
        if num_gcd(m, n) == 1 {
            prop_assert_eq!(r(m * n), r(m) * r(n));
        }
    }
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

#[test]
fn class_numbers_match_analytic_formula() {
    for d in [
        -7i64, -11, -15, -19, -23, -31, -35, -39, -43, -47, -51, -55, -59, -71, -79, -87, -95, -103, -119, -143, -167,
        -191, -231,
    ] {
        assert_eq!(class_number_bruteforce(&iq(d)).unwrap(), oracle::class_number_analytic(d), "d = {d}");
    }
}

#[test]
fn rho_oracle_on_more_fields() {
    for d in [-11i64, -15, -39] {
        let t = iq(d);
        for m in 1..=300u64 {
            let got = rho(&t, &principal_ideal(&t.element(m as i128, 0).unwrap()));
            assert_eq!(got, oracle::ideals_of_norm(d, m), "d = {d}, m = {m}");
        }
    }
}
