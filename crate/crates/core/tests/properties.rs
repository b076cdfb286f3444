use eulerec::arith::{self, SigmaKind};
use eulerec::combinatorics::{self, SubsetGround};
use eulerec::identities::{self, IdentityId, Params};
use eulerec::numbers;
use eulerec::series::product_expand;
use eulerec::{FunctionTable, ProductSpec, Series};
use num_bigint::BigInt;
use proptest::prelude::*;

fn series_strategy(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(-20i64..=20, order + 1).prop_map(|c| Series::from_i64(&c))
}

fn unit_series_strategy(order: usize) -> impl Strategy<Value = Series> {
    (prop::bool::ANY, prop::collection::vec(-9i64..=9, order)).prop_map(|(neg, tail)| {
        let mut c = vec![if neg { -1 } else { 1 }];
        c.extend(tail);
        Series::from_i64(&c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn ring_axioms(f in series_strategy(50), g in series_strategy(50), h in series_strategy(50)) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
    }

    #[test]
    fn reciprocal_is_two_sided_inverse(f in unit_series_strategy(40)) {
        let inv = f.reciprocal().unwrap();
        prop_assert_eq!(&f * &inv, Series::one(40));
        prop_assert_eq!(&inv * &f, Series::one(40));
    }

    #[test]
    fn log_derivative_is_additive(f in unit_series_strategy(40), g in unit_series_strategy(40)) {
        let lhs = (&f * &g).q_dlog().unwrap();
        let rhs = &f.q_dlog().unwrap() + &g.q_dlog().unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn reciprocal_inverse_for_a_hundred_unit_series() {
    // deterministic companion to the proptest: 100 unit series of order 40
    let mut state = 0x2545_f491_4f6c_dd1du64;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % 19) as i64 - 9
    };
    for case in 0..100 {
        let mut c = vec![if case % 2 == 0 { 1 } else { -1 }];
        c.extend((0..40).map(|_| next()));
        let f = Series::from_i64(&c);
        assert_eq!(&f * &f.reciprocal().unwrap(), Series::one(40));
    }
}

#[test]
fn euler_product_matches_omega_to_2000() {
    let euler = product_expand(&ProductSpec::euler(), 2000);
    for m in 0..=2000usize {
        assert_eq!(
            euler.coeffs()[m],
            BigInt::from(numbers::omega(m as i64)),
            "m = {m}"
        );
    }
}

#[test]
fn alternating_lambert_series_gives_sigma_s() {
    // Σ n q^n / (1 + q^n) expanded term by term, each term a geometric series
    let order = 200usize;
    let mut lambert = Series::zero(order);
    for n in 1..=order {
        let term = Series::from_fn(order, |i| {
            if i >= n && i % n == 0 {
                let j = i / n;
                BigInt::from(if j % 2 == 1 { n as i64 } else { -(n as i64) })
            } else {
                BigInt::from(0)
            }
        });
        lambert = &lambert + &term;
    }
    let sigma_s = arith::sigma_table(SigmaKind::Alternating, order as u64);
    assert_eq!(lambert.coeffs(), sigma_s.values());
}

#[test]
fn nathanson_and_composition_inversions() {
    let n_max = 200;
    let phi_big = combinatorics::nathanson_tables(n_max, None, SubsetGround::Interval);
    let phi_tau = combinatorics::nathanson_tables(n_max, None, SubsetGround::Divisors);
    let c = combinatorics::compositions_table(n_max, None).unwrap();
    let c_psi = combinatorics::relprime_table(&c);
    for n in 1..=n_max {
        let tau = arith::tau(n).unwrap();
        assert_eq!(
            arith::divisor_sum(&c_psi, n).unwrap(),
            c.values()[n as usize]
        );
        assert_eq!(
            arith::divisor_sum(&phi_big, n).unwrap(),
            (BigInt::from(1) << n) - 1
        );
        assert_eq!(
            arith::divisor_sum(&phi_tau, n).unwrap(),
            (BigInt::from(1) << tau) - 1
        );
    }
    for r in 1..=10 {
        let phi_r = combinatorics::nathanson_tables(n_max, Some(r), SubsetGround::Interval);
        let phi_tau_r = combinatorics::nathanson_tables(n_max, Some(r), SubsetGround::Divisors);
        for n in 1..=n_max {
            let tau = arith::tau(n).unwrap();
            assert_eq!(
                arith::divisor_sum(&phi_r, n).unwrap(),
                combinatorics::binom(n, r)
            );
            assert_eq!(
                arith::divisor_sum(&phi_tau_r, n).unwrap(),
                combinatorics::binom(tau, r)
            );
        }
    }
}

#[test]
fn theorem1_bridge_small() {
    for pair in identities::theorem1_pairs(120, 4) {
        for n in 1..=120 {
            assert_eq!(
                identities::theorem1_lhs(&pair.g, n).unwrap(),
                identities::theorem1_rhs(&pair.f, n).unwrap(),
                "{} at n = {n}",
                pair.label
            );
        }
    }
}

#[test]
fn preimage_solver_recovers_catalog_functions() {
    let n_max = 150;
    let p = combinatorics::partition_tables(n_max).p;
    let solved = identities::solve_divisor_preimage(&p);
    assert_eq!(solved.values(), combinatorics::relprime_table(&p).values());

    let unit = FunctionTable::positive("unit", n_max, |n| (n == 1) as i64);
    let mu = identities::solve_divisor_preimage(&unit);
    assert_eq!(mu.values(), arith::mobius_table(n_max).values());

    let lambda = arith::liouville_table(n_max);
    let delta = identities::solve_divisor_sum(&lambda);
    for n in 1..=n_max {
        assert_eq!(
            delta.values()[n as usize],
            BigInt::from(numbers::delta_s(n))
        );
    }
}

#[test]
fn catalog_holds_through_200_with_other_parameters() {
    for (r, k) in [(1, 1), (3, 2), (5, 7)] {
        let params = Params {
            r: Some(r),
            k: Some(k),
            literal: false,
        };
        let evaluator = identities::Evaluator::new(200);
        for id in IdentityId::catalog(params) {
            let report = identities::verify_range_with(&evaluator, id, 0, 200);
            assert!(report.passed(), "{id}: {:?}", report.failures.first());
        }
    }
}
