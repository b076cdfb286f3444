//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
//!
//! Every check is exact-integer. Time limits are measured around the work they
//! bound, table construction included.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use eulerec::arith::{self, SigmaKind};
use eulerec::combinatorics::{self, SubsetGround};
use eulerec::identities::{
    self, Evaluator, IdentityId, IdentityReport, ProductIdentity, RecurrenceTarget,
};
use eulerec::FunctionTable;
use num_bigint::BigInt;
use num_integer::Integer;

type Outcome = Result<String, String>;

struct Criterion {
    label: &'static str,
    run: fn() -> Outcome,
}

fn within(elapsed: Duration, limit_secs: u64, what: &str) -> Result<(), String> {
    if elapsed <= Duration::from_secs(limit_secs) {
        Ok(())
    } else {
        Err(format!("{what} took {elapsed:.2?}, limit {limit_secs} s"))
    }
}

fn require_pass(report: &IdentityReport) -> Result<(), String> {
    match report.failures.first() {
        None => Ok(()),
        Some(f) => Err(format!(
            "{} failed at {} n (first n = {}, lhs = {}, rhs = {})",
            report.id,
            report.failures.len(),
            f.n,
            f.lhs,
            f.rhs
        )),
    }
}

fn tables_equal(ours: &FunctionTable, oracle: &FunctionTable) -> Result<(), String> {
    match ours
        .values()
        .iter()
        .zip(oracle.values())
        .position(|(a, b)| a != b)
    {
        None if ours.values().len() == oracle.values().len() => Ok(()),
        None => Err(format!(
            "{} has {} entries, oracle {} has {}",
            ours.name(),
            ours.values().len(),
            oracle.name(),
            oracle.values().len()
        )),
        Some(n) => Err(format!(
            "{} differs from {} at n = {n}: {} vs {}",
            ours.name(),
            oracle.name(),
            ours.values()[n],
            oracle.values()[n]
        )),
    }
}

fn product_identities() -> Outcome {
    let start = Instant::now();
    for which in ProductIdentity::ALL {
        require_pass(&identities::product_identity_check(which, 2000))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, 10, "product checks")?;
    Ok(format!("4 products to q^2000, {elapsed:.2?}"))
}

fn classical_recurrences() -> Outcome {
    let start = Instant::now();
    let evaluator = Evaluator::new(1000);
    for id in [
        IdentityId::PartitionRecurrence,
        IdentityId::DistinctPartitionRecurrence,
        IdentityId::DivisorSumRecurrence,
    ] {
        require_pass(&identities::verify_range_with(&evaluator, id, 1, 1000))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, 5, "classical recurrences")?;
    Ok(format!(
        "eq3-p, eq4-q, eq5-sigma on 1..=1000, {elapsed:.2?}"
    ))
}

fn divisor_sum_bridge() -> Outcome {
    let pairs = identities::theorem1_pairs(300, identities::DEFAULT_R);
    if pairs.len() != 16 {
        return Err(format!("expected 16 pairs, got {}", pairs.len()));
    }
    for pair in &pairs {
        for n in 1..=300 {
            let lhs = identities::theorem1_lhs(&pair.g, n).map_err(|e| e.to_string())?;
            let rhs = identities::theorem1_rhs(&pair.f, n).map_err(|e| e.to_string())?;
            if lhs != rhs {
                return Err(format!("{} at n = {n}: {lhs} vs {rhs}", pair.label));
            }
        }
    }
    Ok("16 pairs on 1..=300".to_string())
}

fn thm2_thm3_thm5() -> Outcome {
    let evaluator = Evaluator::new(1000);
    let ids = [
        IdentityId::Thm2a,
        IdentityId::Thm2b,
        IdentityId::Thm3a,
        IdentityId::Thm3b,
        IdentityId::Thm3c,
        IdentityId::Thm5a,
        IdentityId::Thm5b,
        IdentityId::Thm5c,
    ];
    let mut thm5c_note = String::new();
    for id in ids {
        let report = identities::verify_range_with(&evaluator, id, 0, 1000);
        require_pass(&report)?;
        if id == IdentityId::Thm5c {
            thm5c_note = report
                .notes
                .iter()
                .find(|n| n.contains("n = 1"))
                .cloned()
                .unwrap_or_default();
        }
    }
    Ok(format!(
        "8 identities on 0..=1000 from their domain starts; thm5c: {thm5c_note}"
    ))
}

fn thm4() -> Outcome {
    let evaluator = Evaluator::new(500);
    require_pass(&identities::verify_range_with(
        &evaluator,
        IdentityId::Thm4a,
        0,
        500,
    ))?;
    let corrected = IdentityId::Thm4b { literal: false };
    require_pass(&identities::verify_range_with(
        &evaluator, corrected, 0, 500,
    ))?;
    let literal = evaluator
        .evaluate(IdentityId::Thm4b { literal: true }, 2)
        .map_err(|e| e.to_string())?;
    if literal.residual() != BigInt::from(3) {
        return Err(format!(
            "literal thm4b residual at n = 2 is {}, expected 3",
            literal.residual()
        ));
    }
    Ok("thm4a and corrected thm4b on 0..=500; literal thm4b residual 3 at n = 2".to_string())
}

fn sums_of_squares_suite() -> Outcome {
    for k in [2, 4, 8] {
        let oracle = arith::r_table(k, 300).map_err(|e| e.to_string())?;
        for n in 1..=300 {
            let jacobi = arith::r_jacobi(n, k).map_err(|e| e.to_string())?;
            if jacobi != oracle.values()[n as usize] {
                return Err(format!(
                    "r_jacobi({n}, {k}) = {jacobi}, oracle {}",
                    oracle.values()[n as usize]
                ));
            }
        }
    }
    let evaluator = Evaluator::new(300);
    for k in 1..=8 {
        let id = IdentityId::SquaresRecurrence(k);
        require_pass(&identities::verify_range_with(&evaluator, id, 1, 300))?;
    }
    let mut coprime_cases = 0;
    for k in 1..=12u64 {
        let id = IdentityId::SquaresCongruence(k);
        require_pass(&identities::verify_range_with(&evaluator, id, 1, 300))?;
        let r = arith::r_table(k, 300).map_err(|e| e.to_string())?;
        for n in 1..=300u64 {
            if n.gcd(&k) == 1 {
                coprime_cases += 1;
                if (&r.values()[n as usize] % BigInt::from(k)).sign() != num_bigint::Sign::NoSign {
                    return Err(format!("r_{k}({n}) is not divisible by {k}"));
                }
            }
        }
    }
    Ok(format!(
        "Jacobi formulas k in {{2,4,8}}; thm-rk k <= 8; congruence k <= 12 ({coprime_cases} coprime cases); n <= 300"
    ))
}

fn solvers_match_oracles() -> Outcome {
    let solve =
        |target, n_max| identities::solve_via_recurrence(target, n_max).map_err(|e| e.to_string());
    let partitions = combinatorics::partition_tables(500);
    tables_equal(&solve(RecurrenceTarget::Partitions, 500)?, &partitions.p)?;
    tables_equal(
        &solve(RecurrenceTarget::DistinctPartitions, 500)?,
        &partitions.q,
    )?;
    tables_equal(
        &solve(RecurrenceTarget::DivisorSum, 2000)?,
        &arith::sigma_table(SigmaKind::All, 2000),
    )?;
    for k in 1..=8 {
        // an inexact division by n surfaces as an error here
        let solved = solve(RecurrenceTarget::SumsOfSquares(k), 300)?;
        tables_equal(&solved, &arith::r_table(k, 300).map_err(|e| e.to_string())?)?;
    }
    Ok("p, q to 500; sigma to 2000; r_k for k <= 8 to 300 with exact division".to_string())
}

fn round_trip(f: &FunctionTable, g: &FunctionTable) -> Result<(), String> {
    for n in 1..=g.max_n() {
        let sum = arith::divisor_sum(f, n).map_err(|e| e.to_string())?;
        if sum != g.values()[n as usize] {
            return Err(format!(
                "divisor sum of {} at n = {n} is {sum}, expected {}",
                f.name(),
                g.values()[n as usize]
            ));
        }
    }
    let back = arith::mobius_invert(g);
    if back.values()[1..] != f.values()[1..] {
        return Err(format!(
            "inverting {} does not return {}",
            g.name(),
            f.name()
        ));
    }
    Ok(())
}

fn inversion_suite() -> Outcome {
    let n_max = 200;
    let pairs = identities::theorem1_pairs(n_max, identities::DEFAULT_R);
    for pair in &pairs {
        round_trip(&pair.f, &pair.g).map_err(|e| format!("{}: {e}", pair.label))?;
    }
    let c = combinatorics::compositions_table(n_max, None).map_err(|e| e.to_string())?;
    let c_psi = combinatorics::relprime_table(&c);
    let phi = combinatorics::nathanson_tables(n_max, None, SubsetGround::Interval);
    let two = BigInt::from(2);
    if phi.values()[1] != &two * &c_psi.values()[1] - 1 {
        return Err("Phi(1) != 2 c_psi(1) - 1".to_string());
    }
    for n in 2..=n_max as usize {
        if phi.values()[n] != &two * &c_psi.values()[n] {
            return Err(format!("Phi({n}) != 2 c_psi({n})"));
        }
    }
    for r in 1..=10 {
        let phi_r = combinatorics::nathanson_tables(n_max, Some(r), SubsetGround::Interval);
        let phi_tau_r = combinatorics::nathanson_tables(n_max, Some(r), SubsetGround::Divisors);
        let c_r = combinatorics::compositions_table(n_max, Some(r)).map_err(|e| e.to_string())?;
        let c_r1 =
            combinatorics::compositions_table(n_max, Some(r + 1)).map_err(|e| e.to_string())?;
        let psi_r = combinatorics::relprime_table(&c_r);
        let psi_r1 = combinatorics::relprime_table(&c_r1);
        round_trip(&psi_r, &c_r)?;
        round_trip(
            &phi_r,
            &FunctionTable::positive("C(n,r)", n_max, |m| combinatorics::binom(m, r)),
        )?;
        round_trip(
            &phi_tau_r,
            &FunctionTable::positive("C(tau,r)", n_max, |m| {
                combinatorics::binom(arith::tau(m).expect("m >= 1"), r)
            }),
        )?;
        for n in 1..=n_max as usize {
            if phi_r.values()[n] != &psi_r.values()[n] + &psi_r1.values()[n] {
                return Err(format!(
                    "Phi_{r}({n}) != c_psi({n},{r}) + c_psi({n},{})",
                    r + 1
                ));
            }
        }
    }
    let mut oracle_checks = 0;
    for over in [SubsetGround::Interval, SubsetGround::Divisors] {
        let all = combinatorics::nathanson_tables(20, None, over);
        for n in 1..=20u64 {
            let counted =
                combinatorics::subset_gcd_oracle(n, None, over).map_err(|e| e.to_string())?;
            if BigInt::from(counted) != all.values()[n as usize] {
                return Err(format!(
                    "{over:?} subsets of size any at n = {n}: oracle {counted}"
                ));
            }
            oracle_checks += 1;
        }
        for r in 1..=10 {
            let table = combinatorics::nathanson_tables(20, Some(r), over);
            for n in 1..=20u64 {
                let counted = combinatorics::subset_gcd_oracle(n, Some(r), over)
                    .map_err(|e| e.to_string())?;
                if BigInt::from(counted) != table.values()[n as usize] {
                    return Err(format!(
                        "{over:?} subsets of size {r} at n = {n}: oracle {counted}"
                    ));
                }
                oracle_checks += 1;
            }
        }
    }
    Ok(format!(
        "{} catalog pairs plus r <= 10 round trips, Phi identities to n = {n_max}, {oracle_checks} subset oracle checks for n <= 20",
        pairs.len()
    ))
}

fn performance() -> Outcome {
    let start = Instant::now();
    let (p, _) = identities::solve_with_stats(RecurrenceTarget::Partitions, 10_000)
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    within(elapsed, 30, "p recurrence to 10000")?;
    let digits = p.values()[10_000].to_string().len();
    let mut worst = Vec::new();
    for target in [
        RecurrenceTarget::Partitions,
        RecurrenceTarget::DistinctPartitions,
        RecurrenceTarget::DivisorSum,
    ] {
        let (_, stats) = identities::solve_with_stats(target, 10_000).map_err(|e| e.to_string())?;
        for (n, &terms) in stats.terms_per_n.iter().enumerate() {
            let bound = 2.0 * (n as f64).sqrt() + 2.0;
            if terms as f64 > bound {
                return Err(format!(
                    "{target} uses {terms} terms at n = {n}, bound {bound:.1}"
                ));
            }
        }
        worst.push(format!("{target} max {}", stats.max_terms()));
    }
    Ok(format!(
        "p(10000) has {digits} digits in {elapsed:.2?}; terms per n <= 2 sqrt(n) + 2 ({})",
        worst.join(", ")
    ))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            label: "product identities to order 2000",
            run: product_identities,
        },
        Criterion {
            label: "classical recurrences",
            run: classical_recurrences,
        },
        Criterion {
            label: "divisor-sum bridge, 16 pairs",
            run: divisor_sum_bridge,
        },
        Criterion {
            label: "thm2, thm3 and thm5 families",
            run: thm2_thm3_thm5,
        },
        Criterion {
            label: "thm4a, corrected and literal thm4b",
            run: thm4,
        },
        Criterion {
            label: "sums of squares",
            run: sums_of_squares_suite,
        },
        Criterion {
            label: "recurrence solvers match oracles",
            run: solvers_match_oracles,
        },
        Criterion {
            label: "inversion and subset identities",
            run: inversion_suite,
        },
        Criterion {
            label: "recurrence performance",
            run: performance,
        },
    ];
    let mut failed = 0;
    for (i, criterion) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = (criterion.run)();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!(
                "PASS {}. {} [{elapsed:.2?}]: {detail}",
                i + 1,
                criterion.label
            ),
            Err(reason) => {
                failed += 1;
                println!(
                    "FAIL {}. {} [{elapsed:.2?}]: {reason}",
                    i + 1,
                    criterion.label
                );
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
