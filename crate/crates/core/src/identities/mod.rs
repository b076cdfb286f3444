//! The identity catalog and the recurrence-only solvers.
//!
//! Each catalog entry evaluates to an [`Evaluation`] whose residual
//! `lhs - rhs` must be zero. Ingredient sequences come from the oracles in
//! [`crate::arith`] and [`crate::combinatorics`]; the solvers in [`solve`]
//! never read them.

mod catalog;
pub mod solve;
mod tables;
pub mod theorem1;

use std::time::{Duration, Instant};

use num_bigint::BigInt;

pub use catalog::{
    Evaluation, Evaluator, IdentityId, Params, ProductIdentity, DEFAULT_K, DEFAULT_R, KEYS,
};
pub use solve::{solve_via_recurrence, solve_with_stats, RecurrenceTarget, SolveStats};
pub use theorem1::{solve_divisor_preimage, solve_divisor_sum, theorem1_lhs, theorem1_rhs};

use crate::arith::FunctionTable;
use crate::combinatorics::SubsetGround;
use crate::error::Result;
use tables::{Ingredients, TableKey};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub n: u64,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl Failure {
    pub fn residual(&self) -> BigInt {
        &self.lhs - &self.rhs
    }
}

/// Outcome of checking one identity over `n_lo..=n_hi`.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub n_lo: u64,
    pub n_hi: u64,
    pub failures: Vec<Failure>,
    /// Requested `n` below the identity's domain.
    pub skipped: Vec<u64>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Number of `n` actually evaluated.
    pub fn checked(&self) -> u64 {
        (self.n_hi + 1).saturating_sub(self.n_lo) - self.skipped.len() as u64
    }
}

/// `lhs - rhs` of `id` at `n`.
pub fn residual(id: IdentityId, n: u64) -> Result<BigInt> {
    Evaluator::new(n.max(1))
        .evaluate(id, n)
        .map(|e| e.residual())
}

pub fn verify_range(id: IdentityId, n_lo: u64, n_hi: u64) -> IdentityReport {
    verify_range_with(&Evaluator::new(n_hi.max(1)), id, n_lo, n_hi)
}

/// Checks every `n` in range and collects all failures; never stops early.
///
/// Panics if `n_hi` exceeds the evaluator's range.
pub fn verify_range_with(
    evaluator: &Evaluator,
    id: IdentityId,
    n_lo: u64,
    n_hi: u64,
) -> IdentityReport {
    assert!(
        n_hi <= evaluator.n_max(),
        "evaluator covers 0..={} but {n_hi} was requested",
        evaluator.n_max()
    );
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut skipped = Vec::new();
    let mut notes = Vec::new();
    for n in n_lo..=n_hi {
        if n < id.domain_start() {
            skipped.push(n);
            continue;
        }
        let e = evaluator.evaluate_unchecked(id, n);
        if !e.holds() {
            failures.push(Failure {
                n,
                lhs: e.lhs,
                rhs: e.rhs,
            });
        }
    }
    if !skipped.is_empty() {
        notes.push(format!(
            "skipped {} value(s) below the stated domain n >= {}",
            skipped.len(),
            id.domain_start()
        ));
    }
    if id == IdentityId::Thm5c && n_lo <= 1 && n_hi >= 1 {
        let holds = evaluator.evaluate_unchecked(id, 1).holds();
        notes.push(format!(
            "outside the stated domain, n = 1 {} with sigma(0) = sigma_s(0) = 0",
            if holds { "also holds" } else { "fails" }
        ));
    }
    IdentityReport {
        id,
        n_lo,
        n_hi,
        failures,
        skipped,
        notes,
        elapsed: start.elapsed(),
    }
}

/// Coefficientwise comparison of both sides of a product identity up to `q^order`.
pub fn product_identity_check(which: ProductIdentity, order: u64) -> IdentityReport {
    verify_range(IdentityId::Product(which), 0, order)
}

/// A divisor-sum pair `g = Σ_{d|·} f(d)` from the catalog.
#[derive(Clone, Debug)]
pub struct BridgePair {
    pub label: String,
    pub f: FunctionTable,
    pub g: FunctionTable,
}

/// The sixteen `(f, g)` divisor-sum pairs whose bridge sides must agree, on `0..=n_max`.
pub fn theorem1_pairs(n_max: u64, r: u64) -> Vec<BridgePair> {
    let ing = Ingredients::new(n_max);
    let pairs = [
        ("generic", TableKey::GenericF, TableKey::GenericG),
        ("phi", TableKey::Phi, TableKey::Identity),
        ("tau", TableKey::Ones, TableKey::Tau),
        ("lambda", TableKey::Liouville, TableKey::DeltaS),
        ("mu", TableKey::Mobius, TableKey::Unit),
        ("p_psi", TableKey::PPsi, TableKey::P),
        ("q_psi", TableKey::QPsi, TableKey::Q),
        ("c_psi", TableKey::CPsi, TableKey::Compositions),
        ("c_psi_r", TableKey::CPsiR(r), TableKey::CompositionsR(r)),
        (
            "eta_1",
            TableKey::Eta(crate::arith::EtaKind::One),
            TableKey::R2Quarter,
        ),
        (
            "eta_2",
            TableKey::Eta(crate::arith::EtaKind::Two),
            TableKey::R4Eighth,
        ),
        ("r_8", TableKey::CubeSigned, TableKey::R8Signed),
        (
            "Phi",
            TableKey::Nathanson(None, SubsetGround::Interval),
            TableKey::SubsetsAll,
        ),
        (
            "Phi_r",
            TableKey::Nathanson(Some(r), SubsetGround::Interval),
            TableKey::SubsetsR(r),
        ),
        (
            "Phi_tau",
            TableKey::Nathanson(None, SubsetGround::Divisors),
            TableKey::DivisorSubsetsAll,
        ),
        (
            "Phi_tau_r",
            TableKey::Nathanson(Some(r), SubsetGround::Divisors),
            TableKey::DivisorSubsetsR(r),
        ),
    ];
    pairs
        .into_iter()
        .map(|(label, f, g)| {
            let g_table = ing.table(g);
            BridgePair {
                label: label.to_string(),
                f: (*ing.table(f)).clone(),
                g: (*g_table).clone(),
            }
        })
        .collect()
}
