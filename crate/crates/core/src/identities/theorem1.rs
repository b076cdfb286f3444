//! Both sides of the generic Euler-type recurrence for a divisor-sum pair.
//!
//! For `g(n) = Σ_{d|n} f(d)`:
//!
//! ```text
//! Σ_{k=1}^{n} g(k) ω(n-k) = Σ_{m=1}^{n} f(m) ω_m(n-m)
//! ```
//!
//! The `m = n` term on the right is `f(n)` and the `k = n` term on the left is
//! `g(n)`, so either side can be solved for its newest value.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::FunctionTable;
use crate::error::Result;
use crate::numbers::OmegaTable;

/// `Σ_{k=1}^{n} g(k) ω(n-k)`.
pub fn theorem1_lhs(g: &FunctionTable, n: u64) -> Result<BigInt> {
    g.require(n)?;
    Ok(lhs_with(&OmegaTable::new(n), g.values(), n))
}

/// `Σ_{m=1}^{n} f(m) ω_m(n-m)`.
pub fn theorem1_rhs(f: &FunctionTable, n: u64) -> Result<BigInt> {
    f.require(n)?;
    Ok(rhs_with(&OmegaTable::new(n), f.values(), n))
}

pub(crate) fn lhs_with(omega: &OmegaTable, g: &[BigInt], n: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for k in 1..=n {
        let w = omega.get((n - k) as i64);
        if w != 0 {
            acc += &g[k as usize] * w;
        }
    }
    acc
}

pub(crate) fn rhs_with(omega: &OmegaTable, f: &[BigInt], n: u64) -> BigInt {
    let mut acc = BigInt::zero();
    for m in 1..=n {
        let fm = &f[m as usize];
        if fm.is_zero() {
            continue;
        }
        let w = omega.omega_k(m, (n - m) as i64);
        if w != 0 {
            acc += fm * w;
        }
    }
    acc
}

/// Recovers `f` from `g` without factoring:
/// `f(n) = Σ_k g(k) ω(n-k) - Σ_{m<n} f(m) ω_m(n-m)`.
pub fn solve_divisor_preimage(g: &FunctionTable) -> FunctionTable {
    let n_max = g.max_n();
    let omega = OmegaTable::new(n_max);
    let mut f = vec![BigInt::zero(); n_max as usize + 1];
    for n in 1..=n_max {
        // f[n] is still zero, so rhs_with sums m < n only
        let value = lhs_with(&omega, g.values(), n) - rhs_with(&omega, &f, n);
        f[n as usize] = value;
    }
    FunctionTable::new(format!("{}_pre", g.name()), f)
}

/// Builds `g = Σ_{d|·} f(d)` from the recurrence rather than from divisors:
/// `g(n) = Σ_m f(m) ω_m(n-m) - Σ_{k<n} g(k) ω(n-k)`.
pub fn solve_divisor_sum(f: &FunctionTable) -> FunctionTable {
    let n_max = f.max_n();
    let omega = OmegaTable::new(n_max);
    let mut g = vec![BigInt::zero(); n_max as usize + 1];
    for n in 1..=n_max {
        let value = rhs_with(&omega, f.values(), n) - lhs_with(&omega, &g, n);
        g[n as usize] = value;
    }
    FunctionTable::new(format!("{}_sum", f.name()), g)
}
