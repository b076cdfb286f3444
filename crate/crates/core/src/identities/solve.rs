//! Sequences computed from sparse recurrences alone.
//!
//! Nothing here touches the oracle tables: the only inputs are the
//! pentagonal signs, the squares, and the base values at 0.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::FunctionTable;
use crate::error::{Error, Result};
use crate::numbers::{self, generalized_pentagonals};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RecurrenceTarget {
    /// `p(n)` from `Σ ω(k) p(n-k) = 0`.
    Partitions,
    /// `q(n)` from `q(n) + 2Σ_{j≥1} (-1)^{j} q(n-j²) = ω(n)`.
    DistinctPartitions,
    /// `σ(n)` from `Σ σ(k) ω(n-k) = -n ω(n)`.
    DivisorSum,
    /// `r_k(n)` from the logarithmic derivative of the `k`-th theta power.
    SumsOfSquares(u64),
}

impl fmt::Display for RecurrenceTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecurrenceTarget::Partitions => f.write_str("p"),
            RecurrenceTarget::DistinctPartitions => f.write_str("q"),
            RecurrenceTarget::DivisorSum => f.write_str("sigma"),
            RecurrenceTarget::SumsOfSquares(k) => write!(f, "r_{k}"),
        }
    }
}

impl FromStr for RecurrenceTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p" => Ok(RecurrenceTarget::Partitions),
            "q" => Ok(RecurrenceTarget::DistinctPartitions),
            "sigma" => Ok(RecurrenceTarget::DivisorSum),
            _ => match s.strip_prefix("r_").map(str::parse::<u64>) {
                Some(Ok(k)) if k >= 1 => Ok(RecurrenceTarget::SumsOfSquares(k)),
                _ => Err(Error::InvalidSelector {
                    what: "recurrence target",
                    value: s.to_string(),
                }),
            },
        }
    }
}

/// Work done by a solver run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Nonzero recurrence terms combined for each `n`.
    pub terms_per_n: Vec<u64>,
}

impl SolveStats {
    pub fn total_terms(&self) -> u64 {
        self.terms_per_n.iter().sum()
    }

    pub fn max_terms(&self) -> u64 {
        self.terms_per_n.iter().copied().max().unwrap_or(0)
    }
}

pub fn solve_via_recurrence(target: RecurrenceTarget, n_max: u64) -> Result<FunctionTable> {
    solve_with_stats(target, n_max).map(|(table, _)| table)
}

pub fn solve_with_stats(
    target: RecurrenceTarget,
    n_max: u64,
) -> Result<(FunctionTable, SolveStats)> {
    let mut stats = SolveStats {
        terms_per_n: vec![0; n_max as usize + 1],
    };
    let values = match target {
        RecurrenceTarget::Partitions => partitions(n_max, &mut stats),
        RecurrenceTarget::DistinctPartitions => distinct_partitions(n_max, &mut stats),
        RecurrenceTarget::DivisorSum => divisor_sums(n_max, &mut stats),
        RecurrenceTarget::SumsOfSquares(k) => sums_of_squares(k, n_max, &mut stats)?,
    };
    Ok((FunctionTable::new(target.to_string(), values), stats))
}

/// Generalized pentagonal numbers up to `n_max`, shared by the ω-driven solvers.
fn pentagonal_list(n_max: u64) -> Vec<(usize, i64)> {
    generalized_pentagonals(n_max)
        .map(|(m, sign)| (m as usize, sign))
        .collect()
}

fn partitions(n_max: u64, stats: &mut SolveStats) -> Vec<BigInt> {
    let pent = pentagonal_list(n_max);
    let mut p: Vec<BigInt> = Vec::with_capacity(n_max as usize + 1);
    p.push(BigInt::one());
    for n in 1..=n_max as usize {
        let mut acc = BigInt::zero();
        let mut terms = 0;
        for &(m, sign) in pent.iter().take_while(|&&(m, _)| m <= n) {
            // p(n) = -Σ_{m≥1} ω(m) p(n-m)
            if sign < 0 {
                acc += &p[n - m];
            } else {
                acc -= &p[n - m];
            }
            terms += 1;
        }
        stats.terms_per_n[n] = terms;
        p.push(acc);
    }
    p
}

fn distinct_partitions(n_max: u64, stats: &mut SolveStats) -> Vec<BigInt> {
    let mut q: Vec<BigInt> = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        let mut acc = BigInt::from(numbers::omega(n as i64));
        let mut terms = 1;
        for (square, j) in numbers::squares(n) {
            let prev = &q[(n - square) as usize];
            // -2 (-1)^j q(n - j²)
            if j % 2 == 1 {
                acc += prev * 2;
            } else {
                acc -= prev * 2;
            }
            terms += 1;
        }
        stats.terms_per_n[n as usize] = terms;
        q.push(acc);
    }
    q
}

fn divisor_sums(n_max: u64, stats: &mut SolveStats) -> Vec<BigInt> {
    let pent = pentagonal_list(n_max);
    let mut sigma: Vec<BigInt> = Vec::with_capacity(n_max as usize + 1);
    sigma.push(BigInt::zero());
    for n in 1..=n_max as usize {
        // σ(n) = -n ω(n) - Σ_{1≤m<n} ω(m) σ(n-m)
        let mut acc = BigInt::from(-(n as i64) * numbers::omega(n as i64));
        let mut terms = 1;
        for &(m, sign) in pent.iter().take_while(|&&(m, _)| m < n) {
            if sign < 0 {
                acc += &sigma[n - m];
            } else {
                acc -= &sigma[n - m];
            }
            terms += 1;
        }
        stats.terms_per_n[n] = terms;
        sigma.push(acc);
    }
    sigma
}

fn sums_of_squares(k: u64, n_max: u64, stats: &mut SolveStats) -> Result<Vec<BigInt>> {
    if k == 0 {
        return Err(Error::NonPositive {
            what: "square count k",
            value: 0,
        });
    }
    let mut scratch = SolveStats {
        terms_per_n: vec![0; n_max as usize + 1],
    };
    let sigma = divisor_sums(n_max, &mut scratch);
    // σ_o(i) = σ(i) - 2σ(i/2) for even i
    let weights: Vec<BigInt> = (0..=n_max as usize)
        .map(|i| {
            let odd = if i % 2 == 0 && i > 0 {
                &sigma[i] - &sigma[i / 2] * 2
            } else {
                sigma[i].clone()
            };
            &sigma[i] + odd
        })
        .collect();
    let k_big = BigInt::from(k);
    let mut r: Vec<BigInt> = Vec::with_capacity(n_max as usize + 1);
    r.push(BigInt::one());
    for n in 1..=n_max as usize {
        // (-1)^{n+1} n r_k(n) = k Σ_{i=1}^{n} (σ(i)+σ_o(i)) (-1)^{n-i} r_k(n-i)
        let mut acc = BigInt::zero();
        let mut terms = 0;
        for i in 1..=n {
            let prev = &r[n - i];
            if prev.is_zero() {
                continue;
            }
            let term = &weights[i] * prev;
            if (n - i) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
            terms += 1;
        }
        stats.terms_per_n[n] = terms;
        let numerator = acc * &k_big;
        let divisor = BigInt::from(n);
        let (quot, rem) = numerator.div_rem(&divisor);
        if !rem.is_zero() {
            return Err(Error::InexactDivision {
                n: n as u64,
                numerator,
                divisor,
            });
        }
        r.push(if n % 2 == 1 { quot } else { -quot });
    }
    Ok(r)
}
