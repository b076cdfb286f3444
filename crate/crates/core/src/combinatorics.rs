//! Partitions, compositions and gcd-restricted subsets.
//!
//! Two kinds of routines live here: table builders (dynamic programming and
//! Möbius inversion, fine up to a few thousand) and exhaustive enumeration
//! oracles guarded to small `n`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::{binomial, gcd};
use num_traits::{One, Zero};

use crate::arith::{self, FunctionTable};
use crate::error::{Error, Result};
use crate::numbers;

pub const PARTITION_GUARD: u64 = 60;
pub const SUBSET_GUARD: u64 = 22;

pub fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        BigInt::zero()
    } else {
        binomial(BigInt::from(n), BigInt::from(k))
    }
}

#[derive(Clone, Debug)]
pub struct PartitionTables {
    /// All partitions.
    pub p: FunctionTable,
    /// Partitions into distinct parts.
    pub q: FunctionTable,
    /// Partitions into distinct odd parts.
    pub qq: FunctionTable,
}

pub fn partition_tables(n_max: u64) -> PartitionTables {
    let len = n_max as usize + 1;
    let mut p = vec![BigInt::zero(); len];
    let mut q = vec![BigInt::zero(); len];
    let mut qq = vec![BigInt::zero(); len];
    p[0] = BigInt::one();
    q[0] = BigInt::one();
    qq[0] = BigInt::one();
    for part in 1..len {
        // unbounded multiplicity: ascending
        for n in part..len {
            let (lo, hi) = p.split_at_mut(n);
            hi[0] += &lo[n - part];
        }
        // at most once: descending
        for n in (part..len).rev() {
            let (lo, hi) = q.split_at_mut(n);
            hi[0] += &lo[n - part];
        }
        if part % 2 == 1 {
            for n in (part..len).rev() {
                let (lo, hi) = qq.split_at_mut(n);
                hi[0] += &lo[n - part];
            }
        }
    }
    PartitionTables {
        p: FunctionTable::new("p", p),
        q: FunctionTable::new("q", q),
        qq: FunctionTable::new("qq", qq),
    }
}

/// Composable filters on a partition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct PartitionConstraint {
    pub distinct: bool,
    pub odd_parts: bool,
    /// Overall gcd of the parts equal to 1.
    pub coprime: bool,
    /// Exactly this many parts.
    pub parts: Option<u64>,
}

impl PartitionConstraint {
    pub fn distinct(mut self) -> Self {
        self.distinct = true;
        self
    }

    pub fn odd_parts(mut self) -> Self {
        self.odd_parts = true;
        self
    }

    pub fn coprime(mut self) -> Self {
        self.coprime = true;
        self
    }

    pub fn with_parts(mut self, r: u64) -> Self {
        self.parts = Some(r);
        self
    }

    fn accepts(&self, parts: &[u64]) -> bool {
        if let Some(r) = self.parts {
            if parts.len() as u64 != r {
                return false;
            }
        }
        // parts arrive non-increasing
        if self.distinct && parts.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        if self.odd_parts && parts.iter().any(|p| p % 2 == 0) {
            return false;
        }
        if self.coprime && !parts.is_empty() {
            return parts.iter().fold(0, |g, &p| gcd(g, p)) == 1;
        }
        true
    }
}

/// Counts partitions of `n` satisfying `constraint` by generating every
/// partition and filtering it.
pub fn enumerate_partitions_oracle(n: u64, constraint: PartitionConstraint) -> Result<u64> {
    if n > PARTITION_GUARD {
        return Err(Error::OverGuard {
            what: "partition size",
            value: n,
            limit: PARTITION_GUARD,
        });
    }
    fn walk(rest: u64, max_part: u64, parts: &mut Vec<u64>, c: &PartitionConstraint) -> u64 {
        if rest == 0 {
            return c.accepts(parts) as u64;
        }
        let mut count = 0;
        for part in (1..=max_part.min(rest)).rev() {
            parts.push(part);
            count += walk(rest - part, part, parts, c);
            parts.pop();
        }
        count
    }
    Ok(walk(n, n, &mut Vec::new(), &constraint))
}

/// Table counterpart of [`enumerate_partitions_oracle`] on `0..=n_max`.
///
/// A part-count DP handles distinct/odd/exact-count; the gcd condition is
/// imposed by inclusion-exclusion over common divisors `d` of the parts,
/// restricted to odd `d` when only odd parts are allowed.
pub fn restricted_partitions(n_max: u64, constraint: PartitionConstraint) -> FunctionTable {
    let len = n_max as usize + 1;
    let rows = match constraint.parts {
        Some(r) => r as usize + 1,
        None => 1,
    };
    // counts[j][n]: partitions of n with exactly j parts; a single any-count row when unconstrained
    let mut counts = vec![vec![BigInt::zero(); len]; rows];
    counts[0][0] = BigInt::one();
    for part in 1..len {
        if constraint.odd_parts && part % 2 == 0 {
            continue;
        }
        if constraint.parts.is_none() {
            let row = &mut counts[0];
            if constraint.distinct {
                for n in (part..len).rev() {
                    let (lo, hi) = row.split_at_mut(n);
                    hi[0] += &lo[n - part];
                }
            } else {
                for n in part..len {
                    let (lo, hi) = row.split_at_mut(n);
                    hi[0] += &lo[n - part];
                }
            }
            continue;
        }
        if constraint.distinct {
            for j in (1..rows).rev() {
                let (lo, hi) = counts.split_at_mut(j);
                for n in part..len {
                    hi[0][n] += &lo[j - 1][n - part];
                }
            }
        } else {
            for j in 1..rows {
                let (lo, hi) = counts.split_at_mut(j);
                for n in part..len {
                    let add = &lo[j - 1][n - part];
                    if !add.is_zero() {
                        hi[0][n] += add;
                    }
                }
            }
        }
    }
    let base = counts.pop().expect("at least one row");
    if !constraint.coprime {
        return FunctionTable::new("restricted", base);
    }
    let mut out = vec![BigInt::zero(); len];
    out[0] = base[0].clone();
    for (n, slot) in out.iter_mut().enumerate().skip(1) {
        for d in arith::divisor_list(n as u64).expect("n >= 1") {
            if constraint.odd_parts && d % 2 == 0 {
                continue;
            }
            let mu = arith::mobius(d).expect("d >= 1");
            if mu != 0 {
                *slot += &base[n / d as usize] * mu;
            }
        }
    }
    FunctionTable::new("restricted", out)
}

/// `c(n) = 2^{n-1}`, or `c(n, r) = C(n-1, r-1)` when `r` is given.
pub fn compositions_closed(n: u64, r: Option<u64>) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::NonPositive {
            what: "n",
            value: 0,
        });
    }
    match r {
        None => Ok(BigInt::one() << (n - 1)),
        Some(0) => Err(Error::NonPositive {
            what: "part count r",
            value: 0,
        }),
        Some(r) => Ok(binom(n - 1, r - 1)),
    }
}

/// `c(0..=n_max)`, or `c(·, r)`, with 0 at index 0.
pub fn compositions_table(n_max: u64, r: Option<u64>) -> Result<FunctionTable> {
    if r == Some(0) {
        return Err(Error::NonPositive {
            what: "part count r",
            value: 0,
        });
    }
    let name = match r {
        None => "c".to_string(),
        Some(r) => format!("c_{r}"),
    };
    Ok(FunctionTable::positive(name, n_max, |n| {
        compositions_closed(n, r).expect("validated")
    }))
}

/// The "relatively prime" counterpart `g_ψ` of a family with `g(n) = Σ_{d|n} g_ψ(d)`.
pub fn relprime_table(g: &FunctionTable) -> FunctionTable {
    arith::mobius_invert(g).renamed(format!("{}_psi", g.name()))
}

/// An allowed set of composition parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PartSet {
    Squares,
    Triangulars,
    Explicit(BTreeSet<u64>),
}

impl PartSet {
    /// Panics if the list contains 0.
    pub fn explicit(parts: impl IntoIterator<Item = u64>) -> Self {
        let set: BTreeSet<u64> = parts.into_iter().collect();
        assert!(!set.contains(&0), "parts must be positive");
        PartSet::Explicit(set)
    }

    pub fn contains(&self, n: u64) -> bool {
        match self {
            PartSet::Squares => n >= 1 && numbers::delta_s(n) == 1,
            PartSet::Triangulars => n >= 1 && numbers::delta_t(n) == 1,
            PartSet::Explicit(set) => set.contains(&n),
        }
    }

    /// Members `≤ limit`, ascending.
    pub fn members(&self, limit: u64) -> Vec<u64> {
        match self {
            PartSet::Explicit(set) => set.range(..=limit).copied().collect(),
            _ => (1..=limit).filter(|&n| self.contains(n)).collect(),
        }
    }
}

/// `c_A(0..=n_max)`: compositions with every part in `parts`.
pub fn comp_with_parts(parts: &PartSet, n_max: u64) -> FunctionTable {
    let members = parts.members(n_max);
    let mut c = vec![BigInt::zero(); n_max as usize + 1];
    c[0] = BigInt::one();
    for n in 1..c.len() {
        let mut acc = BigInt::zero();
        for &a in members.iter().take_while(|&&a| a as usize <= n) {
            acc += &c[n - a as usize];
        }
        c[n] = acc;
    }
    let name = match parts {
        PartSet::Squares => "s",
        PartSet::Triangulars => "t",
        PartSet::Explicit(_) => "c_A",
    };
    FunctionTable::new(name, c)
}

/// Which set the subsets are drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubsetGround {
    /// `{1, ..., n}`.
    Interval,
    /// The positive divisors of `n`.
    Divisors,
}

fn ground_set(n: u64, over: SubsetGround) -> Result<Vec<u64>> {
    match over {
        SubsetGround::Interval => Ok((1..=n).collect()),
        SubsetGround::Divisors => arith::divisor_list(n),
    }
}

/// `Φ`, `Φ_r`, `Φ^τ` or `Φ^τ_r` on `1..=n_max` (index 0 holds 0).
///
/// Inverts `2^n - 1`, `C(n, r)`, `2^{τ(n)} - 1` or `C(τ(n), r)`.
pub fn nathanson_tables(n_max: u64, r: Option<u64>, over: SubsetGround) -> FunctionTable {
    let size = |n: u64| match over {
        SubsetGround::Interval => n,
        SubsetGround::Divisors => arith::tau(n).expect("n >= 1"),
    };
    let g = FunctionTable::positive("g", n_max, |n| match r {
        None => (BigInt::one() << size(n)) - 1,
        Some(r) => binom(size(n), r),
    });
    let name = match (over, r) {
        (SubsetGround::Interval, None) => "Phi".to_string(),
        (SubsetGround::Interval, Some(r)) => format!("Phi_{r}"),
        (SubsetGround::Divisors, None) => "Phi_tau".to_string(),
        (SubsetGround::Divisors, Some(r)) => format!("Phi_tau_{r}"),
    };
    arith::mobius_invert(&g).renamed(name)
}

/// Counts of subsets whose gcd is coprime to `n`, indexed by subset size.
///
/// Index 0 (the empty subset) is always 0.
pub fn subset_gcd_counts(n: u64, over: SubsetGround) -> Result<Vec<u64>> {
    let ground = ground_set(n, over)?;
    let size = ground.len() as u64;
    if size > SUBSET_GUARD {
        return Err(Error::OverGuard {
            what: "ground set size",
            value: size,
            limit: SUBSET_GUARD,
        });
    }
    let mut counts = vec![0u64; ground.len() + 1];
    let mut gcds = vec![0u64; 1 << ground.len()];
    for mask in 1usize..gcds.len() {
        let low = mask.trailing_zeros() as usize;
        let g = gcd(gcds[mask & (mask - 1)], ground[low]);
        gcds[mask] = g;
        if gcd(g, n) == 1 {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(counts)
}

/// Number of nonempty subsets (or subsets of size `r`) whose gcd is coprime to `n`.
pub fn subset_gcd_oracle(n: u64, r: Option<u64>, over: SubsetGround) -> Result<u64> {
    if n == 0 {
        return Err(Error::NonPositive {
            what: "n",
            value: 0,
        });
    }
    let counts = subset_gcd_counts(n, over)?;
    Ok(match r {
        None => counts.iter().sum(),
        Some(r) => counts.get(r as usize).copied().unwrap_or(0),
    })
}
