//! Classical arithmetical functions by elementary means.
//!
//! Everything here is an oracle: trial division for divisors and
//! factorizations, sparse convolution for sums of squares. The recurrence
//! solvers in [`crate::identities`] are checked against these tables.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numbers;

/// Exact values `f(0..=N)` of one arithmetical function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionTable {
    name: String,
    values: Vec<BigInt>,
}

impl FunctionTable {
    /// Panics when `values` is empty.
    pub fn new(name: impl Into<String>, values: Vec<BigInt>) -> Self {
        assert!(!values.is_empty(), "a table covers at least index 0");
        FunctionTable {
            name: name.into(),
            values,
        }
    }

    /// Tabulates `f` on `0..=n_max`.
    pub fn from_fn<F, V>(name: impl Into<String>, n_max: u64, mut f: F) -> Self
    where
        F: FnMut(u64) -> V,
        V: Into<BigInt>,
    {
        FunctionTable::new(name, (0..=n_max).map(|n| f(n).into()).collect())
    }

    /// Tabulates an arithmetical function defined for `n ≥ 1`, storing 0 at index 0.
    pub fn positive<F, V>(name: impl Into<String>, n_max: u64, mut f: F) -> Self
    where
        F: FnMut(u64) -> V,
        V: Into<BigInt>,
    {
        FunctionTable::from_fn(name, n_max, |n| {
            if n == 0 {
                BigInt::zero()
            } else {
                f(n).into()
            }
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn max_n(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    pub fn get(&self, n: u64) -> Result<&BigInt> {
        self.values.get(n as usize).ok_or_else(|| self.too_short(n))
    }

    pub(crate) fn too_short(&self, needed: u64) -> Error {
        Error::TableTooShort {
            name: self.name.clone(),
            needed,
            max_n: self.max_n(),
        }
    }

    pub(crate) fn require(&self, n: u64) -> Result<()> {
        if n > self.max_n() {
            Err(self.too_short(n))
        } else {
            Ok(())
        }
    }

    /// Same values on `0..=n_max`; errors if the table is shorter.
    pub fn truncated(&self, n_max: u64) -> Result<FunctionTable> {
        self.require(n_max)?;
        Ok(FunctionTable::new(
            self.name.clone(),
            self.values[..=n_max as usize].to_vec(),
        ))
    }

    pub fn map<F>(&self, name: impl Into<String>, mut f: F) -> FunctionTable
    where
        F: FnMut(u64, &BigInt) -> BigInt,
    {
        FunctionTable::new(
            name,
            self.values
                .iter()
                .enumerate()
                .map(|(n, v)| f(n as u64, v))
                .collect(),
        )
    }
}

fn require_positive(what: &'static str, n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::NonPositive { what, value: 0 })
    } else {
        Ok(())
    }
}

/// All positive divisors of `n`, ascending.
pub fn divisor_list(n: u64) -> Result<Vec<u64>> {
    require_positive("n", n)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Prime factorization `[(p, e), ...]` by trial division; empty for `n = 1`.
pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>> {
    require_positive("n", n)?;
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SigmaKind {
    /// `σ(n)`: all divisors.
    All,
    /// `σ_o(n)`: odd divisors.
    Odd,
    /// `σ_e(n)`: even divisors.
    Even,
    /// `σ_s(n) = Σ_{d|n} (-1)^{d-1} n/d`.
    Alternating,
}

impl SigmaKind {
    pub const ALL: [SigmaKind; 4] = [
        SigmaKind::All,
        SigmaKind::Odd,
        SigmaKind::Even,
        SigmaKind::Alternating,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SigmaKind::All => "sigma",
            SigmaKind::Odd => "sigma_odd",
            SigmaKind::Even => "sigma_even",
            SigmaKind::Alternating => "sigma_alt",
        }
    }
}

impl fmt::Display for SigmaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SigmaKind::All => "all",
            SigmaKind::Odd => "odd",
            SigmaKind::Even => "even",
            SigmaKind::Alternating => "alternating",
        })
    }
}

impl FromStr for SigmaKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(SigmaKind::All),
            "odd" => Ok(SigmaKind::Odd),
            "even" => Ok(SigmaKind::Even),
            "alternating" | "alt" => Ok(SigmaKind::Alternating),
            _ => Err(Error::InvalidSelector {
                what: "sigma kind",
                value: s.to_string(),
            }),
        }
    }
}

pub fn sigma_kind(n: u64, kind: SigmaKind) -> Result<i64> {
    let divisors = divisor_list(n)?;
    let n = n as i64;
    let sum = divisors
        .into_iter()
        .map(|d| d as i64)
        .map(|d| match kind {
            SigmaKind::All => d,
            SigmaKind::Odd => d * (d % 2),
            SigmaKind::Even => d * (1 - d % 2),
            SigmaKind::Alternating => {
                if d % 2 == 1 {
                    n / d
                } else {
                    -(n / d)
                }
            }
        })
        .sum();
    Ok(sum)
}

/// Euler's totient.
pub fn phi(n: u64) -> Result<u64> {
    Ok(factorize(n)?
        .into_iter()
        .map(|(p, e)| (p - 1) * p.pow(e - 1))
        .product())
}

/// Number of divisors.
pub fn tau(n: u64) -> Result<u64> {
    Ok(factorize(n)?
        .into_iter()
        .map(|(_, e)| e as u64 + 1)
        .product())
}

/// `(-1)^Ω(n)`, with `Ω` counting prime factors with multiplicity.
pub fn liouville(n: u64) -> Result<i64> {
    let omega_big: u32 = factorize(n)?.into_iter().map(|(_, e)| e).sum();
    Ok(if omega_big % 2 == 0 { 1 } else { -1 })
}

pub fn mobius(n: u64) -> Result<i64> {
    let factors = factorize(n)?;
    if factors.iter().any(|&(_, e)| e > 1) {
        return Ok(0);
    }
    Ok(if factors.len() % 2 == 0 { 1 } else { -1 })
}

/// The two weights in Jacobi's two- and four-square formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EtaKind {
    /// `η_1(n)`: 0 for even `n`, `(-1)^{(n-1)/2}` for odd `n`.
    One,
    /// `η_2(n)`: 0 when `4 | n`, `n` otherwise.
    Two,
}

impl TryFrom<u8> for EtaKind {
    type Error = Error;

    fn try_from(which: u8) -> Result<Self> {
        match which {
            1 => Ok(EtaKind::One),
            2 => Ok(EtaKind::Two),
            _ => Err(Error::InvalidSelector {
                what: "eta selector",
                value: which.to_string(),
            }),
        }
    }
}

pub fn eta(n: u64, which: EtaKind) -> Result<i64> {
    require_positive("n", n)?;
    Ok(match which {
        EtaKind::One if n % 2 == 0 => 0,
        EtaKind::One if (n - 1) / 2 % 2 == 0 => 1,
        EtaKind::One => -1,
        EtaKind::Two if n % 4 == 0 => 0,
        EtaKind::Two => n as i64,
    })
}

/// `Σ_{d|n} f(d)`.
pub fn divisor_sum(f: &FunctionTable, n: u64) -> Result<BigInt> {
    f.require(n)?;
    let mut acc = BigInt::zero();
    for d in divisor_list(n)? {
        acc += &f.values[d as usize];
    }
    Ok(acc)
}

/// The `f` with `g(n) = Σ_{d|n} f(d)` on `1..=N`; index 0 of the result is 0.
///
/// Walks `d` upward: once `f(d)` is final it is subtracted from every proper
/// multiple, which leaves `f(n) = Σ_{d|n} μ(n/d) g(d)`.
pub fn mobius_invert(g: &FunctionTable) -> FunctionTable {
    let n_max = g.values.len();
    let mut f = g.values.clone();
    f[0] = BigInt::zero();
    for d in 1..n_max {
        if f[d].is_zero() {
            continue;
        }
        let fd = f[d].clone();
        for m in (2 * d..n_max).step_by(d) {
            f[m] -= &fd;
        }
    }
    FunctionTable::new(format!("inv({})", g.name), f)
}

/// `r_k(0..=n_max)`: ordered, signed representations as a sum of `k` squares.
///
/// Computed as the `k`-th power of `1 + 2Σ_{j≥1} q^{j²}`, one sparse
/// convolution per factor.
pub fn r_table(k: u64, n_max: u64) -> Result<FunctionTable> {
    require_positive("k", k)?;
    let len = n_max as usize + 1;
    let mut acc = vec![BigInt::zero(); len];
    acc[0] = BigInt::one();
    let two = BigInt::from(2);
    for _ in 0..k {
        let mut next = acc.clone();
        for (square, _) in numbers::squares(n_max) {
            let s = square as usize;
            for n in s..len {
                if !acc[n - s].is_zero() {
                    next[n] += &acc[n - s] * &two;
                }
            }
        }
        acc = next;
    }
    Ok(FunctionTable::new(format!("r_{k}"), acc))
}

/// `r_k(n)` for `k ∈ {2, 4, 8}` by Jacobi's divisor-sum formulas.
pub fn r_jacobi(n: u64, k: u64) -> Result<BigInt> {
    require_positive("n", n)?;
    let divisors = divisor_list(n)?;
    let value = match k {
        2 => {
            let s: i64 = divisors
                .iter()
                .map(|&d| eta(d, EtaKind::One))
                .sum::<Result<i64>>()?;
            BigInt::from(4 * s)
        }
        4 => {
            let s: i64 = divisors
                .iter()
                .map(|&d| eta(d, EtaKind::Two))
                .sum::<Result<i64>>()?;
            BigInt::from(8 * s)
        }
        8 => {
            let mut s = BigInt::zero();
            for d in divisors {
                let cube = BigInt::from(d).pow(3);
                if (n + d) % 2 == 0 {
                    s += cube;
                } else {
                    s -= cube;
                }
            }
            s * 16
        }
        _ => {
            return Err(Error::InvalidSelector {
                what: "Jacobi square count k (expected 2, 4 or 8)",
                value: k.to_string(),
            })
        }
    };
    Ok(value)
}

pub fn sigma_table(kind: SigmaKind, n_max: u64) -> FunctionTable {
    FunctionTable::positive(kind.label(), n_max, |n| {
        sigma_kind(n, kind).expect("n >= 1")
    })
}

pub fn phi_table(n_max: u64) -> FunctionTable {
    FunctionTable::positive("phi", n_max, |n| phi(n).expect("n >= 1"))
}

pub fn tau_table(n_max: u64) -> FunctionTable {
    FunctionTable::positive("tau", n_max, |n| tau(n).expect("n >= 1"))
}

pub fn liouville_table(n_max: u64) -> FunctionTable {
    FunctionTable::positive("lambda", n_max, |n| liouville(n).expect("n >= 1"))
}

pub fn mobius_table(n_max: u64) -> FunctionTable {
    FunctionTable::positive("mu", n_max, |n| mobius(n).expect("n >= 1"))
}

pub fn eta_table(which: EtaKind, n_max: u64) -> FunctionTable {
    let name = match which {
        EtaKind::One => "eta_1",
        EtaKind::Two => "eta_2",
    };
    FunctionTable::positive(name, n_max, |n| eta(n, which).expect("n >= 1"))
}
