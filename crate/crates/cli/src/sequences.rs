//! Published sequence names and the two ways of computing each one.

use std::fmt;
use std::str::FromStr;

use eulerec::arith::{self, SigmaKind};
use eulerec::combinatorics::{self, PartSet, SubsetGround};
use eulerec::identities::{self, RecurrenceTarget};
use eulerec::{numbers, FunctionTable};
use num_bigint::BigInt;

pub const NAMES: [&str; 27] = [
    "p",
    "q",
    "qq",
    "p_psi",
    "q_psi",
    "c",
    "c_r",
    "c_psi",
    "c_psi_r",
    "s",
    "t",
    "sigma",
    "sigma_odd",
    "sigma_even",
    "sigma_alt",
    "phi",
    "tau",
    "lambda",
    "mu",
    "omega",
    "delta_s",
    "delta_t",
    "r_k",
    "Phi",
    "Phi_r",
    "Phi_tau",
    "Phi_tau_r",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sequence {
    P,
    Q,
    Qq,
    PPsi,
    QPsi,
    Compositions {
        exact_parts: bool,
    },
    RelPrimeCompositions {
        exact_parts: bool,
    },
    SquareCompositions,
    TriangularCompositions,
    Sigma(SigmaKind),
    Totient,
    DivisorCount,
    Liouville,
    Mobius,
    Omega,
    DeltaS,
    DeltaT,
    SumsOfSquares,
    Nathanson {
        exact_size: bool,
        over: SubsetGround,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Param {
    K,
    R,
}

impl Param {
    pub fn flag(self) -> &'static str {
        match self {
            Param::K => "k",
            Param::R => "r",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownSequence(pub String);

impl fmt::Display for UnknownSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown sequence '{}'; expected one of: {}",
            self.0,
            NAMES.join(", ")
        )
    }
}

impl std::error::Error for UnknownSequence {}

impl FromStr for Sequence {
    type Err = UnknownSequence;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use Sequence::*;
        Ok(match s {
            "p" => P,
            "q" => Q,
            "qq" => Qq,
            "p_psi" => PPsi,
            "q_psi" => QPsi,
            "c" => Compositions { exact_parts: false },
            "c_r" => Compositions { exact_parts: true },
            "c_psi" => RelPrimeCompositions { exact_parts: false },
            "c_psi_r" => RelPrimeCompositions { exact_parts: true },
            "s" => SquareCompositions,
            "t" => TriangularCompositions,
            "sigma" => Sigma(SigmaKind::All),
            "sigma_odd" => Sigma(SigmaKind::Odd),
            "sigma_even" => Sigma(SigmaKind::Even),
            "sigma_alt" => Sigma(SigmaKind::Alternating),
            "phi" => Totient,
            "tau" => DivisorCount,
            "lambda" => Liouville,
            "mu" => Mobius,
            "omega" => Omega,
            "delta_s" => DeltaS,
            "delta_t" => DeltaT,
            "r_k" => SumsOfSquares,
            "Phi" => Nathanson {
                exact_size: false,
                over: SubsetGround::Interval,
            },
            "Phi_r" => Nathanson {
                exact_size: true,
                over: SubsetGround::Interval,
            },
            "Phi_tau" => Nathanson {
                exact_size: false,
                over: SubsetGround::Divisors,
            },
            "Phi_tau_r" => Nathanson {
                exact_size: true,
                over: SubsetGround::Divisors,
            },
            _ => return Err(UnknownSequence(s.to_string())),
        })
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Sequence::*;
        let name = match self {
            P => "p",
            Q => "q",
            Qq => "qq",
            PPsi => "p_psi",
            QPsi => "q_psi",
            Compositions { exact_parts: false } => "c",
            Compositions { exact_parts: true } => "c_r",
            RelPrimeCompositions { exact_parts: false } => "c_psi",
            RelPrimeCompositions { exact_parts: true } => "c_psi_r",
            SquareCompositions => "s",
            TriangularCompositions => "t",
            Sigma(kind) => kind.label(),
            Totient => "phi",
            DivisorCount => "tau",
            Liouville => "lambda",
            Mobius => "mu",
            Omega => "omega",
            DeltaS => "delta_s",
            DeltaT => "delta_t",
            SumsOfSquares => "r_k",
            Nathanson { exact_size, over } => match (exact_size, over) {
                (false, SubsetGround::Interval) => "Phi",
                (true, SubsetGround::Interval) => "Phi_r",
                (false, SubsetGround::Divisors) => "Phi_tau",
                (true, SubsetGround::Divisors) => "Phi_tau_r",
            },
        };
        f.write_str(name)
    }
}

/// A sequence together with its `k` or `r` when it takes one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Resolved {
    pub seq: Sequence,
    pub param: Option<u64>,
}

impl Sequence {
    pub fn param(self) -> Option<Param> {
        use Sequence::*;
        match self {
            SumsOfSquares => Some(Param::K),
            Compositions { exact_parts: true }
            | RelPrimeCompositions { exact_parts: true }
            | Nathanson {
                exact_size: true, ..
            } => Some(Param::R),
            _ => None,
        }
    }

    /// Attaches the required parameter, or reports which flag is missing or zero.
    pub fn resolve(self, k: Option<u64>, r: Option<u64>) -> Result<Resolved, String> {
        let param = match self.param() {
            None => None,
            Some(which) => {
                let value = match which {
                    Param::K => k,
                    Param::R => r,
                };
                match value {
                    None => return Err(format!("sequence '{self}' requires --{}", which.flag())),
                    Some(0) => return Err(format!("--{} must be at least 1", which.flag())),
                    Some(v) => Some(v),
                }
            }
        };
        Ok(Resolved { seq: self, param })
    }

    /// First `n` printed; arithmetic functions start at 1.
    pub fn first_n(self) -> u64 {
        use Sequence::*;
        match self {
            P
            | Q
            | Qq
            | SquareCompositions
            | TriangularCompositions
            | Omega
            | DeltaS
            | DeltaT
            | SumsOfSquares => 0,
            _ => 1,
        }
    }
}

impl Resolved {
    pub fn key(&self) -> String {
        match (self.seq.param(), self.param) {
            (Some(which), Some(v)) => format!("{}[{}={v}]", self.seq, which.flag()),
            _ => self.seq.to_string(),
        }
    }

    fn p(&self) -> u64 {
        self.param
            .expect("resolved sequences carry their parameter")
    }

    /// Values on `0..=n_max` from the enumeration and closed-form oracles.
    pub fn oracle(&self, n_max: u64) -> Vec<BigInt> {
        use Sequence::*;
        let table = match self.seq {
            P => combinatorics::partition_tables(n_max).p,
            Q => combinatorics::partition_tables(n_max).q,
            Qq => combinatorics::partition_tables(n_max).qq,
            PPsi => combinatorics::relprime_table(&combinatorics::partition_tables(n_max).p),
            QPsi => combinatorics::relprime_table(&combinatorics::partition_tables(n_max).q),
            Compositions { .. } => self.compositions(n_max),
            RelPrimeCompositions { .. } => combinatorics::relprime_table(&self.compositions(n_max)),
            SquareCompositions => combinatorics::comp_with_parts(&PartSet::Squares, n_max),
            TriangularCompositions => combinatorics::comp_with_parts(&PartSet::Triangulars, n_max),
            Sigma(kind) => arith::sigma_table(kind, n_max),
            Totient => arith::phi_table(n_max),
            DivisorCount => arith::tau_table(n_max),
            Liouville => arith::liouville_table(n_max),
            Mobius => arith::mobius_table(n_max),
            Omega => FunctionTable::from_fn("omega", n_max, |n| numbers::omega(n as i64)),
            DeltaS => FunctionTable::from_fn("delta_s", n_max, numbers::delta_s),
            DeltaT => FunctionTable::from_fn("delta_t", n_max, numbers::delta_t),
            SumsOfSquares => arith::r_table(self.p(), n_max).expect("k >= 1"),
            Nathanson { exact_size, over } => {
                combinatorics::nathanson_tables(n_max, exact_size.then(|| self.p()), over)
            }
        };
        table.values().to_vec()
    }

    fn compositions(&self, n_max: u64) -> FunctionTable {
        let r = match self.seq {
            Sequence::Compositions { exact_parts: true }
            | Sequence::RelPrimeCompositions { exact_parts: true } => Some(self.p()),
            _ => None,
        };
        combinatorics::compositions_table(n_max, r).expect("r >= 1")
    }

    /// Values on `0..=n_max` from a sparse recurrence or the divisor-sum bridge,
    /// or `None` when the sequence has no such path.
    pub fn recurrence(&self, n_max: u64) -> Option<Vec<BigInt>> {
        use Sequence::*;
        let solve =
            |target| identities::solve_via_recurrence(target, n_max).expect("parameters validated");
        let preimage = |name: &str, g: fn(u64, u64) -> BigInt, param: u64| {
            let g = FunctionTable::positive(name, n_max, |n| g(n, param));
            identities::solve_divisor_preimage(&g)
        };
        let table = match self.seq {
            P => solve(RecurrenceTarget::Partitions),
            Q => solve(RecurrenceTarget::DistinctPartitions),
            Sigma(SigmaKind::All) => solve(RecurrenceTarget::DivisorSum),
            SumsOfSquares => solve(RecurrenceTarget::SumsOfSquares(self.p())),
            PPsi => identities::solve_divisor_preimage(&solve(RecurrenceTarget::Partitions)),
            QPsi => {
                identities::solve_divisor_preimage(&solve(RecurrenceTarget::DistinctPartitions))
            }
            DivisorCount => {
                identities::solve_divisor_sum(&FunctionTable::positive("1", n_max, |_| 1))
            }
            Totient => preimage("n", |n, _| BigInt::from(n), 0),
            Liouville => preimage("delta_s", |n, _| BigInt::from(numbers::delta_s(n)), 0),
            Mobius => preimage("unit", |n, _| BigInt::from((n == 1) as u8), 0),
            RelPrimeCompositions { exact_parts } => {
                let r = if exact_parts { self.p() } else { 0 };
                preimage("c", closed_compositions, r)
            }
            Nathanson { exact_size, over } => {
                let r = if exact_size { self.p() } else { 0 };
                match over {
                    SubsetGround::Interval => preimage("subsets", subsets_of_interval, r),
                    SubsetGround::Divisors => preimage("subsets", subsets_of_divisors, r),
                }
            }
            _ => return None,
        };
        Some(table.values().to_vec())
    }

    pub fn recurrence_target(&self) -> Option<RecurrenceTarget> {
        match self.seq {
            Sequence::P => Some(RecurrenceTarget::Partitions),
            Sequence::Q => Some(RecurrenceTarget::DistinctPartitions),
            Sequence::Sigma(SigmaKind::All) => Some(RecurrenceTarget::DivisorSum),
            Sequence::SumsOfSquares => Some(RecurrenceTarget::SumsOfSquares(self.p())),
            _ => None,
        }
    }
}

/// `2^{n-1}`, or `C(n-1, r-1)` when `r > 0`.
fn closed_compositions(n: u64, r: u64) -> BigInt {
    combinatorics::compositions_closed(n, (r > 0).then_some(r)).expect("n >= 1")
}

/// `2^n - 1`, or `C(n, r)` when `r > 0`.
fn subsets_of_interval(n: u64, r: u64) -> BigInt {
    if r == 0 {
        (BigInt::from(1) << n) - 1
    } else {
        combinatorics::binom(n, r)
    }
}

/// `2^{τ(n)} - 1`, or `C(τ(n), r)` when `r > 0`.
fn subsets_of_divisors(n: u64, r: u64) -> BigInt {
    subsets_of_interval(arith::tau(n).expect("n >= 1"), r)
}
