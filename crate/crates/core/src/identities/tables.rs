//! Lazily built ingredient tables shared by catalog evaluations.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{self, EtaKind, FunctionTable, SigmaKind};
use crate::combinatorics::{self, PartSet, SubsetGround};
use crate::numbers::{self, OmegaTable};

/// Names every table an identity may ask for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum TableKey {
    P,
    Q,
    Qq,
    PPsi,
    QPsi,
    Sigma(SigmaKind),
    Phi,
    Tau,
    Liouville,
    Mobius,
    Eta(EtaKind),
    Compositions,
    CompositionsR(u64),
    CPsi,
    CPsiR(u64),
    SquareCompositions,
    TriangularCompositions,
    R(u64),
    Nathanson(Option<u64>, SubsetGround),
    /// `g(n) = n`.
    Identity,
    /// `f(n) = 1`.
    Ones,
    /// `[n = 1]`.
    Unit,
    DeltaS,
    /// `2^n - 1`.
    SubsetsAll,
    /// `C(n, r)`.
    SubsetsR(u64),
    /// `2^{τ(n)} - 1`.
    DivisorSubsetsAll,
    /// `C(τ(n), r)`.
    DivisorSubsetsR(u64),
    /// Fixed pseudo-random `f` for the generic bridge entry.
    GenericF,
    /// Divisor sums of [`TableKey::GenericF`] by direct divisor enumeration.
    GenericG,
    /// `r_2(n) / 4`.
    R2Quarter,
    /// `r_4(n) / 8`.
    R4Eighth,
    /// `(-1)^n r_8(n) / 16`.
    R8Signed,
    /// `(-1)^m m³`.
    CubeSigned,
}

/// Fixed integer weights in `[-1008, 1008]`.
pub(crate) fn generic_weight(m: u64) -> i64 {
    ((m.wrapping_mul(2_654_435_761)) % 2017) as i64 - 1008
}

fn exact_div(value: &BigInt, divisor: i64) -> BigInt {
    let (q, r) = value.div_rem(&BigInt::from(divisor));
    assert!(r.is_zero(), "{value} is not divisible by {divisor}");
    q
}

pub(crate) struct Ingredients {
    n_max: u64,
    omega: OmegaTable,
    cache: Mutex<HashMap<TableKey, Arc<FunctionTable>>>,
}

impl Ingredients {
    pub(crate) fn new(n_max: u64) -> Self {
        Ingredients {
            n_max,
            omega: OmegaTable::new(n_max),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub(crate) fn n_max(&self) -> u64 {
        self.n_max
    }

    pub(crate) fn omega(&self) -> &OmegaTable {
        &self.omega
    }

    pub(crate) fn table(&self, key: TableKey) -> Arc<FunctionTable> {
        if let Some(t) = self.cache.lock().expect("cache poisoned").get(&key) {
            return Arc::clone(t);
        }
        let built = Arc::new(self.build(key));
        let mut cache = self.cache.lock().expect("cache poisoned");
        Arc::clone(cache.entry(key).or_insert(built))
    }

    fn build(&self, key: TableKey) -> FunctionTable {
        let n = self.n_max;
        match key {
            TableKey::P => combinatorics::partition_tables(n).p,
            TableKey::Q => combinatorics::partition_tables(n).q,
            TableKey::Qq => combinatorics::partition_tables(n).qq,
            TableKey::PPsi => combinatorics::relprime_table(&self.table(TableKey::P)),
            TableKey::QPsi => combinatorics::relprime_table(&self.table(TableKey::Q)),
            TableKey::Sigma(kind) => arith::sigma_table(kind, n),
            TableKey::Phi => arith::phi_table(n),
            TableKey::Tau => arith::tau_table(n),
            TableKey::Liouville => arith::liouville_table(n),
            TableKey::Mobius => arith::mobius_table(n),
            TableKey::Eta(which) => arith::eta_table(which, n),
            TableKey::Compositions => {
                combinatorics::compositions_table(n, None).expect("no part count")
            }
            TableKey::CompositionsR(r) => {
                combinatorics::compositions_table(n, Some(r)).expect("r validated by caller")
            }
            TableKey::CPsi => combinatorics::relprime_table(&self.table(TableKey::Compositions)),
            TableKey::CPsiR(r) => {
                combinatorics::relprime_table(&self.table(TableKey::CompositionsR(r)))
            }
            TableKey::SquareCompositions => combinatorics::comp_with_parts(&PartSet::Squares, n),
            TableKey::TriangularCompositions => {
                combinatorics::comp_with_parts(&PartSet::Triangulars, n)
            }
            TableKey::R(k) => arith::r_table(k, n).expect("k validated by caller"),
            TableKey::Nathanson(r, over) => combinatorics::nathanson_tables(n, r, over),
            TableKey::Identity => FunctionTable::positive("n", n, |m| m),
            TableKey::Ones => FunctionTable::positive("1", n, |_| 1),
            TableKey::Unit => FunctionTable::positive("unit", n, |m| (m == 1) as i64),
            TableKey::DeltaS => FunctionTable::positive("delta_s", n, numbers::delta_s),
            TableKey::SubsetsAll => {
                FunctionTable::positive("2^n-1", n, |m| (BigInt::one() << m) - 1)
            }
            TableKey::SubsetsR(r) => {
                FunctionTable::positive(format!("C(n,{r})"), n, |m| combinatorics::binom(m, r))
            }
            TableKey::DivisorSubsetsAll => FunctionTable::positive("2^tau-1", n, |m| {
                (BigInt::one() << arith::tau(m).expect("m >= 1")) - 1
            }),
            TableKey::DivisorSubsetsR(r) => {
                FunctionTable::positive(format!("C(tau,{r})"), n, |m| {
                    combinatorics::binom(arith::tau(m).expect("m >= 1"), r)
                })
            }
            TableKey::GenericF => FunctionTable::positive("f", n, generic_weight),
            TableKey::GenericG => {
                let f = self.table(TableKey::GenericF);
                FunctionTable::positive("g", n, |m| {
                    arith::divisor_sum(&f, m).expect("table covers m")
                })
            }
            TableKey::R2Quarter => {
                let r = self.table(TableKey::R(2));
                FunctionTable::positive("r_2/4", n, |m| exact_div(&r.values()[m as usize], 4))
            }
            TableKey::R4Eighth => {
                let r = self.table(TableKey::R(4));
                FunctionTable::positive("r_4/8", n, |m| exact_div(&r.values()[m as usize], 8))
            }
            TableKey::R8Signed => {
                let r = self.table(TableKey::R(8));
                FunctionTable::positive("(-1)^n r_8/16", n, |m| {
                    let v = exact_div(&r.values()[m as usize], 16);
                    if m % 2 == 0 {
                        v
                    } else {
                        -v
                    }
                })
            }
            TableKey::CubeSigned => FunctionTable::positive("(-1)^m m^3", n, |m| {
                let cube = BigInt::from(m).pow(3);
                if m % 2 == 0 {
                    cube
                } else {
                    -cube
                }
            }),
        }
    }
}
