//! Identity keys and their residual evaluators.

use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::tables::{Ingredients, TableKey};
use super::theorem1::{lhs_with, rhs_with};
use crate::arith::{EtaKind, SigmaKind};
use crate::combinatorics::SubsetGround;
use crate::error::{Error, Result};
use crate::numbers::{self, squares};
use crate::series::{product_expand, ProductFactor, ProductSpec, Series};

/// The four series-level product identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductIdentity {
    /// `∏(1 - q^n) = Σ ω(m) q^m`.
    Pentagonal,
    /// `∏(1 - q^{2m}) / ∏(1 - q^{2m-1}) = Σ q^{n(n+1)/2}`.
    GaussTriangular,
    /// `∏ (1 - q^m)/(1 + q^m) = 1 + 2Σ (-1)^m δ_s(m) q^m`.
    GaussSquare,
    /// `∏(1 - q^{2n})(1 + q^{2n-1})² = 1 + 2Σ δ_s(m) q^m`, and its `q -> -q` form.
    JacobiTriple,
}

impl ProductIdentity {
    pub const ALL: [ProductIdentity; 4] = [
        ProductIdentity::Pentagonal,
        ProductIdentity::GaussTriangular,
        ProductIdentity::GaussSquare,
        ProductIdentity::JacobiTriple,
    ];

    pub fn key(self) -> &'static str {
        match self {
            ProductIdentity::Pentagonal => "pent-product",
            ProductIdentity::GaussTriangular => "gauss-tri",
            ProductIdentity::GaussSquare => "gauss-sq",
            ProductIdentity::JacobiTriple => "jacobi-triple",
        }
    }

    /// `(product side, sum side)` pairs expanded to `order`.
    pub fn sides(self, order: usize) -> Vec<(Series, Series)> {
        let squares_series = |alternating: bool| {
            Series::from_fn(order, |m| {
                let m = m as u64;
                if m == 0 {
                    return BigInt::from(1);
                }
                let sign = if alternating && m % 2 == 1 { -2 } else { 2 };
                BigInt::from(sign * numbers::delta_s(m))
            })
        };
        match self {
            ProductIdentity::Pentagonal => vec![(
                product_expand(&ProductSpec::euler(), order),
                Series::from_fn(order, |m| numbers::omega(m as i64).into()),
            )],
            ProductIdentity::GaussTriangular => {
                let spec = ProductSpec::new()
                    .with(ProductFactor::minus_multiples(2))
                    .with(ProductFactor::minus_odd().pow(-1));
                vec![(
                    product_expand(&spec, order),
                    Series::from_fn(order, |m| numbers::delta_t(m as u64).into()),
                )]
            }
            ProductIdentity::GaussSquare => {
                let spec = ProductSpec::new()
                    .with(ProductFactor::minus_multiples(1))
                    .with(ProductFactor::plus_all().pow(-1));
                vec![(product_expand(&spec, order), squares_series(true))]
            }
            ProductIdentity::JacobiTriple => {
                let spec = ProductSpec::new()
                    .with(ProductFactor::minus_multiples(2))
                    .with(ProductFactor::plus_odd().pow(2));
                let flipped = ProductSpec::new()
                    .with(ProductFactor::minus_multiples(1))
                    .with(ProductFactor::minus_odd());
                vec![
                    (product_expand(&spec, order), squares_series(false)),
                    (product_expand(&flipped, order), squares_series(true)),
                ]
            }
        }
    }
}

/// A catalog entry. Parametrized entries carry their `r` or `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityId {
    Product(ProductIdentity),
    /// `Σ ω(k) p(n-k) = 0`.
    PartitionRecurrence,
    /// `Σ ω(k) q(n-k) = ω'(n)`.
    DistinctPartitionRecurrence,
    /// `Σ σ(k) ω(n-k) = -n ω(n)`.
    DivisorSumRecurrence,
    /// The generic divisor-sum bridge for a fixed pseudo-random `f`.
    GenericBridge,
    Totient,
    DivisorCount,
    Liouville,
    Mobius,
    RelPrimePartitions,
    RelPrimeDistinctPartitions,
    RelPrimeCompositions,
    RelPrimeCompositionsR(u64),
    TwoSquares,
    FourSquares,
    EightSquares,
    Subsets,
    SubsetsR(u64),
    DivisorSubsets,
    DivisorSubsetsR(u64),
    Thm2a,
    Thm2b,
    Thm3a,
    Thm3b,
    Thm3c,
    Thm4a,
    /// `literal` evaluates the printed `ω'(n)` instead of `ω'(n-k)`.
    Thm4b {
        literal: bool,
    },
    Thm5a,
    Thm5b,
    Thm5c,
    SquaresRecurrence(u64),
    SquaresCongruence(u64),
}

/// Parameters used when a key needs them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub r: Option<u64>,
    pub k: Option<u64>,
    pub literal: bool,
}

pub const DEFAULT_R: u64 = 2;
pub const DEFAULT_K: u64 = 3;

pub const KEYS: [&str; 35] = [
    "pent-product",
    "gauss-tri",
    "gauss-sq",
    "jacobi-triple",
    "eq3-p",
    "eq4-q",
    "eq5-sigma",
    "thm1-generic",
    "thm-phi",
    "thm-tau",
    "thm-lambda",
    "thm-mobius",
    "thm-ppsi",
    "thm-qpsi",
    "thm-cpsi",
    "thm-cpsi-r",
    "thm-r2",
    "thm-r4",
    "thm-r8",
    "thm-Phi",
    "thm-Phi-r",
    "thm-Phitau",
    "thm-Phitau-r",
    "thm2a",
    "thm2b",
    "thm3a",
    "thm3b",
    "thm3c",
    "thm4a",
    "thm4b",
    "thm5a",
    "thm5b",
    "thm5c",
    "thm-rk",
    "cor-rk-cong",
];

impl IdentityId {
    pub fn parse(key: &str, params: Params) -> Result<Self> {
        let need = |value: Option<u64>, param: &'static str| -> Result<u64> {
            match value {
                None => Err(Error::MissingParameter {
                    id: key.to_string(),
                    param,
                }),
                Some(0) => Err(Error::NonPositive {
                    what: param,
                    value: 0,
                }),
                Some(v) => Ok(v),
            }
        };
        use IdentityId::*;
        Ok(match key {
            "pent-product" => Product(ProductIdentity::Pentagonal),
            "gauss-tri" => Product(ProductIdentity::GaussTriangular),
            "gauss-sq" => Product(ProductIdentity::GaussSquare),
            "jacobi-triple" => Product(ProductIdentity::JacobiTriple),
            "eq3-p" => PartitionRecurrence,
            "eq4-q" => DistinctPartitionRecurrence,
            "eq5-sigma" => DivisorSumRecurrence,
            "thm1-generic" => GenericBridge,
            "thm-phi" => Totient,
            "thm-tau" => DivisorCount,
            "thm-lambda" => Liouville,
            "thm-mobius" => Mobius,
            "thm-ppsi" => RelPrimePartitions,
            "thm-qpsi" => RelPrimeDistinctPartitions,
            "thm-cpsi" => RelPrimeCompositions,
            "thm-cpsi-r" => RelPrimeCompositionsR(need(params.r, "r")?),
            "thm-r2" => TwoSquares,
            "thm-r4" => FourSquares,
            "thm-r8" => EightSquares,
            "thm-Phi" => Subsets,
            "thm-Phi-r" => SubsetsR(need(params.r, "r")?),
            "thm-Phitau" => DivisorSubsets,
            "thm-Phitau-r" => DivisorSubsetsR(need(params.r, "r")?),
            "thm2a" => Thm2a,
            "thm2b" => Thm2b,
            "thm3a" => Thm3a,
            "thm3b" => Thm3b,
            "thm3c" => Thm3c,
            "thm4a" => Thm4a,
            "thm4b" => Thm4b {
                literal: params.literal,
            },
            "thm5a" => Thm5a,
            "thm5b" => Thm5b,
            "thm5c" => Thm5c,
            "thm-rk" => SquaresRecurrence(need(params.k, "k")?),
            "cor-rk-cong" => SquaresCongruence(need(params.k, "k")?),
            _ => return Err(Error::UnknownIdentity(key.to_string())),
        })
    }

    /// Every entry in catalog order, filling absent `r`/`k` with defaults.
    pub fn catalog(params: Params) -> Vec<IdentityId> {
        let filled = Params {
            r: Some(params.r.unwrap_or(DEFAULT_R)),
            k: Some(params.k.unwrap_or(DEFAULT_K)),
            literal: params.literal,
        };
        KEYS.iter()
            .map(|key| IdentityId::parse(key, filled).expect("catalog keys parse"))
            .collect()
    }

    pub fn key(&self) -> &'static str {
        use IdentityId::*;
        match self {
            Product(p) => p.key(),
            PartitionRecurrence => "eq3-p",
            DistinctPartitionRecurrence => "eq4-q",
            DivisorSumRecurrence => "eq5-sigma",
            GenericBridge => "thm1-generic",
            Totient => "thm-phi",
            DivisorCount => "thm-tau",
            Liouville => "thm-lambda",
            Mobius => "thm-mobius",
            RelPrimePartitions => "thm-ppsi",
            RelPrimeDistinctPartitions => "thm-qpsi",
            RelPrimeCompositions => "thm-cpsi",
            RelPrimeCompositionsR(_) => "thm-cpsi-r",
            TwoSquares => "thm-r2",
            FourSquares => "thm-r4",
            EightSquares => "thm-r8",
            Subsets => "thm-Phi",
            SubsetsR(_) => "thm-Phi-r",
            DivisorSubsets => "thm-Phitau",
            DivisorSubsetsR(_) => "thm-Phitau-r",
            Thm2a => "thm2a",
            Thm2b => "thm2b",
            Thm3a => "thm3a",
            Thm3b => "thm3b",
            Thm3c => "thm3c",
            Thm4a => "thm4a",
            Thm4b { .. } => "thm4b",
            Thm5a => "thm5a",
            Thm5b => "thm5b",
            Thm5c => "thm5c",
            SquaresRecurrence(_) => "thm-rk",
            SquaresCongruence(_) => "cor-rk-cong",
        }
    }

    /// First `n` at which the identity is stated.
    pub fn domain_start(&self) -> u64 {
        use IdentityId::*;
        match self {
            Product(_) | DistinctPartitionRecurrence => 0,
            Thm2a | Thm2b | Thm3a | Thm3b | Thm3c | Thm4a | Thm4b { .. } => 0,
            Mobius | Thm5c => 2,
            _ => 1,
        }
    }

    /// Largest `n` the CLI verifies by default before capping.
    pub fn cost_ceiling(&self) -> u64 {
        use IdentityId::*;
        match self {
            Product(_) => 5000,
            TwoSquares | FourSquares | EightSquares | SquaresRecurrence(_)
            | SquaresCongruence(_) => 300,
            Subsets | SubsetsR(_) | DivisorSubsets | DivisorSubsetsR(_) => 300,
            _ => 2000,
        }
    }

    fn r(&self) -> Option<u64> {
        match self {
            IdentityId::RelPrimeCompositionsR(r)
            | IdentityId::SubsetsR(r)
            | IdentityId::DivisorSubsetsR(r) => Some(*r),
            _ => None,
        }
    }

    fn k(&self) -> Option<u64> {
        match self {
            IdentityId::SquaresRecurrence(k) | IdentityId::SquaresCongruence(k) => Some(*k),
            _ => None,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())?;
        if let Some(r) = self.r() {
            write!(f, "[r={r}]")?;
        }
        if let Some(k) = self.k() {
            write!(f, "[k={k}]")?;
        }
        if let IdentityId::Thm4b { literal: true } = self {
            f.write_str("[literal]")?;
        }
        Ok(())
    }
}

/// Left and right sides of one identity at one `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl Evaluation {
    fn new(lhs: impl Into<BigInt>, rhs: impl Into<BigInt>) -> Self {
        Evaluation {
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }

    pub fn residual(&self) -> BigInt {
        &self.lhs - &self.rhs
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn sign(exponent: u64) -> i64 {
    if exponent % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Both sides of a product identity, one pair per printed form.
type ProductSides = Vec<(Series, Series)>;

/// Evaluates catalog identities at any `n ≤ n_max`, sharing ingredient tables.
///
/// Safe to share across threads; tables are built on first use.
pub struct Evaluator {
    ingredients: Ingredients,
    products: Mutex<Vec<(ProductIdentity, Arc<ProductSides>)>>,
}

impl Evaluator {
    pub fn new(n_max: u64) -> Self {
        Evaluator {
            ingredients: Ingredients::new(n_max),
            products: Mutex::new(Vec::new()),
        }
    }

    pub fn n_max(&self) -> u64 {
        self.ingredients.n_max()
    }

    fn values(&self, key: TableKey) -> Arc<crate::arith::FunctionTable> {
        self.ingredients.table(key)
    }

    fn product_sides(&self, which: ProductIdentity) -> Arc<ProductSides> {
        if let Some((_, sides)) = self
            .products
            .lock()
            .expect("cache poisoned")
            .iter()
            .find(|(p, _)| *p == which)
        {
            return Arc::clone(sides);
        }
        let sides = Arc::new(which.sides(self.n_max() as usize));
        let mut cache = self.products.lock().expect("cache poisoned");
        if let Some((_, existing)) = cache.iter().find(|(p, _)| *p == which) {
            return Arc::clone(existing);
        }
        cache.push((which, Arc::clone(&sides)));
        sides
    }

    /// `Σ_{k=1}^{n} g(k) ω(n-k)` over a cached table.
    fn thm1_lhs(&self, g: TableKey, n: u64) -> BigInt {
        lhs_with(self.ingredients.omega(), self.values(g).values(), n)
    }

    /// `Σ_{m=1}^{n} f(m) ω_m(n-m)` over a cached table.
    fn thm1_rhs(&self, f: TableKey, n: u64) -> BigInt {
        rhs_with(self.ingredients.omega(), self.values(f).values(), n)
    }

    fn omega(&self, m: i64) -> i64 {
        self.ingredients.omega().get(m)
    }

    fn omega_prime(&self, n: u64) -> i64 {
        if n % 2 == 0 {
            self.omega((n / 2) as i64)
        } else {
            0
        }
    }

    pub fn evaluate(&self, id: IdentityId, n: u64) -> Result<Evaluation> {
        if n < id.domain_start() {
            return Err(Error::OutOfDomain {
                id: id.to_string(),
                n,
                start: id.domain_start(),
            });
        }
        if n > self.n_max() {
            return Err(Error::TableTooShort {
                name: format!("ingredients for {id}"),
                needed: n,
                max_n: self.n_max(),
            });
        }
        Ok(self.evaluate_unchecked(id, n))
    }

    /// Evaluation without the domain check, for observations outside the stated range.
    pub fn evaluate_unchecked(&self, id: IdentityId, n: u64) -> Evaluation {
        use IdentityId::*;
        let ni = n as i64;
        let idx = n as usize;
        match id {
            Product(which) => {
                let sides = self.product_sides(which);
                // report the first pair that disagrees, else the primary pair
                let (lhs, rhs) = sides
                    .iter()
                    .find(|(l, r)| l.coeffs()[idx] != r.coeffs()[idx])
                    .unwrap_or(&sides[0]);
                Evaluation::new(lhs.coeffs()[idx].clone(), rhs.coeffs()[idx].clone())
            }
            PartitionRecurrence => {
                let p = self.values(TableKey::P);
                let lhs = (0..=n).fold(BigInt::zero(), |acc, k| {
                    acc + &p.values()[(n - k) as usize] * self.omega(k as i64)
                });
                Evaluation::new(lhs, 0)
            }
            DistinctPartitionRecurrence => {
                let q = self.values(TableKey::Q);
                let lhs = (0..=n).fold(BigInt::zero(), |acc, k| {
                    acc + &q.values()[(n - k) as usize] * self.omega(k as i64)
                });
                Evaluation::new(lhs, self.omega_prime(n))
            }
            DivisorSumRecurrence => Evaluation::new(
                self.thm1_lhs(TableKey::Sigma(SigmaKind::All), n),
                -ni * self.omega(ni),
            ),
            GenericBridge => Evaluation::new(
                self.thm1_lhs(TableKey::GenericG, n),
                self.thm1_rhs(TableKey::GenericF, n),
            ),
            Totient => Evaluation::new(
                self.thm1_lhs(TableKey::Identity, n),
                self.thm1_rhs(TableKey::Phi, n),
            ),
            DivisorCount => Evaluation::new(
                self.thm1_lhs(TableKey::Tau, n),
                self.thm1_rhs(TableKey::Ones, n),
            ),
            Liouville => Evaluation::new(
                self.thm1_lhs(TableKey::DeltaS, n),
                self.thm1_rhs(TableKey::Liouville, n),
            ),
            Mobius => Evaluation::new(self.omega(ni - 1), self.thm1_rhs(TableKey::Mobius, n)),
            RelPrimePartitions => {
                Evaluation::new(-self.omega(ni), self.thm1_rhs(TableKey::PPsi, n))
            }
            RelPrimeDistinctPartitions => Evaluation::new(
                self.thm1_rhs(TableKey::QPsi, n),
                -self.omega(ni) + self.omega_prime(n),
            ),
            RelPrimeCompositions => {
                let lhs = (1..=n).fold(BigInt::zero(), |acc, k| {
                    acc + (BigInt::from(1) << (k - 1)) * self.omega((n - k) as i64)
                });
                Evaluation::new(lhs, self.thm1_rhs(TableKey::CPsi, n))
            }
            RelPrimeCompositionsR(r) => Evaluation::new(
                self.thm1_lhs(TableKey::CompositionsR(r), n),
                self.thm1_rhs(TableKey::CPsiR(r), n),
            ),
            TwoSquares => Evaluation::new(
                self.thm1_lhs(TableKey::R(2), n),
                self.thm1_rhs(TableKey::Eta(EtaKind::One), n) * 4,
            ),
            FourSquares => Evaluation::new(
                self.thm1_lhs(TableKey::R(4), n),
                self.thm1_rhs(TableKey::Eta(EtaKind::Two), n) * 8,
            ),
            EightSquares => {
                let r8 = self.values(TableKey::R(8));
                let lhs = (1..=n).fold(BigInt::zero(), |acc, k| {
                    acc + &r8.values()[k as usize] * (sign(k) * self.omega((n - k) as i64))
                });
                Evaluation::new(lhs, self.thm1_rhs(TableKey::CubeSigned, n) * 16)
            }
            Subsets => Evaluation::new(
                self.thm1_lhs(TableKey::SubsetsAll, n),
                self.thm1_rhs(TableKey::Nathanson(None, SubsetGround::Interval), n),
            ),
            SubsetsR(r) => Evaluation::new(
                self.thm1_lhs(TableKey::SubsetsR(r), n),
                self.thm1_rhs(TableKey::Nathanson(Some(r), SubsetGround::Interval), n),
            ),
            DivisorSubsets => Evaluation::new(
                self.thm1_lhs(TableKey::DivisorSubsetsAll, n),
                self.thm1_rhs(TableKey::Nathanson(None, SubsetGround::Divisors), n),
            ),
            DivisorSubsetsR(r) => Evaluation::new(
                self.thm1_lhs(TableKey::DivisorSubsetsR(r), n),
                self.thm1_rhs(TableKey::Nathanson(Some(r), SubsetGround::Divisors), n),
            ),
            Thm2a => {
                let qq = self.values(TableKey::Qq);
                let lhs = (0..=n).fold(BigInt::zero(), |acc, k| {
                    acc + &qq.values()[k as usize] * (sign(k) * self.omega((n - k) as i64))
                });
                let rhs = if n == 0 {
                    1
                } else if numbers::delta_s(n) == 1 {
                    2 * sign(n)
                } else {
                    0
                };
                Evaluation::new(lhs, rhs)
            }
            Thm2b => {
                let q = self.values(TableKey::Q);
                let mut lhs = q.values()[idx].clone();
                for (square, j) in squares(n) {
                    lhs += &q.values()[(n - square) as usize] * (2 * sign(j));
                }
                Evaluation::new(lhs, self.omega(ni))
            }
            Thm3a => {
                let q = self.values(TableKey::Q);
                let lhs = (0..=n / 2).fold(BigInt::zero(), |acc, k| {
                    acc + &q.values()[(n - 2 * k) as usize] * self.omega(k as i64)
                });
                Evaluation::new(lhs, numbers::delta_t(n))
            }
            Thm3b => {
                let p = self.values(TableKey::P);
                let lhs = (0..=n / 2).fold(BigInt::zero(), |acc, k| {
                    acc + &p.values()[k as usize] * numbers::delta_t(n - 2 * k)
                });
                Evaluation::new(lhs, self.values(TableKey::Q).values()[idx].clone())
            }
            Thm3c => {
                let qq = self.values(TableKey::Qq);
                let lhs = (0..=n).fold(BigInt::zero(), |acc, k| {
                    acc + &qq.values()[k as usize] * (sign(k) * numbers::delta_t(n - k))
                });
                Evaluation::new(lhs, self.omega_prime(n))
            }
            Thm4a => {
                let s = self.values(TableKey::SquareCompositions);
                let q = self.values(TableKey::Q);
                let lhs = (0..=n).fold(BigInt::zero(), |acc, k| {
                    let j = (n - k) as usize;
                    let inner = &q.values()[j] * 3 - self.omega(j as i64);
                    acc + &s.values()[k as usize] * inner * sign(k)
                });
                Evaluation::new(lhs, &q.values()[idx] * 2)
            }
            Thm4b { literal } => {
                let t = self.values(TableKey::TriangularCompositions);
                let qq = self.values(TableKey::Qq);
                let lhs = (0..=n).fold(BigInt::zero(), |acc, k| {
                    let j = n - k;
                    let shift = if literal { n } else { j };
                    let inner = &qq.values()[j as usize] * (2 * sign(j)) - self.omega_prime(shift);
                    acc + &t.values()[k as usize] * inner
                });
                Evaluation::new(lhs, &qq.values()[idx] * sign(n))
            }
            Thm5a => self.theta_sigma(SigmaKind::Odd, n),
            Thm5c => self.theta_sigma(SigmaKind::Alternating, n),
            Thm5b => {
                let odd = self.values(TableKey::Sigma(SigmaKind::Odd));
                let even = self.values(TableKey::Sigma(SigmaKind::Even));
                let lhs = (1..=n).fold(BigInt::zero(), |acc, k| {
                    let w = numbers::delta_t(n - k);
                    if w == 0 {
                        acc
                    } else {
                        acc + &odd.values()[k as usize] - &even.values()[k as usize]
                    }
                });
                Evaluation::new(lhs, ni * numbers::delta_t(n))
            }
            SquaresRecurrence(k) => {
                let all = self.values(TableKey::Sigma(SigmaKind::All));
                let odd = self.values(TableKey::Sigma(SigmaKind::Odd));
                let r = self.values(TableKey::R(k));
                let sum = (1..=n).fold(BigInt::zero(), |acc, i| {
                    let weight = &all.values()[i as usize] + &odd.values()[i as usize];
                    acc + weight * &r.values()[(n - i) as usize] * sign(n - i)
                });
                let rhs = &r.values()[idx] * (ni * -sign(n));
                Evaluation::new(sum * k, rhs)
            }
            SquaresCongruence(k) => {
                let lhs = if n.gcd(&k) == 1 {
                    self.values(TableKey::R(k)).values()[idx].mod_floor(&BigInt::from(k))
                } else {
                    BigInt::zero()
                };
                Evaluation::new(lhs, 0)
            }
        }
    }

    /// `σ(n) + σ_x(n) + 2Σ_{j≥1} (-1)^{j} (σ + σ_x)(n - j²) = 2(-1)^{n+1} n δ_s(n)`.
    fn theta_sigma(&self, kind: SigmaKind, n: u64) -> Evaluation {
        let all = self.values(TableKey::Sigma(SigmaKind::All));
        let other = self.values(TableKey::Sigma(kind));
        let both = |m: u64| &all.values()[m as usize] + &other.values()[m as usize];
        let mut lhs = both(n);
        for (square, j) in squares(n) {
            lhs += both(n - square) * (2 * sign(j));
        }
        let rhs = 2 * -sign(n) * n as i64 * numbers::delta_s(n);
        Evaluation::new(lhs, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(key: &str, n: u64) -> Evaluation {
        let id = IdentityId::parse(
            key,
            Params {
                r: Some(2),
                k: Some(3),
                literal: false,
            },
        )
        .unwrap();
        Evaluator::new(n.max(1)).evaluate(id, n).unwrap()
    }

    #[test]
    fn keys_round_trip() {
        let all = IdentityId::catalog(Params::default());
        assert_eq!(all.len(), KEYS.len());
        for (id, key) in all.iter().zip(KEYS) {
            assert_eq!(id.key(), key);
        }
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            IdentityId::parse("thm-Phi-r", Params::default()),
            Err(Error::MissingParameter {
                id: "thm-Phi-r".into(),
                param: "r"
            })
        );
        assert!(matches!(
            IdentityId::parse("thm-rk", Params::default()),
            Err(Error::MissingParameter { param: "k", .. })
        ));
        assert!(matches!(
            IdentityId::parse("thm-42", Params::default()),
            Err(Error::UnknownIdentity(_))
        ));
        let zero_k = Params {
            k: Some(0),
            ..Params::default()
        };
        assert!(IdentityId::parse("thm-rk", zero_k).is_err());
    }

    #[test]
    fn residual_examples() {
        let e = eval("eq3-p", 5);
        assert!(e.holds());
        let e = eval("thm2a", 4);
        assert_eq!(e.lhs, BigInt::from(2));
        assert!(e.holds());
        let e = eval("thm5b", 3);
        assert_eq!(e.lhs, BigInt::from(3));
        assert!(e.holds());
        assert!(eval("thm4b", 2).holds());
    }

    #[test]
    fn literal_thm4b_fails_at_two() {
        let id = IdentityId::Thm4b { literal: true };
        let e = Evaluator::new(2).evaluate(id, 2).unwrap();
        assert_eq!(e.residual(), BigInt::from(3));
        assert_eq!(id.to_string(), "thm4b[literal]");
    }

    #[test]
    fn domain_is_enforced() {
        let ev = Evaluator::new(10);
        assert!(matches!(
            ev.evaluate(IdentityId::Mobius, 1),
            Err(Error::OutOfDomain { start: 2, .. })
        ));
        assert!(matches!(
            ev.evaluate(IdentityId::Thm5c, 1),
            Err(Error::OutOfDomain { .. })
        ));
        assert!(ev.evaluate_unchecked(IdentityId::Thm5c, 1).holds());
        assert!(matches!(
            ev.evaluate(IdentityId::Thm2a, 11),
            Err(Error::TableTooShort { .. })
        ));
    }

    #[test]
    fn small_range_all_hold() {
        let ev = Evaluator::new(60);
        for id in IdentityId::catalog(Params::default()) {
            for n in id.domain_start()..=60 {
                let e = ev.evaluate(id, n).unwrap();
                assert!(e.holds(), "{id} fails at n={n}: {} vs {}", e.lhs, e.rhs);
            }
        }
    }
}
