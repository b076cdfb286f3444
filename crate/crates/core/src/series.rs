//! Truncated formal power series in `q` with big-integer coefficients.
//!
//! A [`Series`] carries its own truncation order `N` and stores the dense
//! coefficients of `q^0..=q^N`. Binary operations on operands of different
//! orders truncate to the smaller order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    /// Builds a series of order `coeffs.len() - 1`.
    ///
    /// Panics on an empty coefficient vector; a series always has a constant term.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least a constant term"
        );
        Series { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Series::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_fn<F>(order: usize, mut f: F) -> Self
    where
        F: FnMut(usize) -> BigInt,
    {
        Series::new((0..=order).map(&mut f).collect())
    }

    pub fn zero(order: usize) -> Self {
        Series::new(vec![BigInt::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^i`, or `None` beyond the truncation order.
    pub fn coeff(&self, i: usize) -> Option<&BigInt> {
        self.coeffs.get(i)
    }

    pub fn truncate(&self, order: usize) -> Series {
        Series::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn scale(&self, factor: &BigInt) -> Series {
        Series::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// The substitution `q -> -q`.
    pub fn negate_variable(&self) -> Series {
        Series::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Multiplies in place by `1 + sign * q^exponent`.
    fn mul_binomial_in_place(&mut self, exponent: usize, sign: Sign) {
        if exponent == 0 || exponent > self.order() {
            return;
        }
        for i in (exponent..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            match sign {
                Sign::Plus => hi[0] += &lo[i - exponent],
                Sign::Minus => hi[0] -= &lo[i - exponent],
            }
        }
    }

    /// Multiplicative inverse. Requires a constant term of `+1` or `-1`.
    pub fn reciprocal(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return Err(Error::NotInvertible(c0.clone()));
        }
        let negative = c0.is_negative();
        let order = self.order();
        let mut g: Vec<BigInt> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = if n == 0 {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            for i in 1..=n {
                let fi = &self.coeffs[i];
                if !fi.is_zero() {
                    acc -= fi * &g[n - i];
                }
            }
            g.push(if negative { -acc } else { acc });
        }
        Ok(Series::new(g))
    }

    /// The logarithmic derivative `q f'(q) / f(q)`.
    ///
    /// Solves `g * f = q f'` by forward substitution. A unit constant term
    /// always yields integer coefficients; any other nonzero constant term is
    /// accepted as long as every division comes out exact.
    pub fn q_dlog(&self) -> Result<Series> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let order = self.order();
        let mut g: Vec<BigInt> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = &self.coeffs[n] * BigInt::from(n);
            for i in 1..=n {
                let fi = &self.coeffs[i];
                if !fi.is_zero() {
                    acc -= fi * &g[n - i];
                }
            }
            let (quot, rem) = acc.div_rem(c0);
            if !rem.is_zero() {
                return Err(Error::NonIntegral { index: n });
            }
            g.push(quot);
        }
        Ok(Series::new(g))
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*q")?,
                _ => write!(f, "({c})*q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        Series::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        Series::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Series {
    type Output = Series;

    /// Cauchy product truncated to the smaller order.
    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series::new(out)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Series {
            type Output = Series;

            fn $method(self, rhs: Series) -> Series {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Series {
    type Output = Series;

    fn neg(self) -> Series {
        -&self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// One infinite factor `∏_{m≥1} (1 ± q^{first + (m-1)·stride})^exponent`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProductFactor {
    first: u64,
    stride: u64,
    sign: Sign,
    exponent: i32,
}

impl ProductFactor {
    pub fn new(first: u64, stride: u64, sign: Sign, exponent: i32) -> Result<Self> {
        if first == 0 {
            return Err(Error::InvalidFactor(
                "smallest exponent must be at least 1".into(),
            ));
        }
        if stride == 0 {
            return Err(Error::InvalidFactor("stride must be at least 1".into()));
        }
        Ok(ProductFactor {
            first,
            stride,
            sign,
            exponent,
        })
    }

    /// `∏ (1 - q^{stride·m})`, the Euler product dilated by `stride`.
    pub fn minus_multiples(stride: u64) -> Self {
        ProductFactor::new(stride, stride, Sign::Minus, 1).expect("stride >= 1")
    }

    /// `∏ (1 - q^{2m-1})`.
    pub fn minus_odd() -> Self {
        ProductFactor::new(1, 2, Sign::Minus, 1).expect("valid")
    }

    /// `∏ (1 + q^{2m-1})`.
    pub fn plus_odd() -> Self {
        ProductFactor::new(1, 2, Sign::Plus, 1).expect("valid")
    }

    /// `∏ (1 + q^m)`.
    pub fn plus_all() -> Self {
        ProductFactor::new(1, 1, Sign::Plus, 1).expect("valid")
    }

    pub fn pow(mut self, exponent: i32) -> Self {
        self.exponent = exponent;
        self
    }

    pub fn exponent(&self) -> i32 {
        self.exponent
    }

    /// Exponents `first, first + stride, ...` not exceeding `order`.
    fn exponents(&self, order: usize) -> impl Iterator<Item = usize> + '_ {
        let order = order as u64;
        (0..)
            .map(move |m: u64| self.first + m * self.stride)
            .take_while(move |&e| e <= order)
            .map(|e| e as usize)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ProductSpec {
    factors: Vec<ProductFactor>,
}

impl ProductSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, factor: ProductFactor) -> Self {
        self.factors.push(factor);
        self
    }

    /// `∏_{n≥1} (1 - q^n)`.
    pub fn euler() -> Self {
        ProductSpec::new().with(ProductFactor::minus_multiples(1))
    }

    pub fn factors(&self) -> &[ProductFactor] {
        &self.factors
    }
}

/// Expands the infinite product described by `spec` up to `q^order`.
///
/// Positive powers are applied one binomial at a time; negative powers are
/// collected into a denominator and inverted once.
pub fn product_expand(spec: &ProductSpec, order: usize) -> Series {
    let mut numerator = Series::one(order);
    let mut denominator = Series::one(order);
    let mut has_denominator = false;
    for factor in &spec.factors {
        let target = match factor.exponent.signum() {
            0 => continue,
            1 => &mut numerator,
            _ => {
                has_denominator = true;
                &mut denominator
            }
        };
        for _ in 0..factor.exponent.unsigned_abs() {
            for e in factor.exponents(order) {
                target.mul_binomial_in_place(e, factor.sign);
            }
        }
    }
    if !has_denominator {
        return numerator;
    }
    let inverse = denominator
        .reciprocal()
        .expect("product of (1 ± q^e) factors has constant term 1");
    &numerator * &inverse
}
