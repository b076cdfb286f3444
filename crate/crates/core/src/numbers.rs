//! Pentagonal signs and the square/triangular indicators.
//!
//! `ω(m)` is the coefficient of `q^m` in `∏(1 - q^n)`: `(-1)^k` when `m` is a
//! generalized pentagonal number `(3k² ± k)/2`, zero elsewhere and for `m < 0`.

use num_integer::Roots;

use crate::error::{Error, Result};

fn exact_sqrt(n: u128) -> Option<u128> {
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

/// Pentagonal sign `ω(m)`.
///
/// `m` is generalized pentagonal iff `24m + 1` is a square whose root is
/// `6k ± 1`; the sign is `(-1)^k`.
pub fn omega(m: i64) -> i64 {
    if m < 0 {
        return 0;
    }
    let Some(root) = exact_sqrt(24 * m as u128 + 1) else {
        return 0;
    };
    let k = match root % 6 {
        1 => (root - 1) / 6,
        5 => (root + 1) / 6,
        _ => return 0,
    };
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `ω_k(m) = ω(m) + ω(m-k) + ω(m-2k) + ⋯`, the coefficients of `∏(1-q^n)/(1-q^k)`.
pub fn omega_k(k: i64, m: i64) -> Result<i64> {
    if k <= 0 {
        return Err(Error::NonPositive {
            what: "stride k",
            value: k,
        });
    }
    if m < 0 {
        return Ok(0);
    }
    Ok((0..=m / k).map(|j| omega(m - j * k)).sum())
}

/// `ω(n/2)` for even `n`, zero for odd `n`: the coefficients of `∏(1 - q^{2m})`.
pub fn omega_prime(n: u64) -> i64 {
    if n % 2 == 0 {
        omega((n / 2) as i64)
    } else {
        0
    }
}

/// 1 if `n` is a perfect square (including 0), else 0.
pub fn delta_s(n: u64) -> i64 {
    exact_sqrt(n as u128).is_some() as i64
}

/// 1 if `n = m(m+1)/2` for some `m ≥ 0`, else 0.
pub fn delta_t(n: u64) -> i64 {
    exact_sqrt(8 * n as u128 + 1).is_some() as i64
}

/// Generalized pentagonal numbers `1 ≤ m ≤ limit` in ascending order, each with `ω(m)`.
pub fn generalized_pentagonals(limit: u64) -> impl Iterator<Item = (u64, i64)> {
    (1u64..)
        .flat_map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            [((3 * k * k - k) / 2, sign), ((3 * k * k + k) / 2, sign)]
        })
        .take_while(move |&(m, _)| m <= limit)
}

/// Squares `j²` with `1 ≤ j² ≤ limit`, ascending, paired with `j`.
pub fn squares(limit: u64) -> impl Iterator<Item = (u64, u64)> {
    (1u64..)
        .map(|j| (j * j, j))
        .take_while(move |&(s, _)| s <= limit)
}

/// Dense `ω(0..=n_max)` for inner loops that would otherwise call [`omega`] repeatedly.
#[derive(Clone, Debug)]
pub struct OmegaTable {
    values: Vec<i8>,
}

impl OmegaTable {
    pub fn new(n_max: u64) -> Self {
        let mut values = vec![0i8; n_max as usize + 1];
        values[0] = 1;
        for (m, sign) in generalized_pentagonals(n_max) {
            values[m as usize] = sign as i8;
        }
        OmegaTable { values }
    }

    pub fn max_n(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    /// `ω(m)`; zero for negative `m`. Panics past the table end.
    pub fn get(&self, m: i64) -> i64 {
        if m < 0 {
            0
        } else {
            self.values[m as usize] as i64
        }
    }

    /// `ω_k(m)` by direct summation over the table. Requires `k ≥ 1`.
    pub fn omega_k(&self, k: u64, m: i64) -> i64 {
        debug_assert!(k >= 1);
        if m < 0 {
            return 0;
        }
        self.values[..=m as usize]
            .iter()
            .rev()
            .step_by(k as usize)
            .map(|&v| v as i64)
            .sum()
    }

    /// `ω_k(0..=max_n)` via `ω_k(m) = ω(m) + ω_k(m - k)`.
    pub fn cumulative(&self, k: u64) -> Vec<i64> {
        assert!(k >= 1, "stride must be positive");
        let k = k as usize;
        let mut out = Vec::with_capacity(self.values.len());
        for m in 0..self.values.len() {
            let tail = if m >= k { out[m - k] } else { 0 };
            out.push(self.values[m] as i64 + tail);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn omega_examples() {
        assert_eq!(omega(0), 1);
        assert_eq!(omega(5), 1);
        assert_eq!(omega(7), 1);
        assert_eq!(omega(12), -1);
        assert_eq!(omega(-3), 0);
        let first: Vec<i64> = (0..=7).map(omega).collect();
        assert_eq!(first, [1, -1, -1, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn omega_k_examples() {
        assert_eq!(omega_k(2, 5), Ok(0));
        assert_eq!(omega_k(1, 3), Ok(-1));
        assert_eq!(omega_k(7, 3), Ok(0));
        assert_eq!(omega_k(3, -1), Ok(0));
        assert!(omega_k(0, 3).is_err());
        assert!(omega_k(-2, 3).is_err());
    }

    #[test]
    fn omega_prime_examples() {
        assert_eq!(omega_prime(0), 1);
        assert_eq!(omega_prime(4), -1);
        assert_eq!(omega_prime(5), 0);
    }

    #[test]
    fn indicator_examples() {
        assert_eq!(delta_s(0), 1);
        assert_eq!(delta_s(49), 1);
        assert_eq!(delta_s(50), 0);
        assert_eq!(delta_t(0), 1);
        assert_eq!(delta_t(6), 1);
        assert_eq!(delta_t(7), 0);
    }

    #[test]
    fn indicator_spot_checks() {
        for n in 1..=100u64 {
            assert_eq!(delta_s(n * n), 1);
            assert_eq!(delta_s(n * n + 1), 0);
            let tri = n * (n + 1) / 2;
            assert_eq!(delta_t(tri), 1);
            assert_eq!(delta_t(tri + 1), 0, "{}", tri + 1);
        }
    }

    #[test]
    fn pentagonal_count_matches_enumeration() {
        let mut enumerated = std::collections::BTreeSet::new();
        for k in 0i64..100 {
            for m in [(3 * k * k - k) / 2, (3 * k * k + k) / 2] {
                if m <= 1000 {
                    enumerated.insert(m);
                }
            }
        }
        let nonzero = (0..=1000).filter(|&m| omega(m) != 0).count();
        assert_eq!(nonzero, enumerated.len());
    }

    #[test]
    fn omega_k_telescopes() {
        for k in 1..=50i64 {
            for m in 0..=500i64 {
                assert_eq!(
                    omega_k(k, m).unwrap() - omega_k(k, m - k).unwrap(),
                    omega(m)
                );
            }
        }
    }

    #[test]
    fn table_agrees_with_closed_form() {
        let table = OmegaTable::new(600);
        for m in -3..=600 {
            assert_eq!(table.get(m), omega(m));
        }
        for k in [1u64, 2, 5, 17] {
            let cumulative = table.cumulative(k);
            for m in 0..=600i64 {
                let direct = omega_k(k as i64, m).unwrap();
                assert_eq!(table.omega_k(k, m), direct);
                assert_eq!(cumulative[m as usize], direct);
            }
        }
    }

    #[test]
    fn helper_iterators() {
        let pent: Vec<_> = generalized_pentagonals(12).collect();
        assert_eq!(pent, [(1, -1), (2, -1), (5, 1), (7, 1), (12, -1)]);
        let sq: Vec<_> = squares(10).map(|(s, _)| s).collect();
        assert_eq!(sq, [1, 4, 9]);
    }

    proptest! {
        #[test]
        fn omega_sign_matches_pentagonal_index(k in 0i64..20_000) {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(omega((3 * k * k - k) / 2), sign);
            prop_assert_eq!(omega((3 * k * k + k) / 2), sign);
        }
    }
}
